"""
Structure file format (``.hcs``).

A file is UTF-8 text with LF line endings::

    # comments run to the end of the line
    kind = PostHomLie
    field = Fp 5
    dim C = 2
    map alpha C {
      e1 -> 1 e1
      e2 -> 1 e2
    }
    comap gamma C -> (C, C) {
      e1 -> 1 (e1, e2) + 4 (e2, e1)
      e2 -> 0
    }

Rota-Baxter packages add ``rb weight = <scalar>`` and ``map rb``; comodule
files add ``base = <kind>``, a second ``dim`` line, ``map alpha_m`` and
structure maps typed ``M -> (C, M)``. ``kind = TridendAlgebra`` files hold
algebra constants: products ``left``, ``right`` and ``dot`` written as comaps
whose row e_k lists the pairs (e_i, e_j) with e_k in e_i ∘ e_j.

Emission is canonical: fixed header order, maps sorted by name, every row
listed, canonical scalars.
"""

import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from comodules import BASE_KIND, ComoduleKind, ComodulePackage
from structures import RB_KINDS, RotaBaxter, StructureKind, StructurePackage, TridendriformAlgebra, dualize_algebra
from structures.duality import PRODUCT_TO_COMAP
from tensorcore import FieldSpec, SpaceId, TensorCoreError, TensorMap
from tensorcore import NonPrimeModulus as FieldNonPrimeModulus

from .errors import DimMismatch, FormatSyntaxError, NonPrimeModulus, UnknownKind

logger = logging.getLogger(__name__)

Package = Union[StructurePackage, ComodulePackage, TridendriformAlgebra]

FILE_SUFFIX = ".hcs"

# algebra files store e_i ∘ e_j = sum_k c e_k as row e_k -> c (e_i, e_j)
ALGEBRA_KIND = "TridendAlgebra"

_HEADER = re.compile(r"^(?P<key>kind|field|base|rb weight|dim\s+(?P<space>\w+))\s*=\s*(?P<value>\S.*)$")
_MAP = re.compile(r"^map\s+(?P<name>\w+)\s+(?P<dom>\w+)\s*\{(?P<rest>.*)$")
_COMAP = re.compile(r"^comap\s+(?P<name>\w+)\s+(?P<dom>\w+)\s*->\s*\(\s*(?P<c1>\w+)\s*,\s*(?P<c2>\w+)\s*\)\s*\{(?P<rest>.*)$")
_ROW = re.compile(r"^e(?P<i>\d+)\s*->\s*(?P<terms>\S.*)$")
_COEF = r"(?P<coef>[+-]?\d+(?:/\d+)?)"
_TERM1 = re.compile(rf"^{_COEF}\s+e(?P<j>\d+)$")
_TERM2 = re.compile(rf"^{_COEF}\s*\(\s*e(?P<j>\d+)\s*,\s*e(?P<k>\d+)\s*\)$")


class _Block:
    """A map or comap block being read."""

    def __init__(self, name: str, dom: str, cod: Tuple[str, ...], line: int):
        self.name = name
        self.dom = dom
        self.cod = cod
        self.line = line
        self.rows: Dict[int, List[Tuple[Fraction, Tuple[int, ...]]]] = {}


class _Parser:
    """Line-oriented reader for one structure file."""

    def __init__(self, text: str):
        self.lines = text.split("\n")
        self.headers: Dict[str, Tuple[str, int]] = {}
        self.dims: Dict[str, int] = {}
        self.blocks: Dict[str, _Block] = {}

    def fail(self, message: str, line: int, column: int = 1, error=FormatSyntaxError):
        raise error(message, line, column)

    def parse(self) -> Package:
        block: Optional[_Block] = None
        for number, raw in enumerate(self.lines, start=1):
            if "\r" in raw:
                self.fail("CR line endings are not allowed", number, raw.index("\r") + 1)
            line = raw.split("#", 1)[0].rstrip()
            stripped = line.strip()
            if not stripped:
                continue
            column = len(line) - len(line.lstrip()) + 1
            if block is not None:
                block = self._block_line(block, stripped, number, column)
                continue
            block = self._top_line(stripped, number, column)
        if block is not None:
            self.fail(f"Block {block.name} is never closed", block.line)
        return self._build()

    # -- lines -----------------------------------------------------------

    def _top_line(self, text: str, number: int, column: int) -> Optional[_Block]:
        header = _HEADER.match(text)
        if header:
            key = "dim" if header.group("space") else header.group("key")
            value = header.group("value").strip()
            if key == "dim":
                space = header.group("space")
                if space in self.dims:
                    self.fail(f"Duplicate dim for space {space}", number, column)
                if not value.isdigit() or int(value) < 1:
                    self.fail(f"Dimension must be a positive integer, got {value!r}", number, column)
                self.dims[space] = int(value)
            else:
                if key in self.headers:
                    self.fail(f"Duplicate header {key!r}", number, column)
                self.headers[key] = (value, number)
            return None

        for pattern, arity in ((_MAP, 1), (_COMAP, 2)):
            match = pattern.match(text)
            if not match:
                continue
            name = match.group("name")
            if name in self.blocks:
                self.fail(f"Map {name} is defined twice", number, column)
            cod = (match.group("dom"),) if arity == 1 else (match.group("c1"), match.group("c2"))
            for space in (match.group("dom"), *cod):
                if space not in self.dims:
                    self.fail(f"Space {space} has no dim header", number, column, DimMismatch)
            block = _Block(name, match.group("dom"), cod, number)
            self.blocks[name] = block
            rest = match.group("rest").strip()
            if rest:
                return self._block_line(block, rest, number, column + text.index(rest))
            return block

        key = text.split("=", 1)[0].strip() if "=" in text else text.split()[0]
        self.fail(f"Unknown key or statement {key!r}", number, column)

    def _block_line(self, block: _Block, text: str, number: int, column: int) -> Optional[_Block]:
        closed = text.endswith("}")
        body = text[:-1].strip() if closed else text
        if "}" in body or "{" in body:
            self.fail("Unexpected brace", number, column + max(body.find("}"), body.find("{")))
        for row in filter(None, (part.strip() for part in body.split(";"))):
            self._row(block, row, number, column + text.index(row))
        return None if closed else block

    def _row(self, block: _Block, text: str, number: int, column: int) -> None:
        match = _ROW.match(text)
        if not match:
            self.fail(f"Expected 'e<i> -> terms', got {text!r}", number, column)
        i = int(match.group("i"))
        if not 1 <= i <= self.dims[block.dom]:
            self.fail(f"Basis index e{i} out of range for {block.dom}", number, column, DimMismatch)
        if i in block.rows:
            self.fail(f"Row e{i} of {block.name} is given twice", number, column)
        terms_text = match.group("terms")
        terms_column = column + text.index(terms_text)
        terms: List[Tuple[Fraction, Tuple[int, ...]]] = []
        if terms_text.strip() != "0":
            offset = 0
            for part in terms_text.split("+"):
                term = part.strip()
                position = terms_column + offset + (part.index(term) if term else 0)
                offset += len(part) + 1
                terms.append(self._term(block, term, number, position))
        block.rows[i] = terms

    def _term(self, block: _Block, text: str, number: int, column: int) -> Tuple[Fraction, Tuple[int, ...]]:
        pattern = _TERM1 if len(block.cod) == 1 else _TERM2
        match = pattern.match(text)
        if not match:
            shape = "c e<j>" if len(block.cod) == 1 else "c (e<j>, e<k>)"
            self.fail(f"Expected a term '{shape}', got {text!r}", number, column)
        index = (int(match.group("j")),) if len(block.cod) == 1 else (int(match.group("j")), int(match.group("k")))
        for j, space in zip(index, block.cod):
            if not 1 <= j <= self.dims[space]:
                self.fail(f"Basis index e{j} out of range for {space}", number, column, DimMismatch)
        try:
            coefficient = Fraction(match.group("coef"))
        except ZeroDivisionError:
            self.fail("Zero denominator", number, column)
        return coefficient, index

    # -- assembly --------------------------------------------------------

    def _header(self, key: str) -> Tuple[str, int]:
        if key not in self.headers:
            self.fail(f"Missing header {key!r}", 0)
        return self.headers[key]

    def _field(self) -> FieldSpec:
        value, number = self._header("field")
        try:
            return FieldSpec.parse(value)
        except FieldNonPrimeModulus as e:
            raise NonPrimeModulus(str(e), number, 1) from e
        except TensorCoreError as e:
            raise FormatSyntaxError(str(e), number, 1) from e

    def _tensor(self, block: _Block, spaces: Dict[str, SpaceId], field: FieldSpec) -> TensorMap:
        try:
            return TensorMap.from_rows(spaces[block.dom], tuple(spaces[c] for c in block.cod), field, block.rows)
        except TensorCoreError as e:
            raise FormatSyntaxError(f"Map {block.name}: {e}", block.line, 1) from e

    def _kind(self) -> Union[StructureKind, ComoduleKind, str]:
        value, number = self._header("kind")
        if value == ALGEBRA_KIND:
            return value
        for enum in (StructureKind, ComoduleKind):
            try:
                return enum(value)
            except ValueError:
                continue
        raise UnknownKind(f"Unknown kind {value!r}", number, 1)

    def _build(self) -> Package:
        kind = self._kind()
        field = self._field()
        spaces = {name: SpaceId(name, dim) for name, dim in self.dims.items()}
        tensors = {name: self._tensor(block, spaces, field) for name, block in self.blocks.items()}

        if kind == ALGEBRA_KIND:
            return self._algebra(field, spaces, tensors)
        if isinstance(kind, ComoduleKind):
            return self._comodule(kind, field, spaces, tensors)
        allowed = {"kind", "field", "rb weight"}
        return self._structure(kind, field, spaces, tensors, allowed)

    def _base_space(self, spaces: Dict[str, SpaceId]) -> SpaceId:
        if "alpha" in self.blocks:
            return spaces[self.blocks["alpha"].dom]
        comap_doms = {b.dom for b in self.blocks.values() if len(b.cod) == 2 and b.cod == (b.dom, b.dom)}
        if len(comap_doms) == 1:
            return spaces[comap_doms.pop()]
        if len(spaces) == 1:
            return next(iter(spaces.values()))
        self.fail("Cannot tell which space carries the structure; add map alpha", 0)

    def _structure(self, kind: StructureKind, field: FieldSpec, spaces: Dict[str, SpaceId],
                   tensors: Dict[str, TensorMap], allowed: set) -> StructurePackage:
        for key, (_, number) in self.headers.items():
            if key not in allowed:
                self.fail(f"Header {key!r} does not apply to {kind.value}", number)
        space = self._base_space(spaces)
        alpha = tensors.pop("alpha", None) or TensorMap.identity(space, field)
        rb = None
        if kind in RB_KINDS:
            weight, number = self._header("rb weight")
            if "rb" not in tensors:
                self.fail("Rota-Baxter kinds need map rb", 0)
            try:
                rb = RotaBaxter(tensors.pop("rb"), field.scalar(weight))
            except (ValueError, ZeroDivisionError, TensorCoreError) as e:
                raise FormatSyntaxError(f"Bad rb weight {weight!r}", number, 1) from e
        elif "rb weight" in self.headers or "rb" in tensors:
            self.fail(f"{kind.value} takes no Rota-Baxter data", self.headers.get("rb weight", ("", 0))[1])
        return StructurePackage(kind, space, field, alpha, tensors, rb)

    def _comodule(self, kind: ComoduleKind, field: FieldSpec, spaces: Dict[str, SpaceId],
                  tensors: Dict[str, TensorMap]) -> ComodulePackage:
        value, number = self._header("base")
        if value != BASE_KIND[kind].value:
            raise UnknownKind(f"{kind.value} needs base = {BASE_KIND[kind].value}, got {value!r}", number, 1)
        if "alpha_m" not in tensors:
            self.fail("Comodule files need map alpha_m", 0)
        alpha_m = tensors.pop("alpha_m")
        mspace = alpha_m.dom
        structure = {n: t for n, t in tensors.items() if t.dom == mspace and n != "alpha_m"}
        base_tensors = {n: t for n, t in tensors.items() if n not in structure}
        base = self._structure(BASE_KIND[kind], field, spaces, base_tensors, {"kind", "field", "base"})
        return ComodulePackage(kind, base, mspace, alpha_m, structure)

    def _algebra(self, field: FieldSpec, spaces: Dict[str, SpaceId],
                 tensors: Dict[str, TensorMap]) -> TridendriformAlgebra:
        for key, (_, number) in self.headers.items():
            if key not in ("kind", "field"):
                self.fail(f"Header {key!r} does not apply to {ALGEBRA_KIND}", number)
        space = self._base_space(spaces)
        expected = {"alpha", *PRODUCT_TO_COMAP}
        unexpected = sorted(set(tensors) - expected)
        if unexpected:
            self.fail(f"{ALGEBRA_KIND} takes products left, right, dot; got {unexpected}", 0)
        alpha = tensors["alpha"] if "alpha" in tensors else TensorMap.identity(space, field)
        products = {}
        for name in PRODUCT_TO_COMAP:
            table = tensors[name] if name in tensors else TensorMap.zeros(space, (space, space), field)
            if table.arity != 2:
                self.fail(f"Product {name} must be written as a comap", self.blocks[name].line)
            products[name] = np.transpose(table.coeffs, (1, 2, 0))
        return TridendriformAlgebra(field, space.dim, products, alpha.coeffs)


def parse_structure_file(text: str) -> Package:
    """
    Parse a structure file.

    Args:
        text: File contents

    Returns:
        StructurePackage, ComodulePackage or (for ``kind = TridendAlgebra``)
        TridendriformAlgebra, fully validated

    Raises:
        FormatSyntaxError: On malformed lines, unknown keys or missing headers
        DimMismatch: On basis indices or spaces outside the declared dims
        NonPrimeModulus: On ``field = Fp p`` with p not prime
        UnknownKind: On an unknown ``kind`` or mismatched ``base``
        StructureError: If the maps do not fit the kind
    """
    return _Parser(text).parse()


# -- emission -------------------------------------------------------------

def _basis(index: Tuple[int, ...]) -> str:
    if len(index) == 1:
        return f"e{index[0]}"
    return "(" + ", ".join(f"e{j}" for j in index) + ")"


def _emit_map(name: str, tensor: TensorMap) -> List[str]:
    if tensor.arity == 1:
        lines = [f"map {name} {tensor.dom.name} {{"]
    else:
        cod = ", ".join(space.name for space in tensor.cod)
        lines = [f"comap {name} {tensor.dom.name} -> ({cod}) {{"]
    for i, terms in tensor.rows():
        body = " + ".join(f"{tensor.field.format_scalar(c)} {_basis(index)}" for c, index in terms)
        lines.append(f"  e{i} -> {body or '0'}")
    lines.append("}")
    return lines


def _ordered_maps(maps: Dict[str, TensorMap]) -> List[Tuple[str, TensorMap]]:
    endos = sorted((n, t) for n, t in maps.items() if t.arity == 1)
    comaps = sorted((n, t) for n, t in maps.items() if t.arity != 1)
    return endos + comaps


def _emit_algebra(A: TridendriformAlgebra) -> str:
    dual = dualize_algebra(A, "A")
    lines = [f"kind = {ALGEBRA_KIND}", f"field = {A.field.header}", f"dim A = {A.dim}"]
    lines += _emit_map("alpha", TensorMap(dual.space, (dual.space,), A.alpha, A.field))
    for product in sorted(PRODUCT_TO_COMAP):
        lines += _emit_map(product, dual.comap(PRODUCT_TO_COMAP[product]))
    return "\n".join(lines) + "\n"


def emit_structure_file(package: Package) -> str:
    """
    Canonical text of a package.

    ``emit(parse(emit(p))) == emit(p)`` for every package ``p``.
    """
    if isinstance(package, TridendriformAlgebra):
        return _emit_algebra(package)
    if isinstance(package, ComodulePackage):
        base = package.base
        lines = [f"kind = {package.kind.value}", f"base = {base.kind.value}", f"field = {base.field.header}"]
        spaces = sorted({base.space, package.mspace}, key=lambda s: s.name)
        maps = {**base.maps(), **package.maps()}
    else:
        base = package
        lines = [f"kind = {package.kind.value}", f"field = {package.field.header}"]
        spaces = [package.space]
        maps = package.maps()
    lines += [f"dim {space.name} = {space.dim}" for space in spaces]
    if base.rb is not None:
        lines.append(f"rb weight = {base.field.format_scalar(base.rb.weight)}")
    for name, tensor in _ordered_maps(maps):
        lines += _emit_map(name, tensor)
    return "\n".join(lines) + "\n"


def load_structure_file(path: Union[str, Path]) -> Package:
    path = Path(path)
    logger.debug(f"Loading {path}")
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        column = e.start - (data.rfind(b"\n", 0, e.start) + 1) + 1
        raise FormatSyntaxError(f"Invalid UTF-8 byte 0x{data[e.start]:02x}", line, column) from e
    return parse_structure_file(text)


def write_structure_file(package: Package, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit_structure_file(package), encoding="utf-8", newline="\n")
    logger.debug(f"Wrote {path}")
    return path


def canonical_key(package: Package) -> str:
    """Deduplication key: the canonical emission."""
    return emit_structure_file(package)
