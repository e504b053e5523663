"""
Greedy witness minimization.
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple, Union

import numpy as np

from comodules import ComodulePackage
from structures import RotaBaxter, StructurePackage
from tensorcore import SpaceId, TensorMap

from .enumerate import WitnessRecord, full_report, quick_passes

logger = logging.getLogger(__name__)

Package = Union[StructurePackage, ComodulePackage]
Predicate = Callable[[Package], bool]


def preserves_verdict(w: WitnessRecord) -> Predicate:
    """Predicate "required axioms still pass" (or still fail, for a failing record)."""
    expected = w.verdicts.passed
    return lambda package: quick_passes(package) == expected


def _shrinkable(package: Package, include_alpha: bool) -> Dict[str, TensorMap]:
    if isinstance(package, ComodulePackage):
        maps = dict(package.structure_maps)
        if include_alpha:
            maps["alpha_m"] = package.alpha_m
        return maps
    maps = dict(package.comaps)
    if include_alpha:
        maps["alpha"] = package.alpha
    return maps


def _zero_entry(tensor: TensorMap, position: Tuple[int, ...]) -> TensorMap:
    arr = tensor.coeffs.copy()
    arr[position] = 0
    return TensorMap(tensor.dom, tensor.cod, arr, tensor.field)


def zeroing_pass(package: Package, predicate: Predicate, include_alpha: bool = False) -> Package:
    """Zero coefficients one at a time, in sorted (map, position) order, until none can go."""
    changed = True
    while changed:
        changed = False
        for name, tensor in sorted(_shrinkable(package, include_alpha).items()):
            for position in tensor.support():
                current = _shrinkable(package, include_alpha)[name]
                index = tuple(p - 1 for p in position)
                if current.coeffs[index] == 0:
                    continue
                candidate = package.with_maps(**{name: _zero_entry(current, index)})
                if predicate(candidate):
                    logger.debug(f"Zeroed {name}{position}")
                    package = candidate
                    changed = True
    return package


def _touches(tensor: TensorMap, t: int, allow_diagonal: bool) -> bool:
    arr = tensor.coeffs
    for axis in range(arr.ndim):
        block = np.take(arr, t, axis=axis)
        if allow_diagonal and arr.ndim == 2:
            block = np.delete(block, t)
        if np.any(block != 0):
            return True
    return False


def _droppable(S: StructurePackage, t: int) -> bool:
    if any(_touches(comap, t, False) for comap in S.comaps.values()):
        return False
    endos = [S.alpha] + ([S.rb.operator] if S.rb is not None else [])
    return not any(_touches(endo, t, True) for endo in endos)


def drop_basis_vector(S: StructurePackage, t: int) -> StructurePackage:
    """Restrict ``S`` to the span of every basis vector but e_{t+1} (0-based ``t``)."""
    space = SpaceId(S.space.name, S.dim - 1)

    def restrict(tensor: TensorMap) -> TensorMap:
        arr = tensor.coeffs
        for axis in range(arr.ndim):
            arr = np.delete(arr, t, axis=axis)
        return TensorMap(space, tuple(space for _ in tensor.cod), arr, tensor.field)

    rb = RotaBaxter(restrict(S.rb.operator), S.rb.weight) if S.rb is not None else None
    comaps = {name: restrict(comap) for name, comap in S.comaps.items()}
    return StructurePackage(S.kind, space, S.field, restrict(S.alpha), comaps, rb)


def reduction_pass(S: StructurePackage, predicate: Predicate) -> StructurePackage:
    """Drop basis vectors no map touches, last first, while the predicate holds."""
    t = S.dim - 1
    while t >= 0 and S.dim > 1:
        if _droppable(S, t):
            candidate = drop_basis_vector(S, t)
            if predicate(candidate):
                logger.debug(f"Dropped e{t + 1}, dim now {candidate.dim}")
                S = candidate
        t = min(t - 1, S.dim - 1)
    return S


def minimize_witness(w: WitnessRecord, predicate: Optional[Predicate] = None,
                     include_alpha: bool = False) -> WitnessRecord:
    """
    Shrink a witness while ``predicate`` keeps holding.

    Coefficients of the comaps (and of α with ``include_alpha``) are zeroed
    greedily, then unused basis vectors are dropped. The result is a
    fixpoint: minimizing it again returns an equal package.

    Args:
        w: Witness to shrink
        predicate: Property to preserve; defaults to the witness's verdict
        include_alpha: Also zero coefficients of the twist map

    Returns:
        WitnessRecord: The reduced witness, or ``w`` itself if nothing changed
    """
    predicate = predicate or preserves_verdict(w)
    if not predicate(w.package):
        logger.warning(f"{w.name} does not satisfy the minimization predicate; left unchanged")
        return w

    package = w.package
    while True:
        reduced = zeroing_pass(package, predicate, include_alpha)
        if isinstance(reduced, StructurePackage):
            reduced = reduction_pass(reduced, predicate)
        if reduced == package:
            break
        package = reduced

    if package == w.package:
        return w
    before, after = w.package.nonzero_count(), package.nonzero_count()
    logger.info(f"Minimized {w.name}: {before} -> {after} nonzero coefficients")
    return WitnessRecord(package, w.seed, w.index, full_report(package), minimized=True)


def nonzero_positions(package: Package) -> List[Tuple[str, Tuple[int, ...]]]:
    """Every nonzero coefficient as (map name, 1-based position)."""
    return [(name, pos) for name, tensor in sorted(package.maps().items()) for pos in tensor.support()]
