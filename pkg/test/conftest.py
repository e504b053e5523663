"""
Pytest configuration and fixtures for the engine tests.

This module provides the handcrafted structure files, the two fields the
tests run over, and a small engine configuration shared by the campaign
and command-line tests.
"""

import logging
from pathlib import Path
from typing import Callable

import pytest

from search import full_report
from structures import StructureKind, StructurePackage
from tensorcore import FieldSpec, SpaceId, TensorMap
from verifier import EngineConfig, Theorem, get_testing_config, load_structure_file
from verifier.config import FIXTURES_DIR


# Configure logging for tests
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    """
    Session-scoped fixture providing the directory of handcrafted witnesses.

    Returns:
        Path: Directory holding the ``.hcs`` fixtures
    """
    return FIXTURES_DIR


@pytest.fixture(scope="session")
def load_fixture(fixtures_dir: Path) -> Callable[[str], object]:
    """
    Session-scoped fixture returning a loader for fixtures by stem.

    Args:
        fixtures_dir: Fixture directory dependency

    Returns:
        Callable: ``load_fixture("dual_numbers_q")`` parses the file
    """
    def load(stem: str):
        return load_structure_file(fixtures_dir / f"{stem}.hcs")
    return load


@pytest.fixture(scope="session")
def q() -> FieldSpec:
    """The rational field."""
    return FieldSpec.rationals()


@pytest.fixture(scope="session")
def f5() -> FieldSpec:
    """The field with five elements."""
    return FieldSpec.prime(5)


@pytest.fixture(scope="session")
def engine() -> EngineConfig:
    """
    Session-scoped fixture providing the testing engine configuration.

    Returns:
        EngineConfig: Tiny budgets, three trials, no minimization
    """
    return get_testing_config()


class PackageFactory:
    """Helpers for building small packages inline."""

    @staticmethod
    def coassoc(field: FieldSpec, dim: int, rows: dict, alpha=None, name: str = "C") -> StructurePackage:
        """
        HomCoassoc package from sparse comultiplication rows.

        Args:
            field: Scalar field
            dim: Dimension
            rows: ``{i: [(c, (j, k)), ...]}`` with 1-based indices
            alpha: Optional diagonal of the twist map
            name: Space name

        Returns:
            StructurePackage: The assembled package
        """
        space = SpaceId(name, dim)
        delta = TensorMap.from_rows(space, (space, space), field, rows)
        twist = TensorMap.diagonal(space, field, alpha) if alpha else TensorMap.identity(space, field)
        return StructurePackage(StructureKind.HOM_COASSOC, space, field, twist, {"delta": delta})

    @staticmethod
    def passes(package) -> bool:
        """Required-axiom verdict of any package."""
        return full_report(package).passed


@pytest.fixture(scope="session")
def factory() -> PackageFactory:
    return PackageFactory()


def _as_bracket(S: StructurePackage, ctx) -> list:
    """Reads Δ as a cobracket; fails skew-symmetry on any nonzero cocommutative Δ."""
    return [("as_bracket", StructurePackage(StructureKind.HOM_LIE, S.space, S.field, S.alpha,
                                            {"gamma": S.comap("delta")}))]


FAKE_THEOREMS = {
    "T-fake": Theorem(
        "T-fake", "Every comultiplication is a cobracket",
        StructureKind.HOM_COASSOC, StructureKind.HOM_LIE, "as_bracket", _as_bracket,
        precondition=lambda S: not S.is_zero(), precondition_text="nonzero",
    ),
    "T-none": Theorem(
        "T-none", "Nothing satisfies the hypotheses",
        StructureKind.HOM_COASSOC, StructureKind.HOM_LIE, "as_bracket", _as_bracket,
        precondition=lambda S: False, precondition_text="never",
    ),
}


@pytest.fixture
def fake_theorems(mocker) -> dict:
    """
    Register a refuted theorem (T-fake) and one without witnesses (T-none) for one test.

    Returns:
        dict: The registered theorems by id
    """
    mocker.patch.dict("verifier.theorems._BY_ID", FAKE_THEOREMS)
    return FAKE_THEOREMS


# Test markers
def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "unit: marks tests as unit tests (fast, no search)"
    )
    config.addinivalue_line(
        "markers", "integration: marks tests that run searches or campaigns"
    )
    config.addinivalue_line(
        "markers", "slow: marks tests as slow running (deselect with '-m \"not slow\"')"
    )
    config.addinivalue_line(
        "markers", "property: marks hypothesis-driven tests"
    )
    config.addinivalue_line(
        "markers", "cli: marks command-line tests"
    )
