"""Shared test fixtures for prism-covers tests."""

from pathlib import Path
from typing import Any

import pytest
import yaml

from prism_covers.core.catalog import lookup
from prism_covers.core.permutation import read_reps
from prism_covers.models.rep import PermRep
from prism_covers.models.signature import PrismSignature
from prism_covers.utils.config import PrismCoversConfig, set_config

FIXTURES = Path(__file__).parent / "fixtures"

# Fixture rep files by the orbifold they cover.
FIXTURE_SIGNATURES = {
    "sigma_2_1": "O333_2",
    "sigma_2_2": "O333_2",
    "sigma_3_1": "O333_3",
    "sigma_3_2": "O333_3",
}

ALL_FIXTURES = [
    (name + suffix, sig) for name, sig in FIXTURE_SIGNATURES.items() for suffix in ("", "_prime")
]


@pytest.fixture(autouse=True)
def default_config():
    """Reset the global configuration around each test."""
    set_config(PrismCoversConfig())
    yield
    set_config(PrismCoversConfig())


def load_fixture_rep(name: str) -> PermRep:
    """First rep of ``tests/fixtures/<name>.rep``."""
    return read_reps(FIXTURES / f"{name}.rep")[0]


@pytest.fixture
def fixtures_dir() -> Path:
    """Directory holding rep files and golden outputs."""
    return FIXTURES


@pytest.fixture
def o333_1() -> PrismSignature:
    return lookup("O333_1")


@pytest.fixture
def o333_2() -> PrismSignature:
    return lookup("O333_2")


@pytest.fixture
def o333_3() -> PrismSignature:
    return lookup("O333_3")


@pytest.fixture
def sigma_2_1() -> PermRep:
    """Degree-24 rep of O333_2 whose cover is a knot complement."""
    return load_fixture_rep("sigma_2_1")


@pytest.fixture
def sigma_2_1_prime() -> PermRep:
    return load_fixture_rep("sigma_2_1_prime")


@pytest.fixture
def cell_maps() -> dict[str, Any]:
    """Cell maps between fixture covers, keyed by name."""
    data = yaml.safe_load((FIXTURES / "cell_maps.yaml").read_text())
    return data["maps"]


@pytest.fixture
def trivial_rep() -> PermRep:
    """The degree-one rep."""
    return PermRep.trivial(1)


@pytest.fixture
def sample_rep_text() -> str:
    """Two records in the rep file format."""
    return "x: 0\ny: 0\nz: 0\nw: 0\n\n# comment line\nx: 1 0\ny: 1 0\nz: 1 0\nw: 0 1\n"


@pytest.fixture(params=ALL_FIXTURES, ids=[name for name, _ in ALL_FIXTURES])
def fixture_cover(request: pytest.FixtureRequest) -> tuple[str, PrismSignature, PermRep]:
    """Each fixture cover with the orbifold it covers."""
    name, sig = request.param
    return name, lookup(sig), load_fixture_rep(name)
