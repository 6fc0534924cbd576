"""Unit tests for isometries between covers."""

import pytest

from prism_covers.core.catalog import lookup
from prism_covers.core.isometry import (
    find_isometries,
    identity_genmap,
    parse_genmap,
    verify_intertwine,
)
from prism_covers.core.permutation import read_reps
from prism_covers.models.common import Generator, Orientation
from prism_covers.models.rep import Permutation
from prism_covers.utils.errors import DegreeMismatch, SignatureMismatch

COVERED = {"sigma_2_1": "O333_2", "sigma_2_2": "O333_2", "sigma_3_1": "O333_3", "sigma_3_2": "O333_3"}


def _load(fixtures_dir, name):
    return read_reps(fixtures_dir / f"{name}.rep")[0]


class TestFindIsometries:
    """Tests for find_isometries."""

    @pytest.mark.parametrize("name", sorted(COVERED))
    def test_self_isometries(self, fixtures_dir, name):
        """Test a cover's only self-isometry is the identity, and none reverses orientation."""
        sig = lookup(COVERED[name])
        rep = _load(fixtures_dir, name)
        preserving = find_isometries(sig, rep, sig, rep, Orientation.PRESERVING)
        assert preserving == [Permutation.identity(rep.degree)]
        assert verify_intertwine(preserving[0], rep, rep, identity_genmap(Orientation.PRESERVING))
        assert find_isometries(sig, rep, sig, rep, Orientation.REVERSING) == []

    @pytest.mark.parametrize("base", ["sigma_2_1", "sigma_2_2", "sigma_3_1", "sigma_3_2"])
    def test_prime_covers(self, fixtures_dir, cell_maps, base):
        """Test the known orientation-reversing map from each primed cover."""
        sig = lookup(COVERED[base])
        source = _load(fixtures_dir, f"{base}_prime")
        target = _load(fixtures_dir, base)
        phi = Permutation(images=tuple(cell_maps[f"phi_{base[6:]}"]["images"]))
        found = find_isometries(sig, source, sig, target, Orientation.REVERSING)
        assert phi in found
        assert found == sorted(found, key=lambda p: p(0))

    def test_signature_mismatch(self, o333_2, o333_3, sigma_2_1):
        """Test that covers of different orbifolds are refused."""
        with pytest.raises(SignatureMismatch):
            find_isometries(o333_2, sigma_2_1, o333_3, sigma_2_1)

    def test_degree_mismatch(self, o333_2, sigma_2_1, trivial_rep):
        """Test that covers of different degree are refused."""
        with pytest.raises(DegreeMismatch):
            find_isometries(o333_2, sigma_2_1, o333_2, trivial_rep)


class TestVerifyIntertwine:
    """Tests for verify_intertwine."""

    @pytest.mark.parametrize(
        "name",
        [
            "phi_2_1",
            "phi_2_2",
            "phi_3_1",
            "phi_3_2",
            "intertwine_1_plus",
            "intertwine_1_minus",
            "intertwine_2_plus",
            "intertwine_2_minus",
        ],
    )
    def test_known_maps(self, fixtures_dir, cell_maps, name):
        """Test each stored cell map intertwines its generator map."""
        entry = cell_maps[name]
        phi = Permutation(images=tuple(entry["images"]))
        source = _load(fixtures_dir, entry["source"])
        target = _load(fixtures_dir, entry["target"])
        assert verify_intertwine(phi, source, target, parse_genmap(entry["genmap"]))

    def test_wrong_map(self, fixtures_dir, cell_maps):
        """Test that the identity does not intertwine a cover with its prime."""
        entry = cell_maps["phi_2_1"]
        source = _load(fixtures_dir, entry["source"])
        target = _load(fixtures_dir, entry["target"])
        assert not verify_intertwine(Permutation.identity(24), source, target, parse_genmap(entry["genmap"]))

    def test_degree_mismatch(self, sigma_2_1, trivial_rep):
        """Test that maps of the wrong degree fail."""
        genmap = identity_genmap(Orientation.PRESERVING)
        assert not verify_intertwine(Permutation.identity(1), sigma_2_1, trivial_rep, genmap)


class TestParseGenmap:
    """Tests for parse_genmap."""

    def test_parse(self):
        """Test a swapped generator map."""
        assert parse_genmap("y=z+, z=y-") == {
            Generator.Y: (Generator.Z, 1),
            Generator.Z: (Generator.Y, -1),
        }

    @pytest.mark.parametrize("text", ["y=z", "y:z+", "q=z+", "y=q+"])
    def test_bad_entries(self, text):
        """Test malformed entries."""
        with pytest.raises(ValueError):
            parse_genmap(text)

    def test_identity_genmap(self):
        """Test the reversing identity map."""
        genmap = identity_genmap(Orientation.REVERSING)
        assert genmap[Generator.W] == (Generator.W, -1)
        assert len(genmap) == 4
