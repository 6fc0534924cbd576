"""Unit tests for the cover complex, spine and presentation."""

from collections import Counter

import pytest

from prism_covers.core.complex import (
    build_complex,
    build_spine,
    coarsen_spine,
    edge_cycle_check,
    format_presentation,
    format_spine,
    fundamental_presentation,
)
from prism_covers.core.homology import first_homology
from prism_covers.models.common import Generator
from prism_covers.models.complex import SpineComplex
from prism_covers.models.rep import Permutation
from prism_covers.utils.errors import DisconnectedSpine, InvalidRep


@pytest.fixture
def complex_2_1(o333_2, sigma_2_1):
    return build_complex(o333_2, sigma_2_1)


class TestBuildComplex:
    """Tests for gluing cells along the face pairings."""

    def test_gluings(self, complex_2_1, sigma_2_1):
        """Test one gluing per cell and paired face."""
        assert complex_2_1.degree == 24
        assert len(complex_2_1.gluings) == 4 * 24
        first = complex_2_1.gluings[0]
        assert (first.cell, first.face, first.target) == (0, 0, sigma_2_1.x(0))

    def test_edge_classes_match_relator_cycles(self, o333_2, sigma_2_1, complex_2_1):
        """Test every edge class is one cycle of its relator word."""
        assert edge_cycle_check(o333_2, sigma_2_1, complex_2_1) == []

    def test_invalid_rep(self, o333_2, sigma_2_1):
        """Test that an invalid rep is refused."""
        broken = sigma_2_1.replace(Generator.W, Permutation.identity(24))
        with pytest.raises(InvalidRep):
            build_complex(o333_2, broken)


class TestSpine:
    """Tests for the spine and its coarsening."""

    def test_full_spine(self, complex_2_1):
        """Test the spine has faces 1 and 3 of every cell."""
        spine = build_spine(complex_2_1)
        assert len(spine.cells) == 48
        assert Counter(next(iter(c.faces)) for c in spine.cells) == {"1": 24, "3": 24}

    def test_coarse_spine(self, complex_2_1):
        """Test the coarse cell structure of sigma_2_1."""
        coarse = coarsen_spine(build_spine(complex_2_1))
        assert coarse.counts == (6, 22, 16)
        assert coarse.euler_characteristic == 0
        compositions = Counter(tuple(sorted(c.faces.items())) for c in coarse.cells)
        assert compositions == {(("1", 2),): 12, (("3", 6),): 4}

    def test_format(self, complex_2_1):
        """Test the spine dump starts with the counts."""
        text = format_spine(coarsen_spine(build_spine(complex_2_1)))
        assert text.splitlines()[:3] == ["vertices = 6", "edges = 22", "two_cells = 16"]


class TestPresentation:
    """Tests for the fundamental-group presentation."""

    def test_generators(self, complex_2_1):
        """Test one generator per edge outside the maximal tree."""
        coarse = coarsen_spine(build_spine(complex_2_1))
        p = fundamental_presentation(coarse)
        assert len(p.tree_edges) == 5
        assert p.generator_count == 22 - 5
        assert len(p.relators) == 16
        assert format_presentation(p).startswith("generators = 17\nrelators = 16")

    def test_homology_independent_of_tree(self, complex_2_1):
        """Test that shuffled trees give the same first homology."""
        coarse = coarsen_spine(build_spine(complex_2_1))
        groups = {str(first_homology(fundamental_presentation(coarse, seed=s))) for s in (None, 1, 2, 3)}
        assert groups == {"Z"}

    def test_disconnected(self):
        """Test that a spine with unreachable vertices is refused."""
        with pytest.raises(DisconnectedSpine):
            fundamental_presentation(SpineComplex(vertex_count=2))


class TestSpineOverFixtures:
    """Spine invariants for every fixture cover."""

    def test_full_spine_cells(self, fixture_cover):
        """Test each degree-24 cover's spine has 48 two-cells."""
        _, sig, rep = fixture_cover
        assert len(build_spine(build_complex(sig, rep)).cells) == 48

    def test_coarsening_keeps_homology(self, fixture_cover):
        """Test the coarse spine has the same first homology as the full spine."""
        _, sig, rep = fixture_cover
        full = build_spine(build_complex(sig, rep))
        coarse = coarsen_spine(full)
        full_h1 = first_homology(fundamental_presentation(full))
        assert first_homology(fundamental_presentation(coarse)) == full_h1
        assert full_h1.is_z()
