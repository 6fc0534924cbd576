"""Unit tests for the totally geodesic surface."""

from fractions import Fraction

import pytest

from prism_covers.core import surface
from prism_covers.core.catalog import lookup
from prism_covers.core.permutation import is_manifold
from prism_covers.core.surface import geodesic_surface, separation_guaranteed, triangle_defect
from prism_covers.utils.errors import NoGeodesicSurface, NotAManifold


class TestTriangleDefect:
    """Tests for triangle_defect."""

    def test_o333_2(self, o333_2):
        """Test the (3,3,4) triangle."""
        assert triangle_defect(o333_2) == Fraction(1, 12)

    def test_euclidean_triangle(self):
        """Test that a (2,3,6) cross-section has no hyperbolic triangle."""
        sig = lookup("O236_1")
        with pytest.raises(NoGeodesicSurface):
            triangle_defect(sig.model_copy(update={"a": (2, 3, 3, 2, 3, 6, 2, 2, 2)}))


class TestGeodesicSurface:
    """Tests for geodesic_surface."""

    def test_sigma_2_1(self, o333_2, sigma_2_1):
        """Test the genus-two surface in a degree-24 cover."""
        report = geodesic_surface(o333_2, sigma_2_1)
        assert report.components == 1
        assert report.component_sizes == [24]
        assert report.genus == [2]
        assert report.euler_characteristic == -2
        assert report.area_over_pi == 4
        assert report.piece_area_over_pi == Fraction(1, 6)
        assert report.orientable
        assert report.separating is True

    def test_orbifold_cover(self, o333_2, trivial_rep):
        """Test that an orbifold cover is refused."""
        with pytest.raises(NotAManifold):
            geodesic_surface(o333_2, trivial_rep)

    def test_separation_not_guaranteed(self, monkeypatch, o333_2, sigma_2_1):
        """Test that a (2,2,2) compact triangle leaves separation undecided."""
        sig = o333_2.model_copy(update={"a": (3, 3, 2, 3, 3, 4, 2, 2, 2)})
        monkeypatch.setattr(surface, "is_manifold", lambda _sig, rep: is_manifold(o333_2, rep))
        report = geodesic_surface(sig, sigma_2_1)
        assert report.separating is None
        assert report.separating_text == "not guaranteed"
        assert report.genus == [2]


class TestSeparationGuaranteed:
    """Tests for separation_guaranteed."""

    def test_compact_triangle_labels(self, o333_2):
        """Test separation follows the labels of the compact triangle."""
        assert separation_guaranteed(o333_2) is True
        assert separation_guaranteed(lookup("O236_9")) is None
