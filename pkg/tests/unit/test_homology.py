"""Unit tests for Smith normal form and first homology."""

import numpy as np
import pytest

from prism_covers.core.homology import first_homology, relation_matrix, smith_normal_form
from prism_covers.models.complex import AbelianGroup, Presentation


class TestSmithNormalForm:
    """Tests for smith_normal_form."""

    @pytest.mark.parametrize(
        "matrix,diagonal",
        [
            ([[2, 0], [0, 3]], [1, 6]),
            ([[2, 4], [6, 8]], [2, 4]),
            ([[0, 0], [0, 0]], []),
            ([[1, 2, 3]], [1]),
        ],
    )
    def test_diagonal(self, matrix, diagonal):
        """Test invariant factors of small matrices."""
        assert smith_normal_form(np.array(matrix, dtype=object)) == diagonal

    def test_large_entries(self):
        """Test that big entries do not overflow."""
        big = 2**70
        assert smith_normal_form(np.array([[big, 0], [0, big]], dtype=object)) == [big, big]

    def test_rejects_vector(self):
        """Test that a 1-dimensional input is refused."""
        with pytest.raises(ValueError):
            smith_normal_form(np.array([1, 2], dtype=object))


class TestFirstHomology:
    """Tests for first_homology."""

    def test_relation_matrix(self):
        """Test abelianizing relator words."""
        p = Presentation(generator_count=2, relators=[(1, 2, -1, 2)])
        assert relation_matrix(p).tolist() == [[0, 2]]

    def test_cyclic(self):
        """Test Z/2 + Z/3 is reported as Z/6."""
        p = Presentation(generator_count=2, relators=[(1, 1), (2, 2, 2)])
        assert first_homology(p) == AbelianGroup(rank=0, torsion=(6,))

    def test_free_abelian(self):
        """Test a commutator relator leaves Z^2."""
        p = Presentation(generator_count=2, relators=[(1, 2, -1, -2)])
        assert str(first_homology(p)) == "Z^2"

    def test_trivial(self):
        """Test no generators gives the trivial group."""
        assert str(first_homology(Presentation(generator_count=0))) == "0"

    def test_no_relators(self):
        """Test a free group abelianizes to Z^n."""
        assert first_homology(Presentation(generator_count=1)).is_z()

    def test_mixed(self):
        """Test the string form of a group with rank and torsion."""
        p = Presentation(generator_count=2, relators=[(2, 2, 2)])
        assert str(first_homology(p)) == "Z + Z/3"
