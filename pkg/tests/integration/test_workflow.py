"""Integration tests for end-to-end workflows."""

import pytest

from prism_covers.core.catalog import lookup
from prism_covers.core.complex import (
    build_complex,
    build_spine,
    coarsen_spine,
    edge_cycle_check,
    fundamental_presentation,
)
from prism_covers.core.filters import filter_covers, prefilter
from prism_covers.core.homology import first_homology
from prism_covers.core.isometry import find_isometries, parse_genmap, verify_intertwine
from prism_covers.core.low_index import enumerate_subgroups
from prism_covers.core.permutation import (
    canonical_form,
    cusp_orbits,
    is_manifold,
    read_reps,
    validate_rep,
)
from prism_covers.core.surface import geodesic_surface
from prism_covers.core.triangulation import triangulate_and_validate
from prism_covers.core.volume import surface_side_volumes
from prism_covers.models.common import Orientation
from prism_covers.models.enumeration import EnumerationTask
from prism_covers.models.filters import Verdict
from prism_covers.models.rep import Permutation


class TestCertificateWorkflow:
    """Every fixture cover is a one-cusped manifold with H1 = Z."""

    def test_certificate(self, fixture_cover):
        """Test validity, manifold, cusp and homology of a fixture."""
        name, sig, rep = fixture_cover
        assert validate_rep(sig, rep).valid, name
        assert is_manifold(sig, rep).manifold
        assert len(cusp_orbits(rep)) == 1

        cx = build_complex(sig, rep)
        assert edge_cycle_check(sig, rep, cx) == []
        spine = coarsen_spine(build_spine(cx))
        assert spine.euler_characteristic == 0
        assert first_homology(fundamental_presentation(spine)).is_z()

    def test_surface(self, fixture_cover):
        """Test the closed genus-two surface in each fixture."""
        _, sig, rep = fixture_cover
        report = geodesic_surface(sig, rep)
        assert report.components == 1
        assert report.genus == [2]
        assert report.euler_characteristic == -2
        assert report.area_over_pi == 4
        assert report.separating is True

    def test_triangulation(self, fixture_cover):
        """Test each fixture triangulates with one cusp."""
        _, sig, rep = fixture_cover
        t, report = triangulate_and_validate(sig, rep)
        assert t.tet_count == 144
        assert report.valid
        assert report.ideal_vertex_classes == 1


class TestFilterWorkflow:
    """Pre-filter a signature, then filter its fixture covers."""

    @pytest.mark.parametrize("name", ["O333_2", "O333_3"])
    def test_prefilter_then_filter(self, fixtures_dir, name):
        """Test both fixture covers of a surviving row pass the filter."""
        sig = lookup(name)
        assert prefilter(sig).verdict == Verdict.SURVIVING
        index = name[-1]
        reps = [
            rep
            for cover in (f"sigma_{index}_1", f"sigma_{index}_2")
            for suffix in ("", "_prime")
            for rep in read_reps(fixtures_dir / f"{cover}{suffix}.rep")
        ]
        stages = filter_covers(sig, reps)
        assert stages.counts == (4, 4, 4)

    def test_surface_sides(self, o333_2):
        """Test the volumes cut out by the surface in a degree-24 cover."""
        sides = surface_side_volumes(o333_2, 24)
        assert sides.cusped_side == pytest.approx(32.29305519921806, abs=1e-8)
        assert sides.total == pytest.approx(45.0273570343769, abs=1e-8)


class TestIsometryWorkflow:
    """Primed covers and covers of the other orbifold."""

    @pytest.mark.parametrize("base", ["sigma_2_1", "sigma_2_2", "sigma_3_1", "sigma_3_2"])
    def test_primed_cover(self, fixtures_dir, cell_maps, base):
        """Test every reversing isometry from a primed cover inverts all generators."""
        sig = lookup("O333_2" if base.startswith("sigma_2") else "O333_3")
        source = read_reps(fixtures_dir / f"{base}_prime.rep")[0]
        target = read_reps(fixtures_dir / f"{base}.rep")[0]
        genmap = parse_genmap(cell_maps[f"phi_{base[6:]}"]["genmap"])

        found = find_isometries(sig, source, sig, target, Orientation.REVERSING)
        assert found
        assert all(verify_intertwine(phi, source, target, genmap) for phi in found)

    @pytest.mark.parametrize("pair", ["1", "2"])
    def test_intertwining(self, fixtures_dir, cell_maps, pair):
        """Test the covers of O333_2 and O333_3 are related in both orientations."""
        for orientation in ("plus", "minus"):
            entry = cell_maps[f"intertwine_{pair}_{orientation}"]
            source = read_reps(fixtures_dir / f"{entry['source']}.rep")[0]
            target = read_reps(fixtures_dir / f"{entry['target']}.rep")[0]
            phi = Permutation(images=tuple(entry["images"]))
            assert verify_intertwine(phi, source, target, parse_genmap(entry["genmap"]))


@pytest.mark.slow
class TestFullEnumeration:
    """Index-24 enumeration and filtering (hours of CPU)."""

    @pytest.mark.parametrize(
        "name,total,stages",
        [
            ("O333_2", 32245, (142, 46, 20)),
            ("O333_3", 29432, (142, 46, 22)),
            ("O333_4", 306552, (148, 51, 12)),
        ],
    )
    def test_index_24(self, fixtures_dir, name, total, stages):
        """Test class counts, filter stages and the survivors."""
        sig = lookup(name)
        reps = list(enumerate_subgroups(EnumerationTask(signature=sig, max_index=24), workers=4))
        assert len(reps) == total

        result = filter_covers(sig, [r for r in reps if r.degree == 24], workers=4)
        assert result.counts == stages

        if name != "O333_4":
            survivors = {canonical_form(r) for r in result.survivors}
            index = name[-1]
            for cover in (f"sigma_{index}_1", f"sigma_{index}_2"):
                assert canonical_form(read_reps(fixtures_dir / f"{cover}.rep")[0]) in survivors
