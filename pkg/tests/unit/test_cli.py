"""Unit tests for CLI commands."""

import pytest
import yaml
from typer.testing import CliRunner

from prism_covers.cli.main import app

runner = CliRunner()


def values(output: str) -> dict[str, str]:
    """The ``key = value`` lines of a command's output."""
    out = {}
    for line in output.splitlines():
        key, sep, value = line.partition(" = ")
        if sep:
            out[key.strip()] = value.strip()
    return out


@pytest.fixture
def rep_path(fixtures_dir):
    def path(name: str) -> str:
        return str(fixtures_dir / f"{name}.rep")

    return path


class TestMainCLI:
    """Tests for main CLI app."""

    def test_help(self):
        """Test --help flag."""
        result = runner.invoke(app, ["--help"])
        assert result.exit_code == 0
        assert "prism-covers" in result.stdout

    def test_version(self):
        """Test the version command."""
        result = runner.invoke(app, ["version"])
        assert result.exit_code == 0
        assert "prism-covers version 0.1.0" in result.stdout

    @pytest.mark.parametrize(
        "command",
        ["catalog", "check", "spine", "surface", "triangulate", "geometry", "prefilter", "enumerate", "pipeline", "isom"],
    )
    def test_command_help(self, command):
        """Test --help of every subcommand."""
        result = runner.invoke(app, [command, "--help"])
        assert result.exit_code == 0


class TestCatalogCommand:
    """Tests for catalog command."""

    def test_name(self):
        """Test a finite row with its vertex orders."""
        result = runner.invoke(app, ["catalog", "--name", "O333_2", "--vertices"])
        assert result.exit_code == 0
        out = values(result.stdout)
        assert out["signature"] == "O333_2 3 3 2 3 3 4 2 2 3"
        assert out["cusp"] == "(3,3,3)"
        assert out["mcd"] == "24"
        assert out["order.v2"] == "24"
        assert out["published_mcd"] == "24"

    def test_family(self):
        """Test a family row instantiated with --n."""
        result = runner.invoke(app, ["catalog", "--name", "O236_5,n", "--n", "12"])
        assert result.exit_code == 0
        out = values(result.stdout)
        assert out["signature"] == "O236_5,12 2 6 2 12 3 2 2 2 2"
        assert out["mcd"] == "24"
        assert out["published_mcd"] == "12"

    def test_all(self):
        """Test listing every row."""
        result = runner.invoke(app, ["catalog", "--all"])
        assert result.exit_code == 0
        assert "O333_2 3 3 2 3 3 4 2 2 3" in result.stdout
        assert "O236_5,n (family, needs --n >= 7)" in result.stdout

    def test_line(self):
        """Test validating a signature line."""
        result = runner.invoke(app, ["catalog", "--line", "3 3 2 3 3 4 2 2 3"])
        assert result.exit_code == 0
        assert values(result.stdout)["signature"] == "3 3 2 3 3 4 2 2 3"

    def test_bad_line(self):
        """Test that a non-rigid cusp is an error."""
        result = runner.invoke(app, ["catalog", "--line", "2 3 3 4 5 2 2 2 2"])
        assert result.exit_code == 1
        assert "Error:" in result.stdout

    def test_unknown(self):
        """Test an unknown row name."""
        result = runner.invoke(app, ["catalog", "--name", "O999_1"])
        assert result.exit_code == 1

    def test_nothing_selected(self):
        """Test that a selector is required."""
        result = runner.invoke(app, ["catalog"])
        assert result.exit_code == 1


class TestCheckCommand:
    """Tests for check command."""

    def test_knot_complement(self, rep_path):
        """Test a fixture cover passes every test."""
        result = runner.invoke(app, ["check", "--sig", "O333_2", "--reps", rep_path("sigma_2_1")])
        assert result.exit_code == 0
        out = values(result.stdout)
        assert out["rep.0.degree"] == "24"
        assert out["rep.0.valid"] == "yes"
        assert out["rep.0.summary"] == "manifold: yes; cusps: 1; H1: Z"

    def test_cycles(self, rep_path):
        """Test the relator cycle types."""
        result = runner.invoke(
            app, ["check", "-s", "O333_2", "-r", rep_path("sigma_2_1"), "--cycles", "--no-homology"]
        )
        assert result.exit_code == 0
        out = values(result.stdout)
        assert out["rep.0.cycles.(z^-1 y)^4"] == " ".join(["4"] * 6)
        assert out["rep.0.summary"] == "manifold: yes; cusps: 1"

    def test_wrong_signature(self, rep_path):
        """Test a rep checked against the wrong orbifold."""
        result = runner.invoke(app, ["check", "--sig", "O333_3", "--reps", rep_path("sigma_2_1")])
        assert result.exit_code == 1
        assert values(result.stdout)["rep.0.valid"] == "no"

    def test_missing_file(self, tmp_path):
        """Test a missing rep file."""
        result = runner.invoke(app, ["check", "--sig", "O333_2", "--reps", str(tmp_path / "none.rep")])
        assert result.exit_code == 1
        assert "Error:" in result.stdout


class TestSpineCommand:
    """Tests for spine command."""

    def test_coarse(self, rep_path):
        """Test the coarse spine counts and homology."""
        result = runner.invoke(app, ["spine", "--sig", "O333_2", "--reps", rep_path("sigma_2_1")])
        assert result.exit_code == 0
        out = values(result.stdout)
        assert (out["rep.0.vertices"], out["rep.0.edges"], out["rep.0.cells"]) == ("6", "22", "16")
        assert out["rep.0.composition"] == "1x2: 12, 3x6: 4"
        assert out["rep.0.H1"] == "Z"

    def test_full(self, rep_path):
        """Test the full spine has two cells per prism."""
        result = runner.invoke(app, ["spine", "--sig", "O333_2", "--reps", rep_path("sigma_2_1"), "--full"])
        assert result.exit_code == 0
        assert values(result.stdout)["rep.0.cells"] == "48"


class TestSurfaceCommand:
    """Tests for surface command."""

    def test_surface(self, rep_path):
        """Test the surface report with volumes."""
        result = runner.invoke(
            app, ["surface", "--sig", "O333_2", "--reps", rep_path("sigma_2_1"), "--volumes"]
        )
        assert result.exit_code == 0
        out = values(result.stdout)
        assert out["rep.0.genus"] == "2"
        assert out["rep.0.euler"] == "-2"
        assert out["rep.0.area"] == "4*pi"
        assert out["rep.0.separating"] == "yes"
        assert float(out["rep.0.volume.cusped"]) == pytest.approx(32.29305519921806, abs=1e-8)


class TestTriangulateCommand:
    """Tests for triangulate command."""

    def test_write(self, rep_path, tmp_path):
        """Test writing the gluing table."""
        output = tmp_path / "cover.gluing"
        result = runner.invoke(
            app, ["triangulate", "--sig", "O333_2", "--reps", rep_path("sigma_2_1"), "-o", str(output)]
        )
        assert result.exit_code == 0
        out = values(result.stdout)
        assert out["tetrahedra"] == "144"
        assert out["ideal_vertex_classes"] == "1"
        assert out["valid"] == "yes"
        assert output.read_text().startswith("ntet 144\n")

    def test_bad_index(self, rep_path):
        """Test an out-of-range rep index."""
        result = runner.invoke(
            app, ["triangulate", "--sig", "O333_2", "--reps", rep_path("sigma_2_1"), "--index", "3"]
        )
        assert result.exit_code == 1


class TestGeometryCommand:
    """Tests for geometry command."""

    def test_volume(self):
        """Test the O333_1 volume."""
        result = runner.invoke(app, ["geometry", "--sig", "O333_1", "--volume", "--degree", "24"])
        assert result.exit_code == 0
        out = values(result.stdout)
        assert out["a3"] == "2"
        assert float(out["R"]) == pytest.approx(0.686589047969, abs=1e-11)
        assert float(out["volume"]) == pytest.approx(0.672771983317043, abs=1e-9)
        assert float(out["cover_volume"]) == pytest.approx(48 * 0.672771983317043, abs=1e-7)

    def test_matrices_and_cusp(self):
        """Test matrix residuals and the cusp volume of O333_2."""
        result = runner.invoke(app, ["geometry", "--sig", "O333_2", "--matrices", "--cusp"])
        assert result.exit_code == 0
        out = values(result.stdout)
        assert out["matrices_ok"] == "yes"
        assert float(out["cusp_height"]) == 1.0
        assert float(out["cusp_volume"]) == pytest.approx(0.4206304962, abs=1e-9)

    def test_bad_tolerance(self):
        """Test that a non-positive --tol is refused."""
        result = runner.invoke(app, ["geometry", "--sig", "O333_2", "--tol", "-1"])
        assert result.exit_code == 1

    def test_config_file(self, tmp_path):
        """Test --config sets the printed digits."""
        config = tmp_path / "run.yaml"
        config.write_text(yaml.safe_dump({"output": {"digits": 6}}))
        result = runner.invoke(app, ["geometry", "--sig", "O333_1", "--config", str(config)])
        assert result.exit_code == 0
        assert values(result.stdout)["R"] == "0.686589"


class TestPrefilterCommand:
    """Tests for prefilter command."""

    def test_table(self):
        """Test the finite rows agree with the published columns."""
        result = runner.invoke(app, ["prefilter"])
        assert result.exit_code == 0
        out = values(result.stdout)
        assert out["rows"] == "54"
        assert out["published_mismatches"] == "none"
        assert out["mcd_differs"] == "none"

    def test_family_mcd(self):
        """Test even family members are listed under mcd_differs without failing."""
        result = runner.invoke(app, ["prefilter", "--n", "12"])
        assert result.exit_code == 0
        out = values(result.stdout)
        assert out["published_mismatches"] == "none"
        assert "O236_5,12" in out["mcd_differs"]

    def test_residual(self):
        """Test the residual graph of one row."""
        result = runner.invoke(app, ["prefilter", "--sig", "O236_1", "--residual"])
        assert result.exit_code == 0
        out = values(result.stdout)
        assert out["O236_1"].startswith("ck: nontrivial; dc: exists")
        assert out["O236_1.residual"].startswith("v4-v4 label 2")

    def test_rich_table(self):
        """Test the rich table output."""
        result = runner.invoke(app, ["prefilter", "--table"])
        assert result.exit_code == 0
        assert "Knot-complement obstructions" in result.stdout


class TestEnumerateCommand:
    """Tests for enumerate command."""

    def test_small_index(self, tmp_path):
        """Test a small enumeration with a checkpoint."""
        output = tmp_path / "reps.txt"
        checkpoint = tmp_path / "ckpt"
        result = runner.invoke(
            app,
            ["enumerate", "--sig", "O333_2", "-k", "4", "-o", str(output), "--checkpoint", str(checkpoint), "-w", "1"],
        )
        assert result.exit_code == 0
        out = values(result.stdout)
        assert out["index.1"] == "1"
        assert "index.2" not in out
        assert output.exists()

    def test_resume_needs_checkpoint(self, tmp_path):
        """Test --resume without --checkpoint."""
        result = runner.invoke(app, ["enumerate", "--sig", "O333_2", "-o", str(tmp_path / "r"), "--resume"])
        assert result.exit_code == 1


class TestPipelineCommand:
    """Tests for pipeline command."""

    def test_rep_file(self, rep_path, tmp_path):
        """Test filtering a rep file."""
        survivors = tmp_path / "final.rep"
        result = runner.invoke(
            app,
            [
                "pipeline",
                "--sig",
                "O333_2",
                "--reps",
                rep_path("sigma_2_1"),
                "--survivors",
                str(survivors),
                "--workers",
                "1",
            ],
        )
        assert result.exit_code == 0
        assert values(result.stdout)["stages"] == "1/1/1"
        assert survivors.exists()


class TestIsomCommand:
    """Tests for isom command."""

    def test_search_and_verify(self, rep_path):
        """Test a primed cover is isometric to its base by reversing orientation."""
        result = runner.invoke(
            app,
            [
                "isom",
                "--sig",
                "O333_2",
                "--from",
                rep_path("sigma_2_1_prime"),
                "--to",
                rep_path("sigma_2_1"),
                "--orientation",
                "reversing",
                "--verify",
                "x=x-,y=y-,z=z-,w=w-",
            ],
        )
        assert result.exit_code == 0
        out = values(result.stdout)
        assert int(out["isometries"]) >= 1
        assert out["verified"] == "yes"

    def test_phi_across_signatures(self, rep_path, cell_maps):
        """Test checking a given map between covers of different orbifolds."""
        entry = cell_maps["intertwine_1_plus"]
        result = runner.invoke(
            app,
            [
                "isom",
                "--from",
                rep_path(entry["source"]),
                "--to",
                rep_path(entry["target"]),
                "--phi",
                " ".join(str(i) for i in entry["images"]),
                "--verify",
                entry["genmap"],
            ],
        )
        assert result.exit_code == 0
        assert values(result.stdout)["verified"] == "yes"

    def test_phi_needs_verify(self, rep_path):
        """Test --phi without --verify."""
        result = runner.invoke(
            app,
            ["isom", "--from", rep_path("sigma_2_1"), "--to", rep_path("sigma_2_1"), "--phi", "0"],
        )
        assert result.exit_code == 1

    def test_bad_genmap(self, rep_path):
        """Test a malformed generator map."""
        result = runner.invoke(
            app,
            [
                "isom",
                "--sig",
                "O333_2",
                "--from",
                rep_path("sigma_2_1"),
                "--to",
                rep_path("sigma_2_1"),
                "--verify",
                "y=z",
            ],
        )
        assert result.exit_code == 1
        assert "Error:" in result.stdout
