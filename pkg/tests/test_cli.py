import json

from gemtk import parse_gem, relabel, write_gem
from gemtk.cli import main

from helpers import cube_graph, k4_graph, theta_graph


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTypes:
    def test_chi_minus_2_plain(self, capsys):
        code, out, err = run(capsys, "types", "--chi", "-2")
        assert code == 0
        assert len(out.splitlines()) == 31
        assert all(line.startswith("[") for line in out.splitlines())
        assert "total: 31 types for chi=-2" in err

    def test_json_records(self, capsys):
        code, out, _ = run(capsys, "types", "--chi", "-2", "--json")
        records = [json.loads(l) for l in out.splitlines()]
        assert code == 0
        assert len(records) == 31
        assert {"seq", "p", "colors", "chi"} <= set(records[0])
        assert any(r["seq"] == [4, 4, 4, 4, 4] and r["p"] == 8 for r in records)

    def test_colors_restriction(self, capsys):
        code, out, _ = run(capsys, "types", "--chi", "-2", "--colors", "6", "--json")
        assert code == 0
        assert out.strip() == ""

    def test_nonnegative_chi_is_usage_error(self, capsys):
        code, _, err = run(capsys, "types", "--chi", "0")
        assert code == 2

    def test_relaxed_divisibility_is_superset(self, capsys):
        code, strict_out, _ = run(capsys, "types", "--chi", "-2", "--json")
        strict = {l for l in strict_out.splitlines()}
        code2, relaxed_out, _ = run(
            capsys, "types", "--chi", "-2", "--no-face-divisibility", "--json"
        )
        relaxed = {l for l in relaxed_out.splitlines()}
        assert code == code2 == 0
        assert strict < relaxed

    def test_require_flag_is_accepted(self, capsys):
        code, out, _ = run(
            capsys, "types", "--chi", "-2", "--require-face-divisibility", "--json"
        )
        assert code == 0
        assert len(out.splitlines()) == 31


class TestVerify:
    def test_cube_ok(self, capsys, tmp_path):
        path = tmp_path / "cube.gem"
        path.write_text(write_gem(cube_graph()))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 0
        assert "orientable genus 0" in out

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "verify", "missing.gem")
        assert code == 2
        assert "missing.gem" in err

    def test_failing_manifold_check(self, capsys, tmp_path):
        g = parse_gem(
            "gem 1\ncolors 4\nvertices 4\n"
            "color 0: 0-1 2-3\ncolor 1: 0-2 1-3\ncolor 2: 0-3 1-2\ncolor 3: 0-1 2-3\n"
        )
        path = tmp_path / "bad.gem"
        path.write_text(write_gem(g))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 1
        assert "FAIL" in out

    def test_invalid_gem_is_check_failure(self, capsys, tmp_path):
        path = tmp_path / "loop.gem"
        path.write_text("gem 1\ncolors 2\nvertices 2\ncolor 0: 0-0\ncolor 1: 0-1\n")
        code, _, err = run(capsys, "verify", str(path))
        assert code == 1

    def test_syntax_error_is_usage_error(self, capsys, tmp_path):
        path = tmp_path / "syntax.gem"
        path.write_text("gem 1\ncolors 2\nwat\n")
        code, _, err = run(capsys, "verify", str(path))
        assert code == 2

    def test_json(self, capsys, tmp_path):
        path = tmp_path / "k4.gem"
        path.write_text(write_gem(k4_graph()))
        code, out, _ = run(capsys, "verify", str(path), "--json")
        record = json.loads(out)
        assert code == 0
        assert record["orientable"] is False
        assert record["g_counts"]["01"] == 1

    def test_five_colored_residue_failure(self, capsys, tmp_path):
        # a theta-like 5-colored graph with one color replaced by a matching
        # that breaks a residue criterion on 4 vertices
        text = (
            "gem 1\ncolors 5\nvertices 4\n"
            "color 0: 0-1 2-3\ncolor 1: 0-2 1-3\ncolor 2: 0-3 1-2\n"
            "color 3: 0-1 2-3\ncolor 4: 0-2 1-3\n"
        )
        path = tmp_path / "five.gem"
        path.write_text(text)
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 1
        assert "residues_homology_sphere: False" in out
        assert "(color 0, component 0)" in out


class TestEmbed:
    def test_default_order(self, capsys, tmp_path):
        path = tmp_path / "theta.gem"
        path.write_text(write_gem(theta_graph()))
        code, out, _ = run(capsys, "embed", str(path))
        assert code == 0
        assert "chi=2" in out

    def test_all_perms(self, capsys, tmp_path):
        g = parse_gem(
            "gem 1\ncolors 4\nvertices 2\n"
            "color 0: 0-1\ncolor 1: 0-1\ncolor 2: 0-1\ncolor 3: 0-1\n"
        )
        path = tmp_path / "g.gem"
        path.write_text(write_gem(g))
        code, out, _ = run(capsys, "embed", str(path), "--all-perms", "--json")
        records = [json.loads(l) for l in out.splitlines()]
        assert code == 0
        assert len(records) == 3

    def test_specific_perm(self, capsys, tmp_path):
        path = tmp_path / "cube.gem"
        path.write_text(write_gem(cube_graph()))
        code, out, _ = run(capsys, "embed", str(path), "--perm", "0,2,1", "--json")
        record = json.loads(out)
        assert code == 0
        assert record["seq"] == [4, 4, 4]

    def test_bad_perm(self, capsys, tmp_path):
        path = tmp_path / "cube.gem"
        path.write_text(write_gem(cube_graph()))
        code, _, err = run(capsys, "embed", str(path), "--perm", "0,1")
        assert code == 2


class TestHomology:
    def test_plain(self, capsys, tmp_path):
        path = tmp_path / "theta.gem"
        path.write_text(write_gem(theta_graph()))
        code, out, _ = run(capsys, "homology", str(path))
        assert code == 0
        assert "H_0 = Z" in out
        assert "H_1 = 0" in out
        assert "H_2 = Z" in out

    def test_json(self, capsys, tmp_path):
        path = tmp_path / "k4.gem"
        path.write_text(write_gem(k4_graph()))
        code, out, _ = run(capsys, "homology", str(path), "--json")
        record = json.loads(out)
        assert record["betti"] == [1, 0, 0]
        assert record["torsion"] == [[], [2], []]

    def test_disconnected_reported_per_component(self, capsys, tmp_path):
        path = tmp_path / "two.gem"
        path.write_text(
            "gem 1\ncolors 3\nvertices 4\n"
            "color 0: 0-1 2-3\ncolor 1: 0-1 2-3\ncolor 2: 0-1 2-3\n"
        )
        code, out, _ = run(capsys, "homology", str(path), "--json")
        records = [json.loads(l) for l in out.splitlines()]
        assert code == 0
        assert [r["component"] for r in records] == [0, 1]
        assert all(r["betti"] == [1, 0, 1] for r in records)


class TestSearch:
    def test_emits_gem_file(self, capsys, tmp_path):
        out_dir = tmp_path / "found"
        code, out, _ = run(
            capsys,
            "search", "--type", "4,8,4,8", "--vertices", "8",
            "--require-3manifold", "--max", "1", "--out", str(out_dir),
        )
        assert code == 0
        files = list(out_dir.glob("*.gem"))
        assert len(files) == 1
        found = parse_gem(files[0].read_text())
        assert found.vertex_count == 8

    def test_stdout_mode(self, capsys):
        code, out, _ = run(
            capsys, "search", "--type", "6,6,6,6", "--vertices", "6", "--max", "1"
        )
        assert code == 0
        assert out.startswith("gem 1")

    def test_infeasible_spec(self, capsys):
        code, _, err = run(capsys, "search", "--type", "2,2,2", "--vertices", "2")
        assert code == 2

    def test_budget_exceeded_without_solution_fails(self, capsys):
        code, out, _ = run(
            capsys,
            "search", "--type", "4,4,4,6", "--vertices", "24",
            "--require-3manifold", "--require-bipartite", "--max", "5",
            "--budget", "0.02",
        )
        assert code in (0, 1)
        if "solutions: 0" in out:
            assert code == 1
            assert "exhausted: no" in out

    def test_exhausted_empty_is_success(self, capsys):
        # the only quadrilateral graph on 4 vertices is non-bipartite, so the
        # bipartite search exhausts with nothing to report
        code, out, _ = run(
            capsys, "search", "--type", "4,4,4", "--vertices", "4",
            "--require-bipartite", "--all",
        )
        assert code == 0
        assert "solutions: 0" in out
        assert "exhausted: yes" in out


class TestCanon:
    def test_relabel_stable(self, capsys, tmp_path):
        g = cube_graph()
        shuffled = relabel(g, [3, 7, 1, 5, 0, 4, 2, 6])
        a = tmp_path / "a.gem"
        b = tmp_path / "b.gem"
        a.write_text(write_gem(g))
        b.write_text(write_gem(shuffled))
        code_a, out_a, _ = run(capsys, "canon", str(a))
        code_b, out_b, _ = run(capsys, "canon", str(b))
        assert code_a == code_b == 0
        assert out_a == out_b


class TestUsage:
    def test_unknown_subcommand(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_no_arguments(self, capsys):
        assert main([]) == 2
