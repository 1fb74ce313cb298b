"""Command line: subcommands, exit codes, headers, reproducibility."""

import json

import pytest

import lnskit as lk
from lnskit.cli import EXIT_CONFIG, EXIT_OK, main, parse_grid_file


def run(*argv):
    return main(list(argv))


class TestGenerate:
    def test_d2_writes_network(self, tmp_path, capsys):
        out = tmp_path / "net.json"
        assert run("generate", "--family", "d2", "--L", "1024", "--out", str(out)) == EXIT_OK
        net = lk.decode_network(out.read_bytes())
        assert lk.wiring_cost(net).unit_cost == 8.5
        assert "cost_per_node=8.5" in capsys.readouterr().out

    def test_ring_has_no_shortcuts(self, tmp_path):
        out = tmp_path / "ring.json"
        assert run("generate", "--family", "ring", "--L", "5", "--out", str(out)) == EXIT_OK
        assert lk.decode_network(out.read_bytes()).shortcut_count == 0

    def test_d4_constraint_violation_names_rule(self, tmp_path, capsys):
        out = tmp_path / "x.json"
        code = run(
            "generate", "--family", "d4", "--L", "100", "--b", "3", "--k", "5",
            "--out", str(out),
        )
        assert code == EXIT_CONFIG
        assert "b**k + k" in capsys.readouterr().err
        assert not out.exists()

    def test_unknown_family_rejected_by_parser(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            run("generate", "--family", "nope", "--L", "10", "--out", str(tmp_path / "x"))
        assert exc.value.code == EXIT_CONFIG

    def test_stochastic_generate_seeded(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for path in (a, b):
            assert run(
                "generate", "--family", "s1m", "--L", "100", "--t", "10",
                "--alpha", "0.5", "--seed", "9", "--out", str(path),
            ) == EXIT_OK
        assert a.read_bytes() == b.read_bytes()

    def test_seed_means_same_network_across_subcommands(self, tmp_path):
        # generate and metrics use the same master-seed convention
        net_file = tmp_path / "net.json"
        run(
            "generate", "--family", "s1m", "--L", "100", "--t", "10",
            "--alpha", "0.5", "--seed", "9", "--out", str(net_file),
        )
        from_file = tmp_path / "from_file.csv"
        run("metrics", "--in", str(net_file), "--out", str(from_file))
        from_spec = tmp_path / "from_spec.csv"
        run(
            "metrics", "--family", "s1m", "--L", "100", "--t", "10",
            "--alpha", "0.5", "--seed", "9", "--out", str(from_spec),
        )

        def value(path, metric):
            for line in path.read_text().splitlines():
                if line.startswith(metric):
                    return line.split(",")[1]
            raise AssertionError(metric)

        assert value(from_file, "average_distance") == value(from_spec, "average_distance")
        assert value(from_file, "shortcut_count") == value(from_spec, "shortcut_count")


class TestMetrics:
    def test_d2_golden_row(self, tmp_path):
        out = tmp_path / "report.csv"
        assert run("metrics", "--family", "d2", "--L", "1024", "--out", str(out)) == EXIT_OK
        text = out.read_text()
        assert text.startswith("# lnskit")
        row = [ln for ln in text.splitlines() if ln.startswith("average_distance")][0]
        assert abs(float(row.split(",")[1]) - 11.4563) < 5e-4

    def test_reads_network_file(self, tmp_path):
        net_file = tmp_path / "net.json"
        run("generate", "--family", "ring", "--L", "5", "--out", str(net_file))
        out = tmp_path / "report.csv"
        assert run("metrics", "--in", str(net_file), "--out", str(out)) == EXIT_OK
        row = [ln for ln in out.read_text().splitlines() if ln.startswith("average_distance")][0]
        assert float(row.split(",")[1]) == 1.5

    def test_in_and_family_conflict(self, tmp_path):
        net_file = tmp_path / "net.json"
        run("generate", "--family", "ring", "--L", "5", "--out", str(net_file))
        assert run("metrics", "--in", str(net_file), "--family", "ring", "--L", "5") == EXIT_CONFIG

    def test_ensemble_byte_identical(self, tmp_path):
        out = tmp_path / "report.csv"
        args = (
            "metrics", "--family", "s1m", "--L", "200", "--t", "20", "--alpha", "0.5",
            "--n", "10", "--seed", "4", "--out", str(out),
        )
        assert run(*args) == EXIT_OK
        first = out.read_bytes()
        assert run(*args) == EXIT_OK
        assert out.read_bytes() == first

    def test_ensemble_of_deterministic_rejected(self):
        assert run("metrics", "--family", "d2", "--L", "64", "--n", "5") == EXIT_CONFIG

    def test_json_mirror(self, tmp_path):
        out = tmp_path / "report.json"
        assert run(
            "metrics", "--family", "ring", "--L", "10", "--format", "json",
            "--out", str(out),
        ) == EXIT_OK
        payload = json.loads(out.read_text())
        assert payload["meta"]["tool"] == "lnskit"
        assert payload["meta"]["version"] == lk.__version__
        rows = {r["metric"]: r["value"] for r in payload["rows"]}
        assert rows["diameter"] == 5

    def test_missing_file_is_runtime_error(self, tmp_path):
        assert run("metrics", "--in", str(tmp_path / "absent.json")) == 3

    def test_sample_pairs_estimator(self, tmp_path):
        out = tmp_path / "est.csv"
        assert run(
            "metrics", "--family", "d2", "--L", "256", "--sample-pairs", "4000",
            "--out", str(out),
        ) == EXIT_OK
        text = out.read_text()
        assert "average_distance_estimate" in text
        assert "average_distance_se" in text


class TestNavigate:
    def test_ring_greedy_equals_distance(self, tmp_path):
        out = tmp_path / "nav.csv"
        assert run(
            "navigate", "--family", "ring", "--L", "10", "--nav", "greedy",
            "--out", str(out),
        ) == EXIT_OK
        row = [ln for ln in out.read_text().splitlines() if ln.startswith("nav_length")][0]
        assert float(row.split(",")[1]) == pytest.approx(25 / 9)

    def test_two_level_modes_both_work(self, tmp_path):
        for mode in ("rehop", "commit"):
            out = tmp_path / f"nav-{mode}.csv"
            assert run(
                "navigate", "--family", "d4", "--L", "256", "--b", "4", "--k", "3",
                "--nav", "two-level", "--two-level-mode", mode, "--out", str(out),
            ) == EXIT_OK
            assert "nav_length" in out.read_text()

    def test_histogram_rows(self, tmp_path):
        out = tmp_path / "nav.csv"
        assert run(
            "navigate", "--family", "ring", "--L", "8", "--histogram", "--out", str(out)
        ) == EXIT_OK
        text = out.read_text()
        assert "pairs_with_1_hops,16" in text
        assert "pairs_with_4_hops,8" in text


class TestSweepAndCompare:
    def grid_file(self, tmp_path, lines):
        path = tmp_path / "grid.txt"
        path.write_text("\n".join(lines) + "\n")
        return path

    def test_single_point_constant_winner(self, tmp_path):
        grid = self.grid_file(tmp_path, ["# tiny grid", "family=d2 L=64"])
        out = tmp_path / "front.csv"
        assert run("sweep", "--grid", str(grid), "--out", str(out)) == EXIT_OK
        rows = [ln for ln in out.read_text().splitlines() if ln and not ln.startswith("#")]
        assert len(rows) == 1 + 21  # header + default weight grid
        assert all(r.startswith("d2,") for r in rows[1:])

    def test_grid_parse_error_carries_line_number(self, tmp_path):
        grid = self.grid_file(tmp_path, ["family=d2 L=64", "family=d2 L=100"])
        out = tmp_path / "front.csv"
        assert run("sweep", "--grid", str(grid), "--out", str(out)) == EXIT_CONFIG

    def test_grid_bad_token(self, tmp_path, capsys):
        grid = self.grid_file(tmp_path, ["family=d2 L:64"])
        assert run("sweep", "--grid", str(grid)) == EXIT_CONFIG
        assert ":1:" in capsys.readouterr().err

    def test_sweep_and_compare_roundtrip(self, tmp_path):
        g1 = self.grid_file(tmp_path, ["family=s1m L=100 t=10 alpha=0.0"])
        g2 = tmp_path / "grid2.txt"
        g2.write_text("family=s1m L=100 t=30 alpha=0.0\n")
        f1, f2 = tmp_path / "f1.csv", tmp_path / "f2.csv"
        for grid, front in ((g1, f1), (g2, f2)):
            assert run(
                "sweep", "--grid", str(grid), "--target", "distance", "--n", "5",
                "--seed", "3", "--out", str(front),
            ) == EXIT_OK
        out = tmp_path / "cmp.csv"
        assert run(
            "compare", "--frontier", f"small={f1}", "--frontier", f"big={f2}",
            "--out", str(out),
        ) == EXIT_OK
        text = out.read_text()
        assert "winner" in text
        assert "dominance" in text

    def test_percentile_sweep(self, tmp_path):
        grid = self.grid_file(tmp_path, ["family=s1m L=100 t=10 alpha=0.0"])
        out = tmp_path / "p.csv"
        assert run(
            "sweep", "--grid", str(grid), "--n", "10", "--rank", "2", "--out", str(out)
        ) == EXIT_OK
        assert out.read_text().count("\n") > 21

    def test_compare_mismatched_w_grids(self, tmp_path):
        g = self.grid_file(tmp_path, ["family=d2 L=64"])
        f1, f2 = tmp_path / "f1.csv", tmp_path / "f2.csv"
        run("sweep", "--grid", str(g), "--out", str(f1))
        run("sweep", "--grid", str(g), "--w-step", "0.5", "--out", str(f2))
        assert run("compare", "--frontier", f"a={f1}", "--frontier", f"b={f2}") == EXIT_CONFIG


class TestGridFileParsing:
    def test_comments_and_types(self, tmp_path):
        path = tmp_path / "grid.txt"
        path.write_text(
            "# stochastic points\n"
            "family=s2 L=100 t=10 c=5 alpha=1.5  # inline comment\n"
            "family=d3 L=64 K=2 h=8 hub=loop hub_a=1 hub_b=3\n"
        )
        grid = parse_grid_file(path)
        assert grid[0].family == "s2"
        assert grid[0].param_dict["alpha"] == 1.5
        assert grid[1].param_dict["hub"] == "loop"

    def test_empty_grid_rejected(self, tmp_path):
        path = tmp_path / "grid.txt"
        path.write_text("# nothing\n")
        with pytest.raises(lk.ParameterError):
            parse_grid_file(path)


class TestExitCodes:
    def test_success_zero(self, tmp_path):
        assert run("metrics", "--family", "ring", "--L", "10") == EXIT_OK

    def test_validation_two(self):
        assert run("metrics", "--family", "ring", "--L", "2") == EXIT_CONFIG

    def test_runtime_three(self, tmp_path):
        bad = tmp_path / "corrupt.json"
        bad.write_text('{"L":10,"shortcuts":')
        # malformed network file is a validation failure, not a crash
        assert run("metrics", "--in", str(bad)) == EXIT_CONFIG
