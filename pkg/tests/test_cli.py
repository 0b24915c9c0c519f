"""End-to-end tests for the command-line interface and its exit codes."""

import json

import pytest

from congruential_euler.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_basic_table(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "--cache-dir", str(tmp_path), "compute", "--N", "3", "--j", "0",
            "--n-max", "2",
        )
        assert code == 0
        assert out == "0 1/1\n1 -1/1\n2 19/1\n"

    def test_j_factorial_seed(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "--cache-dir", str(tmp_path), "compute", "--N", "6", "--j", "3",
            "--n-max", "0",
        )
        assert code == 0
        assert out == "0 6/1\n"

    def test_invalid_params_exit_2(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "--cache-dir", str(tmp_path), "compute", "--N", "0", "--j", "0",
            "--n-max", "2",
        )
        assert code == 2
        assert "error" in err

    def test_json_lines(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "--format", "json", "--cache-dir", str(tmp_path), "compute",
            "--N", "4", "--j", "2", "--n-max", "2",
        )
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        assert rows[1] == {"n": 1, "value": "-2/15"}

    def test_determinism_warm_vs_cold_cache(self, capsys, tmp_path):
        args = ("--cache-dir", str(tmp_path), "compute", "--N", "5", "--j", "3",
                "--n-max", "6")
        _, cold, _ = run(capsys, *args)
        _, warm, _ = run(capsys, *args)
        assert cold == warm

    def test_populates_cache(self, capsys, tmp_path):
        run(capsys, "--cache-dir", str(tmp_path), "compute", "--N", "3", "--j", "0",
            "--n-max", "4")
        files = list(tmp_path.glob("euler_N3_j0.txt"))
        assert len(files) == 1
        assert files[0].read_text().splitlines()[0] == "congruential-euler-cache v1 N=3 j=0"


class TestVerify:
    def test_main_passes(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "--cache-dir", str(tmp_path), "verify", "main", "--p", "3",
            "--j", "0", "--r", "2", "--n", "0..20",
        )
        assert code == 0
        assert "PASS" in out

    def test_gessel_passes(self, capsys, tmp_path):
        code, _, _ = run(
            capsys, "--cache-dir", str(tmp_path), "verify", "gessel", "--p", "2",
            "--m", "1", "--k", "2", "--n", "0..10",
        )
        assert code == 0

    def test_non_prime_exit_2(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "--cache-dir", str(tmp_path), "verify", "main", "--p", "4",
            "--j", "0", "--r", "1",
        )
        assert code == 2
        assert "odd prime" in err

    def test_json_report(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "--format", "json", "--cache-dir", str(tmp_path), "verify",
            "special-40", "--r", "2", "--n", "0..5",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["theorem_id"] == "special_40"
        assert payload["status"] == "pass"

    def test_komatsu_liu_pairs(self, capsys, tmp_path):
        code, _, _ = run(
            capsys, "--cache-dir", str(tmp_path), "verify", "komatsu-liu", "--k", "1",
            "--pairs", "0,6", "1,7",
        )
        assert code == 0

    def test_lemma_xm(self, capsys, tmp_path):
        code, _, _ = run(
            capsys, "--cache-dir", str(tmp_path), "verify", "lemma-xm", "--p", "3",
            "--m", "1", "--order", "30",
        )
        assert code == 0

    def test_inconclusive_check_exit_1(self, capsys, tmp_path):
        # a window too short to witness stabilization is not a pass
        code, out, _ = run(
            capsys, "--cache-dir", str(tmp_path), "verify", "special-60", "--r", "1",
            "--n-max", "0",
        )
        assert code == 1
        assert "INCONCLUSIVE" in out


class TestScan:
    def test_single_scan(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "--cache-dir", str(tmp_path), "scan", "--p", "3", "--m", "2",
            "--j", "3", "--r", "2",
        )
        assert code == 0
        assert "cycle=[7,1,4]" in out

    def test_constraint_violation_exit_2(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "--cache-dir", str(tmp_path), "scan", "--p", "5", "--m", "3",
            "--j", "0", "--r", "1",
        )
        assert code == 2
        assert "divide" in err

    def test_missing_args_exit_2(self, capsys, tmp_path):
        code, _, _ = run(capsys, "--cache-dir", str(tmp_path), "scan", "--p", "3")
        assert code == 2

    def test_grid_file(self, capsys, tmp_path):
        grid = tmp_path / "grid.json"
        grid.write_text(json.dumps([
            {"p": 3, "m": 2, "j": 1, "r": 1},
            {"p": 3, "m": 2, "j": 3, "r": 1},
        ]))
        code, out, _ = run(
            capsys, "--format", "json", "--cache-dir", str(tmp_path), "scan",
            "--grid", str(grid),
        )
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        assert len(rows) == 2
        assert all(row["status"] == "ok" for row in rows)

    def test_jobs_flag_gives_same_output(self, capsys, tmp_path):
        grid = tmp_path / "grid.json"
        grid.write_text(json.dumps([
            {"p": 3, "m": 2, "j": 1, "r": 1},
            {"p": 3, "m": 2, "j": 3, "r": 2},
        ]))
        _, serial, _ = run(capsys, "--cache-dir", str(tmp_path), "scan", "--grid", str(grid))
        _, parallel, _ = run(
            capsys, "--jobs", "4", "--cache-dir", str(tmp_path), "scan", "--grid", str(grid)
        )
        assert serial == parallel


class TestIdentities:
    def test_zeta_all_equal(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "--format", "json", "--cache-dir", str(tmp_path), "identities",
            "zeta", "--n-max", "2",
        )
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        assert len(rows) == 16
        assert all(row["equal"] for row in rows)

    def test_bernoulli_all_equal(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "--format", "json", "--cache-dir", str(tmp_path), "identities",
            "bernoulli", "--n-max", "2",
        )
        assert code == 0
        assert all(json.loads(line)["equal"] for line in out.splitlines())

    def test_zeros(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "--format", "json", "--cache-dir", str(tmp_path), "identities",
            "zeros", "--family", "4,0", "--count", "3",
        )
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        assert len(rows) == 3
        assert all(row["residual"] < 1e-10 for row in rows)

    def test_radius(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "--format", "json", "--cache-dir", str(tmp_path), "identities",
            "radius", "--N", "4", "--j", "2", "--n-max", "20",
        )
        assert code == 0
        payload = json.loads(out)
        assert abs(payload["radius_over_pi"] - 2**0.5) < 0.05

    def test_special_values(self, capsys, tmp_path):
        code, _, _ = run(
            capsys, "--cache-dir", str(tmp_path), "identities", "special-values",
            "--k-max", "1",
        )
        assert code == 0


class TestCache:
    def test_inspect_and_clear(self, capsys, tmp_path):
        run(capsys, "--cache-dir", str(tmp_path), "compute", "--N", "2", "--j", "0",
            "--n-max", "3")
        code, out, _ = run(capsys, "--cache-dir", str(tmp_path), "cache", "inspect")
        assert code == 0
        assert "euler_N2_j0.txt" in out
        code, _, err = run(capsys, "--cache-dir", str(tmp_path), "cache", "clear")
        assert code == 0
        assert not list(tmp_path.glob("*.txt"))

    def test_inspect_json(self, capsys, tmp_path):
        run(capsys, "--cache-dir", str(tmp_path), "compute", "--N", "2", "--j", "0",
            "--n-max", "3")
        code, out, _ = run(
            capsys, "--format", "json", "--cache-dir", str(tmp_path), "cache", "inspect"
        )
        assert code == 0
        payload = json.loads(out.splitlines()[0])
        assert payload["entries"] == 4


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as excinfo:
        main(["bogus-subcommand"])
    assert excinfo.value.code == 2
