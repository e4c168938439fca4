import json
import subprocess
import sys

BASE = [sys.executable, "-m", "starkbeta.cli"]


def run_cli(*args, check=False):
    return subprocess.run(BASE + list(args), capture_output=True, text=True,
                          check=check)


class TestEval:
    def test_stark_unit_example(self):
        out = run_cli("eval", "stark-unit", "--a", "1", "--m", "3",
                      "--format", "text")
        assert out.returncode == 0
        assert out.stdout.strip().startswith("3.0000000000")

    def test_gamma_p_example(self):
        out = run_cli("eval", "gamma-p", "--p", "5", "--z", "3",
                      "--format", "text")
        assert out.returncode == 0
        assert out.stdout.strip() == "-2 + O(5^12)"

    def test_hurwitz_example(self):
        out = run_cli("eval", "hurwitz", "--s", "0", "--m", "3", "--a", "1",
                      "--format", "text")
        assert out.returncode == 0
        assert out.stdout.strip().startswith("0.16666666666666")

    def test_gamma_p_off_integers_returns_class(self):
        out = run_cli("eval", "gamma-p", "--p", "5", "--z", "7/25",
                      "--format", "text")
        assert out.returncode == 0
        assert out.stdout.startswith("(val=0, log=")

    def test_json_output(self):
        out = run_cli("eval", "gamma-p", "--p", "5", "--z", "3")
        obj = json.loads(out.stdout)
        assert obj["value"] == "-2 + O(5^12)"

    def test_usage_error_exit_2(self):
        assert run_cli("eval", "gamma-p", "--p", "5").returncode == 2
        assert run_cli("eval", "nonsense").returncode == 2
        assert run_cli("bogus-command").returncode == 2

    def test_precision_flag(self):
        out = run_cli("eval", "gamma-p", "--p", "5", "--z", "3",
                      "--precision", "6", "--format", "text")
        assert out.stdout.strip() == "-2 + O(5^6)"

    def test_env_var_override(self):
        import os
        env = dict(os.environ, STARKBETA_PRECISION="6", STARKBETA_P="5")
        out = subprocess.run(
            BASE + ["eval", "gamma-p", "--z", "3", "--format", "text"],
            capture_output=True, text=True, env=env)
        assert out.stdout.strip() == "-2 + O(5^6)"


class TestVerify:
    def test_padic_core_passes_and_streams_json(self):
        out = run_cli("verify", "padic-core", "--quick")
        assert out.returncode == 0
        lines = out.stdout.strip().splitlines()
        head = json.loads(lines[0])
        assert "config" in head and "config_hash" in head
        tail = json.loads(lines[-1])
        assert tail["summary"]["fail"] == 0
        body = [json.loads(x) for x in lines[1:-1]]
        assert all({"check", "params", "status", "residual",
                    "config_hash"} <= set(obj) for obj in body)

    def test_determinism_same_seed(self):
        a = run_cli("verify", "padic-core", "--quick", "--seed", "5")
        b = run_cli("verify", "padic-core", "--quick", "--seed", "5")
        assert a.stdout == b.stdout

    def test_tsv_format(self):
        out = run_cli("verify", "rec-mod-roots", "--quick", "--format", "tsv",
                      "--p", "3")
        assert out.returncode == 0
        header = out.stdout.splitlines()[0]
        assert header == "check\tparams\tstatus\tresidual"

    def test_unknown_suite_exit_2(self):
        assert run_cli("verify", "no-such-suite").returncode == 2

    def test_failed_check_exit_1(self, monkeypatch, capsys):
        from starkbeta import cli
        from starkbeta.checks import CheckReport

        monkeypatch.setitem(cli.SUITES, "padic-core",
                            lambda cfg: [CheckReport("stub", {}, "fail")])
        rc = cli.main(["verify", "padic-core"])
        assert rc == 1
        tail = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
        assert tail["summary"]["fail"] == 1

    def test_bad_config_exit_2(self):
        assert run_cli("verify", "padic-core", "--p", "4").returncode == 2


class TestStarkTable:
    def test_m5_rows(self):
        out = run_cli("stark-table", "--m", "5..5", "--format", "tsv")
        assert out.returncode == 0
        lines = out.stdout.strip().splitlines()
        assert lines[0].startswith("m\ta\tvalue")
        rows = [line.split("\t") for line in lines[1:]]
        assert len(rows) == 2
        assert all(r[3] == "x^2 - 5x + 5" for r in rows)
        assert all(r[6] == "True" for r in rows)

    def test_m3_value(self):
        out = run_cli("stark-table", "--m", "3..3", "--format", "tsv")
        row = out.stdout.strip().splitlines()[1].split("\t")
        assert row[2].startswith("3.0000")
        assert row[3] == "x - 3"

    def test_m6_value_one(self):
        out = run_cli("stark-table", "--m", "6..6", "--format", "tsv")
        row = out.stdout.strip().splitlines()[1].split("\t")
        assert row[2].startswith("1.0000")
