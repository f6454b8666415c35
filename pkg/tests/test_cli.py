import json

from csatools import cli, verify
from csatools.errors import ConsistencyError


def run_ok(capsys, argv):
    code = cli.run(argv)
    captured = capsys.readouterr()
    assert code == 0, captured.err
    return captured.out


def run_pairs(capsys, argv):
    """Parse the aligned text output into a key -> value dict."""
    pairs = {}
    for line in run_ok(capsys, argv).splitlines():
        if line.startswith("#") or not line.strip():
            continue
        key, _, value = line.partition(" ")
        pairs[key] = value.strip()
    return pairs


def get_json(capsys, argv):
    out = run_ok(capsys, argv + ["--format", "json-like-stable-schema"])
    lines = out.strip().splitlines()
    assert len(lines) == 1
    return lines[0]


class TestBasicCommands:
    def test_vp(self, capsys):
        pairs = run_pairs(capsys, ["vp", "--p", "3", "--n", "18"])
        assert pairs["vp"] == "2"

    def test_vp_factorial_methods(self, capsys):
        pairs = run_pairs(capsys, ["vp-factorial", "--p", "3", "--n", "9"])
        assert pairs["vp"] == "4"
        pairs = run_pairs(
            capsys, ["vp-factorial", "--p", "3", "--method", "prime-power", "--n", "2"]
        )
        assert pairs["vp"] == "4"
        pairs = run_pairs(
            capsys,
            ["vp-factorial", "--p", "3", "--method", "k-prime-power", "--k", "2", "--n", "2"],
        )
        assert pairs["vp"] == "8"
        pairs = run_pairs(
            capsys, ["vp-factorial", "--p", "3", "--method", "misc", "--k", "2", "--n", "1"]
        )
        assert pairs["vp"] == "8"

    def test_vp_factorial_missing_k_is_usage_error(self, capsys):
        code = cli.run(["vp-factorial", "--p", "3", "--method", "misc", "--n", "1"])
        captured = capsys.readouterr()
        assert code == 2
        assert "--k" in captured.err

    def test_multinomial(self, capsys):
        out = run_ok(capsys, ["multinomial", "--top", "6", "--parts", "2,2,2"])
        assert "90" in out

    def test_segre_degree(self, capsys):
        pairs = run_pairs(capsys, ["segre-degree", "--shape", "2,2"])
        assert pairs["expansion"] == "2"
        assert pairs["closed_form"] == "2"
        assert pairs["agree"] == "true"
        assert pairs["top_power_class"] == "2·l1^1*l2^1"

    def test_bound_general(self, capsys):
        pairs = run_pairs(
            capsys,
            ["bound", "general", "--shape", "3,3,3", "--index", "3", "--period", "3"],
        )
        assert pairs["total"] == "90"
        assert pairs["r"] == "0"

    def test_bound_prime_power(self, capsys):
        pairs = run_pairs(capsys, ["bound", "prime-power", "--p", "3", "--k", "1", "--n", "1"])
        assert pairs["p_part"] == "9"
        assert pairs["m"] == "10"
        assert pairs["total"] == "90"

    def test_bound_baseline(self, capsys):
        pairs = run_pairs(capsys, ["bound", "baseline", "--point", "2:1", "--point", "2:1"])
        assert pairs["total"] == "4"

    def test_bound_improvement(self, capsys):
        pairs = run_pairs(capsys, ["bound", "improvement", "--p", "3", "--k", "1", "--n", "1"])
        assert pairs["baseline"] == "27"
        assert pairs["improved_p_part"] == "9"

    def test_cofactor_m(self, capsys):
        pairs = run_pairs(capsys, ["cofactor-m", "--p", "3", "--k", "1", "--n", "1"])
        assert pairs["m"] == "10"

    def test_karpenko_bound(self, capsys):
        pairs = run_pairs(capsys, ["karpenko-bound", "--p", "3", "--n", "3", "--codim", "20"])
        assert pairs["lower_bound"] == "3"

    def test_corestriction_cert(self, capsys):
        pairs = run_pairs(capsys, ["corestriction-cert", "--p", "3", "--r", "1"])
        assert pairs["codim"] == "20"
        assert pairs["observed_valuation"] == "2"
        assert pairs["lower_bound"] == "3"
        assert pairs["violated"] == "true"

    def test_proof_inequalities(self, capsys):
        pairs = run_pairs(capsys, ["proof-inequalities", "--p", "5", "--r", "1"])
        assert pairs["holds"] == "true"
        assert pairs["pr_ge_r_plus_2"] == "true"
        assert pairs["pr_ge_rp"] == "true"

    def test_index_reduction(self, capsys):
        pairs = run_pairs(
            capsys,
            ["index-reduction", "--p", "3", "--target", "1,1,2", "--fiber", "1,1,1", "--d", "2"],
        )
        assert pairs["index"] == "27"

    def test_prop1(self, capsys):
        pairs = run_pairs(capsys, ["prop1", "--p", "3"])
        assert pairs["index_of_A"] == "9"
        assert pairs["index_of_A_prime"] == "27"

    def test_prop1_table(self, capsys):
        out = run_ok(capsys, ["prop1-table", "--p", "3"])
        lines = out.strip().splitlines()
        assert lines[0].split() == ["i", "factor", "index", "term", "case"]
        assert len(lines) == 10  # header + 9 rows

    def test_prop2(self, capsys):
        pairs = run_pairs(capsys, ["prop2", "--p", "5", "--d", "2", "--n", "3"])
        assert pairs["index_of_A"] == "25"
        assert pairs["index_of_A_prime"] == "125"


class TestExitCodes:
    def test_unknown_subcommand_is_usage_error(self, capsys):
        assert cli.run(["not-a-command"]) == 2
        assert "usage" in capsys.readouterr().err

    def test_missing_flag_is_usage_error(self, capsys):
        assert cli.run(["vp", "--p", "3"]) == 2
        capsys.readouterr()

    def test_domain_error_composite_prime(self, capsys):
        assert cli.run(["vp", "--p", "6", "--n", "18"]) == 1
        assert "not a prime" in capsys.readouterr().err

    def test_domain_error_certificate_p2(self, capsys):
        assert cli.run(["corestriction-cert", "--p", "2", "--r", "1"]) == 1
        assert "odd" in capsys.readouterr().err

    def test_domain_error_prop2_preconditions(self, capsys):
        assert cli.run(["prop2", "--p", "5", "--d", "3", "--n", "3"]) == 1
        capsys.readouterr()

    def test_domain_error_vp_of_zero(self, capsys):
        assert cli.run(["vp", "--p", "3", "--n", "0"]) == 1
        capsys.readouterr()

    def test_malformed_csv_is_usage_error(self, capsys):
        assert cli.run(["segre-degree", "--shape", "2,x"]) == 2
        capsys.readouterr()

    def test_budget_env_var(self, capsys, monkeypatch):
        monkeypatch.setenv("CSATOOLS_ITERATION_BUDGET", "10")
        assert cli.run(["karpenko-bound", "--p", "3", "--n", "3", "--codim", "20"]) == 1
        assert "budget" in capsys.readouterr().err
        monkeypatch.setenv("CSATOOLS_ITERATION_BUDGET", "25")
        assert cli.run(["karpenko-bound", "--p", "3", "--n", "3", "--codim", "20"]) == 0
        capsys.readouterr()

    def test_internal_inconsistency_is_exit_3(self, capsys, monkeypatch):
        def broken(p, k, n):
            raise ConsistencyError("forced for the test")

        monkeypatch.setattr(cli.bounds, "prime_power_bound", broken)
        assert cli.run(["bound", "prime-power", "--p", "3", "--k", "1", "--n", "1"]) == 3
        assert "internal consistency failure" in capsys.readouterr().err

    def test_failing_verify_suite_is_exit_3(self, capsys, monkeypatch):
        failing = verify.SuiteResult("known-values", checks=1, failures=["forced"])
        monkeypatch.setattr(cli.verify, "run_suites", lambda names=None: [failing])
        assert cli.run(["verify", "--suite", "known-values"]) == 3
        captured = capsys.readouterr()
        assert "FAIL" in captured.out
        assert "forced" in captured.err


class TestStructuredOutput:
    def test_record_field_order(self, capsys):
        line = get_json(capsys, ["bound", "prime-power", "--p", "3", "--k", "1", "--n", "1"])
        record = json.loads(line)
        assert list(record) == ["command", "inputs", "outputs", "provenance"]
        assert record["command"] == "bound prime-power"
        assert record["inputs"] == {"p": "3", "k": "1", "n": "1"}
        assert record["outputs"] == {"p_part": "9", "m": "10", "total": "90"}

    def test_numbers_are_decimal_strings(self, capsys):
        line = get_json(capsys, ["cofactor-m", "--p", "3", "--k", "1", "--n", "2"])
        record = json.loads(line)
        assert record["outputs"]["m"] == "116858170"
        assert all(isinstance(v, str) for v in record["outputs"].values())

    def test_round_trip_is_byte_identical(self, capsys):
        for argv in (
            ["vp", "--p", "3", "--n", "18"],
            ["segre-degree", "--shape", "3,3,3"],
            ["corestriction-cert", "--p", "3", "--r", "1"],
            ["prop1-table", "--p", "3"],
        ):
            line = get_json(capsys, argv)
            parsed = json.loads(line)
            assert json.dumps(parsed, separators=(", ", ": ")) == line

    def test_rendering_is_deterministic(self, capsys):
        argv = ["bound", "general", "--shape", "2,3,4", "--index", "6", "--period", "3"]
        assert get_json(capsys, argv) == get_json(capsys, argv)

    def test_booleans_render_as_words(self, capsys):
        line = get_json(capsys, ["proof-inequalities", "--p", "3", "--r", "2"])
        record = json.loads(line)
        assert record["outputs"]["holds"] == "true"


class TestVpFlag:
    def test_adds_valuation_columns(self, capsys):
        pairs = run_pairs(
            capsys, ["bound", "prime-power", "--p", "3", "--k", "1", "--n", "1", "--vp"]
        )
        assert pairs["vp(p_part)"] == "2"
        assert pairs["vp(total)"] == "2"
        assert pairs["vp(m)"] == "0"

    def test_json_decoration(self, capsys):
        line = get_json(capsys, ["cofactor-m", "--p", "2", "--k", "2", "--n", "1", "--vp"])
        record = json.loads(line)
        assert record["outputs"] == {"m": "3", "vp(m)": "0"}

    def test_rejected_on_primeless_commands(self, capsys):
        assert cli.run(["multinomial", "--top", "2", "--parts", "1,1", "--vp"]) == 2
        capsys.readouterr()


class TestVerifyCommand:
    def test_single_suite(self, capsys):
        out = run_ok(capsys, ["verify", "--suite", "known-values"])
        assert "known-values" in out
        assert "result: ok (1/1 suites)" in out

    def test_suite_selection_is_deterministic(self, capsys):
        argv = ["verify", "--suite", "chow-laws", "--suite", "brauer-model"]
        first = run_ok(capsys, argv)
        second = run_ok(capsys, argv)
        assert first == second

    def test_unknown_suite_rejected(self, capsys):
        assert cli.run(["verify", "--suite", "bogus"]) == 2
        capsys.readouterr()

    def test_json_record(self, capsys):
        line = get_json(capsys, ["verify", "--suite", "known-values"])
        record = json.loads(line)
        assert record["outputs"]["overall"] == "ok"
