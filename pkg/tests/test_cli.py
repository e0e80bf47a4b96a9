"""CLI behaviour: exit codes, reports, JSON stability, worker independence."""

import json

import pytest
from click.testing import CliRunner

from tarski_lab.cli import main, run


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, args, **kwargs):
    return runner.invoke(main, args, catch_exceptions=False, **kwargs)


class TestExitCodes:
    def test_true_verdict_exits_zero(self, runner):
        result = invoke(runner, ["order", "--universe", "a,b,c", "I", "cxy {a} {b}"])
        assert result.exit_code == 0
        assert "verdict: true" in result.output

    def test_false_verdict_exits_one_with_witness(self, runner):
        result = invoke(
            runner, ["order", "--universe", "a,b,c", "cxy {a} {b}", "cxy {c} {b}"]
        )
        assert result.exit_code == 1
        assert "witness: {b}" in result.output

    def test_parse_error_exits_two(self, runner):
        result = invoke(runner, ["order", "--universe", "a,b,c", "cxy {a}", "I"])
        assert result.exit_code == 2

    def test_universe_required(self, runner):
        result = invoke(runner, ["check", "I"])
        assert result.exit_code == 2

    def test_constraint_error_exits_two(self, runner):
        result = invoke(runner, ["check", "--universe", "a,b,c", "s {a,b} c"])
        assert result.exit_code == 2

    def test_run_helper_matches(self):
        assert run(["order", "--universe", "a,b", "I", "cxy {a} {b}"]) == 0
        assert run(["order", "--universe", "a,b", "U", "I"]) == 1
        assert run(["no-such-command"]) == 2


class TestJsonStability:
    def test_byte_stable_across_runs(self, runner):
        args = ["enumerate", "--n", "2", "--include-top", "--json"]
        first = invoke(runner, args).output
        second = invoke(runner, args).output
        assert first == second
        payload = json.loads(first)
        assert payload["data"]["count"] == 7

    def test_json_has_no_timing(self, runner):
        result = invoke(runner, ["check", "--universe", "a,b", "I", "--json"])
        payload = json.loads(result.output)
        assert "time" not in result.output
        assert set(payload) == {"command", "data", "verdict"}

    def test_text_report_has_timing(self, runner):
        result = invoke(runner, ["check", "--universe", "a,b", "I"])
        assert "time-ms:" in result.output


class TestCommands:
    def test_check_cofinite_caveat(self, runner):
        result = invoke(
            runner, ["check", "--universe", "cofinite", "cprime {0} co{0}", "--json"]
        )
        assert result.exit_code == 0  # still a consequence operator
        payload = json.loads(result.output)
        report = payload["data"]["axiom-report"]
        assert report["axiom-iii"]["passed"] is False
        assert report["axiom-iii"]["witness"] == {"set": "co{0}", "element": 0}

    def test_meet_lists_closed_sets(self, runner):
        result = invoke(
            runner,
            ["meet", "--universe", "a,b,c", "cxy {a} {b}", "cxy {c} {b}", "--json"],
        )
        payload = json.loads(result.output)
        assert "{a,b,c}" in payload["data"]["closed-sets"]

    def test_wjoin_at_set(self, runner):
        result = invoke(
            runner,
            [
                "wjoin", "--universe", "a,b,c",
                "cxy {a} {b}", "cxy {c} {b}", "--at", "{b}", "--json",
            ],
        )
        payload = json.loads(result.output)
        assert payload["data"]["value"] == "{a,b,c}"

    def test_complement(self, runner):
        result = invoke(
            runner,
            ["complement", "--universe", "a,b,c", "cxy {a} {b}", "cxy {a,c} {b}", "--json"],
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["data"]["lattice-check"] is True

    def test_chain_witness_pair(self, runner):
        result = invoke(
            runner,
            ["chain", "--universe", "a,b,c", "I", "cxy {a} {b}", "cxy {c} {b}"],
        )
        assert result.exit_code == 1
        assert "incomparable-pair" in result.output

    def test_sublattice_all_generators(self, runner):
        result = invoke(
            runner,
            ["sublattice", "--universe", "a,b,c", "--b", "{b}", "--all-generators", "--json"],
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["data"]["non-chain-witness"]["first"] == "{a,b}"

    def test_descend(self, runner):
        result = invoke(runner, ["descend", "100", "--json"])
        assert result.exit_code == 0
        assert json.loads(result.output)["data"]["length"] == 100

    def test_enumerate_excludes_top_by_default(self, runner):
        result = invoke(runner, ["enumerate", "--n", "3", "--json"])
        assert json.loads(result.output)["data"]["count"] == 60

    def test_enumerate_workers_equal(self, runner):
        base = invoke(runner, ["enumerate", "--n", "2", "--list-systems", "--json"]).output
        multi = invoke(
            runner, ["enumerate", "--n", "2", "--list-systems", "--workers", "2", "--json"]
        ).output
        assert base == multi

    def test_atoms(self, runner):
        result = invoke(runner, ["atoms", "--n", "2", "--json"])
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["data"]["dense-cover"] is True

    def test_lemma26(self, runner):
        result = invoke(runner, ["lemma26", "--universe", "a,b,c", "s {a} b", "--json"])
        assert json.loads(result.output)["data"]["witness"] == "a"

    def test_lemma26_axiomless_is_usage_error(self, runner):
        result = invoke(runner, ["lemma26", "--universe", "a,b,c", "cxy {a} {b}"])
        assert result.exit_code == 2

    def test_theories(self, runner):
        result = invoke(
            runner, ["theories", "--universe", "a,b,c", "cxy {a} {b}", "--json"]
        )
        payload = json.loads(result.output)
        assert payload["data"]["count"] == 6

    def test_spec_file_bindings(self, runner, tmp_path):
        spec = tmp_path / "f.ops"
        spec.write_text("universe finite a b c\nA = cxy {a} {b}\nB = cxy {a,c} {b}\n")
        result = invoke(runner, ["order", "--spec", str(spec), "A", "B"])
        assert result.exit_code == 0

    def test_words_roundtrip(self, runner):
        encoded = invoke(runner, ["words", "--alphabet", "abc", "encode", "ab", "--json"])
        code = json.loads(encoded.output)["data"]["code"]
        decoded = invoke(
            runner, ["words", "--alphabet", "abc", "decode", str(code), "--json"]
        )
        assert json.loads(decoded.output)["data"]["word"] == "ab"

    def test_words_split(self, runner):
        result = invoke(
            runner, ["words", "--alphabet", "abc", "split", "abc", "--k", "1", "--json"]
        )
        payload = json.loads(result.output)
        assert payload["data"]["splits"] == ["a,bc", "ab,c"]

    def test_words_classify(self, runner):
        result = invoke(
            runner,
            ["words", "--alphabet", "abcehimst", "classify", "mathematics", "--json"],
        )
        payload = json.loads(result.output)
        assert payload["data"]["size"] == 11
        assert payload["data"]["decompositions"] == 1024

    def test_words_equiv_verdict(self, runner):
        good = invoke(
            runner,
            ["words", "--alphabet", "abcehimst", "equiv", "math,e,mat,ics", "mathematics"],
        )
        assert good.exit_code == 0
        bad = invoke(runner, ["words", "--alphabet", "ab", "equiv", "ab", "ba"])
        assert bad.exit_code == 1

    def test_concurrent_from_file(self, runner, tmp_path):
        edges = tmp_path / "rel.txt"
        edges.write_text("".join(f"{i} {j}\n" for i in range(3) for j in range(3) if i <= j))
        result = invoke(runner, ["concurrent", str(edges), "--json"])
        assert result.exit_code == 0
        assert json.loads(result.output)["data"]["bound"] == "2"

    def test_concurrent_failing_subset(self, runner, tmp_path):
        edges = tmp_path / "rel.txt"
        edges.write_text("".join(f"{i} {j}\n" for i in range(3) for j in range(3) if i < j))
        result = invoke(
            runner, ["concurrent", str(edges), "--domain", "0,1,2", "--json"]
        )
        assert result.exit_code == 1
        assert json.loads(result.output)["data"]["failing-subset"] == ["2"]

    def test_demo_list(self, runner):
        result = invoke(runner, ["demo", "--list", "--json"])
        names = json.loads(result.output)["data"]["demos"]
        assert "example-2.8" in names and len(names) == 11

    def test_unknown_demo_is_usage_error(self, runner):
        result = invoke(runner, ["demo", "no-such-demo"])
        assert result.exit_code == 2
