import csv
import json
import subprocess
import sys

import pytest

from kappalab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestGen:
    def test_dimacs_ag4(self, capsys):
        code, out = run_cli(capsys, "gen", "--family", "ag", "--n", "4", "--format", "dimacs")
        assert code == 0
        assert out.splitlines()[0] == "p edge 12 24"

    def test_dimacs_s4(self, capsys):
        code, out = run_cli(capsys, "gen", "--family", "s2", "--n", "4", "--format", "dimacs")
        assert code == 0
        assert out.splitlines()[0] == "p edge 24 60"

    def test_json_schema_field(self, capsys):
        code, out = run_cli(capsys, "gen", "--family", "ag", "--n", "4")
        data = json.loads(out)
        assert data["schema"] == 1
        assert len(data["vertices"]) == 12

    def test_out_of_range_usage_error(self, capsys):
        code, _ = run_cli(capsys, "gen", "--family", "ag", "--n", "2")
        assert code == 2

    def test_write_to_file(self, capsys, tmp_path):
        path = tmp_path / "g.dimacs"
        code, _ = run_cli(
            capsys, "gen", "--family", "ag", "--n", "4", "--format", "dimacs",
            "--output", str(path),
        )
        assert code == 0
        assert path.read_text().startswith("p edge 12 24")

    def test_io_failure(self, capsys):
        code, _ = run_cli(
            capsys, "gen", "--family", "ag", "--n", "4",
            "--output", "/nonexistent-dir/g.json",
        )
        assert code == 1


class TestKappa:
    def test_ag4_ell4_exhaustive(self, capsys):
        code, out = run_cli(
            capsys, "kappa", "--family", "ag", "--n", "4", "--ell", "4", "--exhaustive"
        )
        assert code == 0
        data = json.loads(out)
        assert data["value"] == 8
        assert data["tier"] == "Exhaustive"
        assert data["witness"]["count"] >= 4

    def test_ag5_witness(self, capsys):
        code, out = run_cli(
            capsys, "kappa", "--family", "ag", "--n", "5", "--ell", "3",
            "--witness", "--B", "1",
        )
        assert code == 0
        data = json.loads(out)
        assert data["value"] == 10
        assert data["tier"] == "WitnessUpperBound"

    def test_inconclusive_budget_exit_code(self, capsys):
        code, out = run_cli(
            capsys, "kappa", "--family", "ag", "--n", "4", "--ell", "3",
            "--budget", "50",
        )
        assert code == 3
        data = json.loads(out)
        assert data["value"] is None
        assert data["inconclusive_above"] is not None

    def test_rerun_is_byte_identical(self, capsys):
        args = ("kappa", "--family", "ag", "--n", "4", "--ell", "3", "--jobs", "2")
        _, out1 = run_cli(capsys, *args)
        _, out2 = run_cli(capsys, *args)
        assert out1 == out2

    def test_jobs_only_differ_in_metadata(self, capsys):
        _, out1 = run_cli(capsys, "kappa", "--family", "ag", "--n", "4", "--ell", "3",
                          "--jobs", "1")
        _, out4 = run_cli(capsys, "kappa", "--family", "ag", "--n", "4", "--ell", "3",
                          "--jobs", "4")
        d1, d4 = json.loads(out1), json.loads(out4)
        assert d1.pop("jobs") == 1
        assert d4.pop("jobs") == 4
        assert d1 == d4


class TestVerify:
    def test_basic_consistent(self, capsys):
        code, out = run_cli(capsys, "verify", "--lemma", "basic", "--family", "ag", "--n", "5")
        assert code == 0
        data = json.loads(out)
        assert data["verdict"] == "consistent"
        assert data["violations"] == []

    def test_claims_violations_found(self, capsys):
        # the stated cross-neighbor cap fails for 12 pairs at n = 5
        code, out = run_cli(capsys, "verify", "--lemma", "claims", "--family", "ag", "--n", "5")
        assert code == 4
        data = json.loads(out)
        assert data["verdict"] == "violated"
        assert len(data["violations"]) == 12

    def test_cut_structure_lists_exceptions(self, capsys):
        code, out = run_cli(
            capsys, "verify", "--lemma", "cut-structure", "--family", "ag",
            "--n", "4", "--bound", "5",
        )
        assert code == 0
        data = json.loads(out)
        counts = dict((sig, c) for sig, c in data["outcome_counts"])
        assert counts["4-cycle,4-cycle"] == 3
        assert counts["4-cycle,2-path"] == 24
        assert len(data["exceptional_faults"]) == 27

    def test_remark_minima(self, capsys):
        code, out = run_cli(capsys, "verify", "--lemma", "remark", "--family", "ag", "--n", "6")
        assert code == 0
        data = json.loads(out)
        assert data["notes"] == ["three-set minimum 20, four-set minimum 24"]

    def test_neighbor_bounds_requires_set_size(self, capsys):
        code, _ = run_cli(capsys, "verify", "--lemma", "neighbor-bounds",
                          "--family", "ag", "--n", "4")
        assert code == 2

    def test_unknown_lemma_rejected_by_parser(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--lemma", "nonsense", "--family", "ag", "--n", "4"])
        assert exc.value.code == 2

    def test_sampled_cut_structure_deterministic(self, capsys):
        args = (
            "verify", "--lemma", "cut-structure", "--family", "ag", "--n", "5",
            "--bound", "10", "--mode", "sampled", "--trials", "2000", "--seed", "11",
        )
        _, out1 = run_cli(capsys, *args, "--jobs", "1")
        _, out2 = run_cli(capsys, *args, "--jobs", "2")
        d1, d2 = json.loads(out1), json.loads(out2)
        d1.pop("jobs")
        d2.pop("jobs")
        assert d1 == d2


class TestTable:
    def read_rows(self, out):
        return list(csv.DictReader(out.splitlines()))

    def test_ag_table_small_budget_uses_witness_tier(self, capsys):
        code, out = run_cli(capsys, "table", "--families", "ag", "--n-max", "7",
                            "--budget", "5000")
        assert code == 0
        rows = self.read_rows(out)
        by_key = {(r["family"], r["ell"], r["n"]): r for r in rows}
        r = by_key[("ag", "5", "5")]
        assert r["formula_value"] == r["value"] == "16"
        assert r["match"] == "True"
        r = by_key[("ag", "3", "7")]
        assert r["value"] == "18"
        assert r["tier"] == "WitnessUpperBound"
        # kappa_5 rows start at n = 5
        assert ("ag", "5", "4") not in by_key

    def test_s2_table_witness_rows(self, capsys):
        code, out = run_cli(capsys, "table", "--families", "s2", "--n-max", "5",
                            "--budget", "1000")
        assert code == 0
        rows = self.read_rows(out)
        by_key = {(r["family"], r["ell"], r["n"]): r for r in rows}
        assert by_key[("s2", "4", "4")]["value"] == "10"
        assert by_key[("s2", "4", "4")]["match"] == "True"
        assert by_key[("s2", "5", "4")]["value"] == "12"

    def test_h_extra_column_is_static_reference(self, capsys):
        code, out = run_cli(capsys, "table", "--families", "ag", "--n-max", "5",
                            "--budget", "1000")
        rows = self.read_rows(out)
        for r in rows:
            assert r["h_extra_note"] == "not computed (static reference)"
        by_key = {(r["family"], r["ell"], r["n"]): r for r in rows}
        assert by_key[("ag", "3", "5")]["h_extra_value"] == "9"   # 4n-11
        assert by_key[("ag", "3", "4")]["h_extra_value"] == ""    # outside validity

    def test_exhaustive_tier_when_budget_allows(self, capsys):
        code, out = run_cli(capsys, "table", "--families", "ag", "--n-max", "4",
                            "--budget", "100000")
        rows = self.read_rows(out)
        assert all(r["tier"] in ("Exhaustive", "RuleFewerThanEll") for r in rows)
        assert all(r["match"] == "True" for r in rows)

    def test_bad_family_usage_error(self, capsys):
        code, _ = run_cli(capsys, "table", "--families", "zz")
        assert code == 2


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "kappalab.cli", "gen", "--family", "ag", "--n", "3",
             "--format", "dimacs"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.splitlines()[0] == "p edge 3 3"


class TestConfigResolution:
    def test_env_budget_override(self, capsys, monkeypatch):
        monkeypatch.setenv("KAPPALAB_BUDGET", "123456")
        code, out = run_cli(capsys, "kappa", "--family", "ag", "--n", "4", "--ell", "3")
        assert code == 0
        assert json.loads(out)["budget"] == 123456

    def test_budget_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("KAPPALAB_BUDGET", "123456")
        code, out = run_cli(capsys, "kappa", "--family", "ag", "--n", "4",
                            "--ell", "3", "--budget", "99999")
        assert json.loads(out)["budget"] == 99999

    def test_jobs_zero_auto_detect_recorded(self, capsys):
        import os

        code, out = run_cli(capsys, "kappa", "--family", "ag", "--n", "4",
                            "--ell", "3", "--jobs", "0")
        assert code == 0
        assert json.loads(out)["jobs"] == (os.cpu_count() or 1)
