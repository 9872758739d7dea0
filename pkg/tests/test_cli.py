import importlib
import json
from dataclasses import replace

import pytest

from uzgraph.cli import EXIT_FAILED, EXIT_LIMIT, EXIT_OK, EXIT_USAGE, main
from uzgraph.invariants import CSV_FIELDS
from uzgraph.sweep import TABLE_COLUMNS

# uzgraph re-exports the sweep() function, which shadows the submodule attribute
sweep_module = importlib.import_module("uzgraph.sweep")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def _env(clean_env):
    return clean_env


class TestInfo:
    def test_z15(self, capsys):
        code, out, _ = run(capsys, "info", "zn:15")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["num_maximal_ideals"] == 2
        assert len(doc["units"]) == 8

    def test_trivial_ring(self, capsys):
        doc = json.loads(run(capsys, "info", "zn:1")[1])
        assert doc["order"] == 1
        assert doc["num_maximal_ideals"] == 0

    def test_dual_numbers_over_z2(self, capsys):
        doc = json.loads(run(capsys, "info", "polyq:2:x^2")[1])
        assert doc["is_local"] is True
        assert len(doc["units"]) == 2

    def test_parse_error(self, capsys):
        code, out, err = run(capsys, "info", "zn:x")
        assert code == EXIT_USAGE
        assert out == ""
        assert err.startswith("error: ")

    def test_limit_error(self, capsys):
        code, _, err = run(capsys, "info", "zn:600")
        assert code == EXIT_LIMIT
        assert "exceeds limit 512" in err


class TestBuild:
    def test_z6_csv(self, capsys):
        code, out, _ = run(capsys, "build", "zn:6", "--format", "csv")
        assert code == EXIT_OK
        assert out.splitlines() == ["u,v", "0,1", "0,5", "1,4", "2,3", "2,5", "3,4"]

    def test_z9_dot(self, capsys):
        out = run(capsys, "build", "zn:9", "--format", "dot")[1]
        assert out.startswith("graph G {\n")
        assert sum(" -- " in line for line in out.splitlines()) == 18

    def test_trivial_ring_defaults_to_dot(self, capsys):
        assert run(capsys, "build", "zn:1")[1] == "graph G {\n  0;\n}\n"

    def test_residue_labels(self, capsys):
        doc = json.loads(run(capsys, "build", "polyq:2:x^2", "--format", "json", "--label", "residues")[1])
        assert doc["vertex_count"] == 4
        assert "x" in doc["labels"]

    def test_format_from_env(self, capsys, clean_env):
        clean_env.setenv("UZG_FORMAT", "csv")
        assert run(capsys, "build", "zn:3")[1].startswith("u,v\n")

    def test_env_format_foreign_to_the_command_is_ignored(self, capsys, clean_env):
        clean_env.setenv("UZG_FORMAT", "md")
        assert run(capsys, "build", "zn:3")[1].startswith("graph G {")

    def test_bad_format_flag(self, capsys):
        with pytest.raises(SystemExit) as e:
            main(["build", "zn:3", "--format", "md"])
        assert e.value.code == EXIT_USAGE

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "z6.dot"
        code, out, _ = run(capsys, "build", "zn:6", "--out", str(path))
        assert code == EXIT_OK and out == ""
        assert path.read_text().count(" -- ") == 6


class TestAnalyze:
    @pytest.mark.parametrize("spec, diam, girth", [("zn:9", 2, 4), ("zn:6", 3, 6), ("zn:2", 1, "inf")])
    def test_json(self, capsys, spec, diam, girth):
        doc = json.loads(run(capsys, "analyze", spec)[1])
        assert (doc["diameter"], doc["girth"]) == (diam, girth)

    def test_z2_is_a_path(self, capsys):
        assert json.loads(run(capsys, "analyze", "zn:2")[1])["is_path_graph"] is True

    def test_csv(self, capsys):
        header, row = run(capsys, "analyze", "zn:6", "--format", "csv")[1].splitlines()
        assert header.split(",") == list(CSV_FIELDS)
        assert row.startswith("zn:6,6,6,")

    def test_limit_flag(self, capsys):
        doc = json.loads(run(capsys, "analyze", "zn:10", "--limit-hamiltonian", "4")[1])
        assert doc["is_hamiltonian"] is None
        assert doc["skipped"] == ["is_hamiltonian"]

    def test_limit_from_env(self, capsys, clean_env):
        clean_env.setenv("UZG_LIMIT_HAMILTONIAN", "4")
        assert json.loads(run(capsys, "analyze", "zn:10")[1])["skipped"] == ["is_hamiltonian"]

    def test_flag_beats_env(self, capsys, clean_env):
        clean_env.setenv("UZG_LIMIT_HAMILTONIAN", "4")
        doc = json.loads(run(capsys, "analyze", "zn:10", "--limit-hamiltonian", "32")[1])
        assert doc["skipped"] == []

    def test_planarity_subdivision_limit(self, capsys):
        err = run(capsys, "-vv", "analyze", "prod:zn:3,zn:3")[2]
        assert "planarity cross-checked by subdivision search" in err
        err = run(capsys, "-vv", "analyze", "prod:zn:3,zn:3", "--limit-planarity-subdivision", "8")[2]
        assert "subdivision cross-check skipped(8)" in err

    def test_planarity_subdivision_limit_from_env(self, capsys, clean_env):
        clean_env.setenv("UZG_LIMIT_PLANARITY_SUBDIVISION", "8")
        err = run(capsys, "-vv", "analyze", "prod:zn:3,zn:3")[2]
        assert "subdivision cross-check skipped(8)" in err

    def test_non_positive_limit(self, capsys):
        with pytest.raises(SystemExit) as e:
            main(["analyze", "zn:6", "--limit-chromatic", "0"])
        assert e.value.code == EXIT_USAGE


class TestVerify:
    def test_z12_text(self, capsys):
        code, out, _ = run(capsys, "verify", "zn:12")
        assert code == EXIT_OK
        assert out.startswith("zn:12: ")
        assert " 0 failed" in out.splitlines()[0]

    def test_json_stream(self, capsys):
        out = run(capsys, "verify", "zn:4", "zn:5", "--format", "json")[1]
        docs = [json.loads(line) for line in out.splitlines()]
        assert [d["ring"] for d in docs] == ["zn:4", "zn:5"]

    def test_failure_exit(self, capsys, monkeypatch):
        original = sweep_module.check_ring

        def tampered(R, facts, G, inv, limits=None):
            return original(R, facts, G, replace(inv, is_star=not inv.is_star), limits)

        monkeypatch.setattr(sweep_module, "check_ring", tampered)
        code, out, _ = run(capsys, "verify", "zn:7")
        assert code == EXIT_FAILED
        assert "FAIL  T07-star-field" in out

    def test_f4_fails_unit_sum(self, capsys):
        code, out, _ = run(capsys, "verify", "polyq:2:x^2+x+1")
        assert code == EXIT_FAILED
        assert "FAIL  T02-unit-sum" in out
        assert "FAIL  T03-regularity" in out


class TestSweep:
    def test_markdown(self, capsys):
        code, out, _ = run(capsys, "sweep", "zn", "1", "1")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[0] == "| " + " | ".join(TABLE_COLUMNS) + " |"
        assert lines[2].startswith("| zn:1 | 1 | 1 | 0 | 0 |")
        assert len(lines) == 3

    def test_csv_is_byte_identical(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(["sweep", "zn", "2", "30", "--format", "csv", "--out", str(a)]) == EXIT_OK
        assert main(["sweep", "zn", "2", "30", "--format", "csv", "--out", str(b), "--jobs", "2"]) == EXIT_OK
        assert a.read_bytes() == b.read_bytes()
        assert a.read_text().splitlines()[0] == ",".join(TABLE_COLUMNS)

    def test_unknown_family(self, capsys):
        code, _, err = run(capsys, "sweep", "gf", "1", "3")
        assert code == EXIT_USAGE
        assert "unknown family" in err

    def test_bad_jobs_env(self, capsys, clean_env):
        clean_env.setenv("UZG_JOBS", "many")
        code, _, err = run(capsys, "sweep", "zn", "1", "2")
        assert code == EXIT_USAGE
        assert "UZG_JOBS" in err


class TestMeta:
    def test_flag(self, capsys):
        doc = json.loads(run(capsys, "analyze", "zn:6", "--meta")[1])
        assert doc["ring"] == "zn:6"
        meta = doc["meta"]
        assert set(meta) == {"version", "limits", "timestamp", "format"}
        assert meta["limits"]["hamiltonian"] == 32

    @pytest.mark.parametrize("argv", [("info", "zn:6"), ("build", "zn:6", "--format", "json")])
    def test_single_json_documents_stay_valid(self, capsys, argv):
        doc = json.loads(run(capsys, *argv, "--meta")[1])
        assert doc["meta"]["format"] == "json"

    def test_json_lines_get_a_meta_line(self, capsys):
        out = run(capsys, "verify", "zn:4", "zn:5", "--format", "json", "--meta")[1]
        docs = [json.loads(line) for line in out.splitlines()]
        assert [d.get("ring") for d in docs] == ["zn:4", "zn:5", None]
        assert set(docs[-1]) == {"meta"}

    def test_csv_comment(self, capsys):
        out = run(capsys, "analyze", "zn:6", "--format", "csv", "--meta")[1]
        assert out.splitlines()[-1].startswith("# meta: ")

    def test_dot_comment(self, capsys):
        out = run(capsys, "build", "zn:3", "--meta")[1]
        assert out.splitlines()[-1].startswith("// meta: ")

    def test_env(self, capsys, clean_env):
        clean_env.setenv("UZG_META", "true")
        assert "meta" in json.loads(run(capsys, "analyze", "zn:3")[1])

    def test_off_by_default(self, capsys):
        assert "meta" not in run(capsys, "build", "zn:3")[1]
