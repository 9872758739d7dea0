from dataclasses import replace

import pytest

from conftest import uz
from uzgraph.invariants import analyze
from uzgraph.theorems import (
    TRIVIAL,
    Verdict,
    catalogue,
    check_ring,
    check_zn,
    render_report,
)


def _run(spec):
    R, facts, G = uz(spec)
    inv = analyze(G)
    report = check_ring(R, facts, G, inv)
    if R.kind == "modular":
        report.extend(check_zn(R.modulus, facts, G, inv, R=R))
    return report


class TestCatalogue:
    def test_ids_are_unique_and_ordered(self):
        ids = [i for i, _ in catalogue()]
        assert len(ids) == len(set(ids)) == 29
        assert ids[0] == "S00-trivial-ring"
        assert ids[1].startswith("T01") and ids[18].startswith("T18")
        assert ids[19].startswith("Z01") and ids[-1].startswith("Z10")


class TestGenericChecks:
    @pytest.mark.parametrize("spec", [f"zn:{n}" for n in range(1, 31)] + [
        "prod:zn:2,zn:2",
        "prod:zn:2,zn:3",
        "prod:zn:3,zn:3",
        "prod:zn:2,zn:4",
        "prod:zn:3,zn:5",
        "prod:zn:2,zn:2,zn:2",
        "polyq:2:0,0,1",
        "polyq:3:0,0,1",
        "polyq:3:1,0,1",
        "polyq:4:0,0,1",
    ])
    def test_no_failures(self, spec):
        report = _run(spec)
        assert report.ok, render_report(report)

    def test_f4_breaks_unit_sum_and_regularity(self):
        # char 2, yet 1 + x is a unit of F_4: G is K_{1,3}, not 3-regular
        report = _run("polyq:2:1,1,1")
        assert [c.id[:3] for c in report.checks if c.verdict is Verdict.FAIL] == ["T02", "T03"]
        assert report.get("T02").witness == {"u1": 1, "u2": 2, "sum": 3}
        assert report.get("T03").witness == {"vertex": 1, "degree": 1, "units": 3}
        assert report.get("T03").converse is True
        assert report.get("T07").verdict is Verdict.PASS
        assert report.get("T05").detail == "K_{1,3}"

    def test_z9_local_structure(self):
        report = _run("zn:9")
        t05 = report.get("T05")
        assert t05.verdict is Verdict.PASS
        assert t05.detail == "K_{3,6}"
        assert report.get("T06").converse is True
        assert report.get("T10").verdict is Verdict.PASS
        assert report.get("T11").verdict is Verdict.PASS

    def test_z12_radical_checks(self):
        report = _run("zn:12")
        assert report.get("T16").verdict is Verdict.PASS
        assert report.get("T17").verdict is Verdict.PASS
        assert report.get("T05").verdict is Verdict.SKIPPED
        assert report.get("T13").detail == "3-partite"

    def test_z2_skips_diameter_equality(self):
        assert _run("zn:2").get("T18").verdict is Verdict.SKIPPED

    def test_z2_skips_local_hamiltonian(self):
        assert _run("zn:2").get("T09").reason == "hypothesis not met"

    def test_trivial_ring(self):
        report = _run("zn:1")
        assert report.get("S00").verdict is Verdict.PASS
        assert report.get("S00").detail == "K_1"
        rest = [c for c in report.checks if c.id != "S00-trivial-ring"]
        assert all(c.verdict is Verdict.SKIPPED and c.reason == TRIVIAL for c in rest)

    def test_nontrivial_ring_skips_s00(self):
        assert _run("zn:5").get("S00").verdict is Verdict.SKIPPED

    def test_tampered_report_fails_with_witness(self):
        R, facts, G = uz("zn:7")
        inv = replace(analyze(G), is_star=False)
        check = check_ring(R, facts, G, inv).get("T07")
        assert check.verdict is Verdict.FAIL
        assert check.witness == {"is_star": False, "is_field": True}

    def test_search_limit_skips_instead_of_passing(self):
        R, facts, G = uz("zn:16")
        inv = analyze(G)
        from uzgraph.invariants import Skipped

        inv = replace(inv, domination_number=Skipped(4))
        check = check_ring(R, facts, G, inv).get("T11")
        assert check.verdict is Verdict.SKIPPED
        assert check.reason == "domination_number skipped(4)"


class TestZnChecks:
    def test_z15_triangle(self):
        check = _run("zn:15").get("Z05")
        assert check.verdict is Verdict.PASS
        assert check.detail.startswith("triangle [")

    def test_z4_cycle_graph(self):
        assert _run("zn:4").get("Z08").verdict is Verdict.PASS

    def test_z9_c4_witness(self):
        check = _run("zn:9").get("Z06")
        assert check.verdict is Verdict.PASS
        assert check.detail == "cycle [0, 1, 3, 8]"

    def test_z10_even_c4(self):
        check = _run("zn:10").get("Z07")
        assert check.verdict is Verdict.PASS
        assert "phi=4" in check.detail

    def test_kst_bound(self):
        assert _run("zn:8").get("Z10").verdict is Verdict.PASS
        assert _run("zn:6").get("Z10").reason == "hypothesis not met"
        assert _run("zn:9").get("Z10").verdict is Verdict.SKIPPED

    def test_z1_is_skipped(self):
        R, facts, G = uz("zn:1")
        report = check_zn(1, facts, G, analyze(G), R=R)
        assert report.skipped == 10

    def test_wrong_ring(self):
        R, facts, G = uz("zn:6")
        with pytest.raises(ValueError, match="check_zn"):
            check_zn(7, facts, G, analyze(G), R=R)


class TestReport:
    def test_to_dict(self):
        d = _run("zn:9").to_dict()
        assert d["ring"] == "zn:9"
        assert d["passed"] + d["failed"] + d["skipped"] == 29
        t05 = next(c for c in d["checks"] if c["id"].startswith("T05"))
        assert t05["verdict"] == "pass" and "witness" not in t05

    def test_render(self):
        text = render_report(_run("zn:9"))
        first, *lines = text.splitlines()
        assert first.startswith("zn:9: ") and first.endswith(" skipped")
        assert len(lines) == 29
        assert any(l.startswith("  PASS  T05-local-complete-bipartite") and l.endswith("K_{3,6}") for l in lines)
        assert any("SKIP" in l and "(hypothesis not met)" in l for l in lines)

    def test_render_failure(self):
        R, facts, G = uz("zn:7")
        report = check_ring(R, facts, G, replace(analyze(G), is_star=False))
        assert "FAIL  T07-star-field" in render_report(report)
        assert "witness: {'is_star': False, 'is_field': True}" in render_report(report)
