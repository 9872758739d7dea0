"""Ring families, the per-ring pipeline, and sweep aggregation.

A sweep expands a family and a range into ring specs in a fixed order, runs
``run_ring`` on each (optionally across worker processes), and keeps results
in spec order regardless of completion order.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Any, Optional

import pandas as pd
from sympy import factorint, primerange

from .anatomy import ring_facts
from .config import Limits
from .graph import build_uz
from .invariants import InvariantReport, analyze, is_skipped
from .ringspec import load_table_file, parse_ring
from .theorems import TheoremReport, check_ring, check_zn

log = logging.getLogger(__name__)

FAMILIES = ("zn", "prime-powers", "products", "polyq", "poly-quotients", "table:<path>")

TABLE_COLUMNS = [
    "ring", "|R|", "|U|", "|Z|", "#maxideals", "regular", "bipartite", "planar", "eulerian",
    "hamiltonian", "diameter", "girth", "C3", "C4", "checks_passed", "checks_failed",
    "checks_skipped",
]


@dataclass
class RingResult:
    """Everything one ring's pipeline produced; plain data, safe to pickle."""

    spec: str
    ring: str
    order: int
    units: int
    zero_divisors: int
    maximal_ideals: int
    invariants: InvariantReport
    report: TheoremReport

    @property
    def ok(self) -> bool:
        return self.report.ok

    def to_dict(self) -> dict[str, Any]:
        return {
            "ring": self.ring,
            "order": self.order,
            "units": self.units,
            "zero_divisors": self.zero_divisors,
            "maximal_ideals": self.maximal_ideals,
            "invariants": self.invariants.to_dict(),
            "theorems": self.report.to_dict(),
        }


def _check_range(lo: int, hi: int) -> None:
    if lo < 1 or hi < lo:
        raise ValueError(f"bad range {lo}..{hi}: need 1 <= lo <= hi")


def family_specs(family: str, lo: int, hi: int, limits: Optional[Limits] = None) -> list[str]:
    """Ring specs of ``family`` over [lo, hi], in sweep order."""
    limits = limits or Limits()
    _check_range(lo, hi)
    if family == "zn":
        return [f"zn:{n}" for n in range(lo, hi + 1)]
    if family == "prime-powers":
        return [f"zn:{n}" for n in range(max(lo, 2), hi + 1) if len(factorint(n)) == 1]
    if family == "products":
        primes = list(primerange(lo, hi + 1))
        return [f"prod:zn:{p},zn:{q}" for i, p in enumerate(primes) for q in primes[i:]]
    if family in ("polyq", "poly-quotients"):
        out = []
        for m in range(max(lo, 2), hi + 1):
            if m * m > limits.ideal_enumeration:
                log.warning("polyq: skipping m=%d, order %d above the ideal limit", m, m * m)
                continue
            # x^2 + b x + c, little-endian c,b,1
            out.extend(f"polyq:{m}:{c},{b},1" for b in range(m) for c in range(m))
        return out
    if family.startswith("table:"):
        path = family[len("table:"):]
        count = len(load_table_file(path))
        return [f"table:{path}#{k}" for k in range(lo, min(hi, count) + 1)]
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def run_ring(spec: str, limits: Optional[Limits] = None) -> RingResult:
    """facts -> graph -> invariants -> checks for one ring spec."""
    limits = limits or Limits()
    R = parse_ring(spec, limits)
    facts = ring_facts(R, limits)
    G = build_uz(R, facts)
    inv = analyze(G, limits)
    report = check_ring(R, facts, G, inv, limits)
    if R.kind == "modular":
        report.extend(check_zn(R.modulus, facts, G, inv, limits, R))
    log.info("%s: %d passed, %d failed, %d skipped", R.name, report.passed, report.failed, report.skipped)
    return RingResult(
        spec=spec,
        ring=R.name,
        order=R.order,
        units=len(facts.units),
        zero_divisors=len(facts.zero_divisors),
        maximal_ideals=len(facts.maximal_ideals),
        invariants=inv,
        report=report,
    )


def sweep(family: str, lo: int, hi: int, limits: Optional[Limits] = None, jobs: int = 1) -> list[RingResult]:
    """Run every ring of a family; results follow ``family_specs`` order."""
    limits = limits or Limits()
    specs = family_specs(family, lo, hi, limits)
    log.info("sweep %s %d..%d: %d rings, %d job(s)", family, lo, hi, len(specs), jobs)
    worker = partial(run_ring, limits=limits)
    if jobs <= 1 or len(specs) <= 1:
        return [worker(s) for s in specs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map yields in submission order
        return list(pool.map(worker, specs))


def _cell(value: Any) -> Any:
    if is_skipped(value):
        return "skipped"
    if isinstance(value, float) and value == float("inf"):
        return "inf"
    return value


def aggregate_table(results: list[RingResult]) -> pd.DataFrame:
    """One row per ring with the sweep summary columns, in input order."""
    rows = []
    for r in results:
        inv = r.invariants
        rows.append({
            "ring": r.ring,
            "|R|": r.order,
            "|U|": r.units,
            "|Z|": r.zero_divisors,
            "#maxideals": r.maximal_ideals,
            "regular": inv.is_regular,
            "bipartite": inv.is_bipartite,
            "planar": inv.is_planar,
            "eulerian": inv.is_eulerian,
            "hamiltonian": _cell(inv.is_hamiltonian),
            "diameter": _cell(inv.diameter),
            "girth": _cell(inv.girth),
            "C3": inv.has_C3,
            "C4": inv.has_C4,
            "checks_passed": r.report.passed,
            "checks_failed": r.report.failed,
            "checks_skipped": r.report.skipped,
        })
    # object dtype keeps mixed int/"inf" columns printing as given
    return pd.DataFrame(rows, columns=TABLE_COLUMNS).astype(object)


def to_markdown(df: pd.DataFrame) -> str:
    """GitHub-style pipe table of ``df``."""
    cols = [str(c) for c in df.columns]
    lines = ["| " + " | ".join(cols) + " |", "|" + "|".join("---" for _ in cols) + "|"]
    for row in df.itertuples(index=False):
        lines.append("| " + " | ".join(str(v) for v in row) + " |")
    return "\n".join(lines) + "\n"


def summary(results: list[RingResult]) -> dict[str, int]:
    return {
        "rings": len(results),
        "passed": sum(r.report.passed for r in results),
        "failed": sum(r.report.failed for r in results),
        "skipped": sum(r.report.skipped for r in results),
        "failing_rings": sum(not r.ok for r in results),
    }
