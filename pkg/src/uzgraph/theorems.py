"""Executable theorem catalogue for unit-zero divisor graphs.

Every check runs against one ring's anatomy, graph and invariant report and
returns data, never raises: ``pass``, ``fail`` with a concrete witness, or
``skipped`` with a reason. A check whose hypothesis does not hold is skipped
with "hypothesis not met"; a check that needs an invariant which hit its
search limit is skipped too, never passed.

The generic catalogue (S00, T01-T18) applies to every ring; the Z_n catalogue
(Z01-Z10) only to the integers modulo n. One-directional statements attach a
``converse`` note recording whether the reverse implication held on this ring.
That note is data, not a verdict.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, NamedTuple, Optional

import numpy as np
from sympy import factorint, isprime

from .anatomy import RingFacts, cosets, quotient_ring, ring_facts
from .config import Limits
from .graph import UzGraph, build_uz, maximal_ideal_partition, project_graph
from .invariants import (
    InvariantReport,
    diameter,
    find_c4,
    find_triangle,
    is_bipartite,
    is_connected,
    is_partition_independent,
    is_skipped,
    is_star,
    kst_c4_condition,
)
from .ring import FiniteRing, euler_phi, ring_zn

log = logging.getLogger(__name__)

HYPOTHESIS = "hypothesis not met"
TRIVIAL = "trivial ring"


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass
class TheoremCheck:
    id: str
    statement: str
    verdict: Verdict
    witness: Any = None
    reason: Optional[str] = None
    converse: Optional[bool] = None
    detail: Optional[str] = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"id": self.id, "statement": self.statement, "verdict": self.verdict.value}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reason is not None:
            out["reason"] = self.reason
        if self.converse is not None:
            out["converse"] = self.converse
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class TheoremReport:
    ring: str
    checks: list[TheoremCheck] = field(default_factory=list)

    def count(self, verdict: Verdict) -> int:
        return sum(c.verdict is verdict for c in self.checks)

    @property
    def passed(self) -> int:
        return self.count(Verdict.PASS)

    @property
    def failed(self) -> int:
        return self.count(Verdict.FAIL)

    @property
    def skipped(self) -> int:
        return self.count(Verdict.SKIPPED)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def get(self, check_id: str) -> TheoremCheck:
        """Look a check up by its full id or by its code prefix ("T05")."""
        for c in self.checks:
            if c.id == check_id or c.id.split("-", 1)[0] == check_id:
                return c
        raise KeyError(check_id)

    def extend(self, other: TheoremReport) -> TheoremReport:
        self.checks.extend(other.checks)
        return self

    def to_dict(self) -> dict[str, Any]:
        return {
            "ring": self.ring,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "checks": [c.to_dict() for c in self.checks],
        }


class Outcome(NamedTuple):
    verdict: Verdict
    witness: Any = None
    reason: Optional[str] = None
    converse: Optional[bool] = None
    detail: Optional[str] = None


def passed(detail: Optional[str] = None, converse: Optional[bool] = None) -> Outcome:
    return Outcome(Verdict.PASS, converse=converse, detail=detail)


def failed(witness: Any, converse: Optional[bool] = None) -> Outcome:
    return Outcome(Verdict.FAIL, witness=witness, converse=converse)


def skipped(reason: str = HYPOTHESIS, converse: Optional[bool] = None) -> Outcome:
    return Outcome(Verdict.SKIPPED, reason=reason, converse=converse)


def implication(hyp: bool, concl: bool, witness: Callable[[], Any]) -> Outcome:
    """hyp => concl, with the converse (concl => hyp) noted."""
    converse = hyp or not concl
    if not hyp:
        return skipped(converse=converse)
    return passed(converse=converse) if concl else failed(witness(), converse=converse)


def equivalence(lhs: bool, rhs: bool, names: tuple[str, str]) -> Outcome:
    if lhs == rhs:
        return passed(detail=f"{names[0]}={lhs}")
    return failed({names[0]: lhs, names[1]: rhs})


# ----------------------------------------------------------------------------
# Per-ring context with lazily built quotients
# ----------------------------------------------------------------------------


@dataclass
class RingContext:
    R: FiniteRing
    facts: RingFacts
    G: UzGraph
    inv: InvariantReport
    limits: Limits

    @cached_property
    def n_units(self) -> int:
        return len(self.facts.units)

    @cached_property
    def n_zero_divisors(self) -> int:
        return len(self.facts.zero_divisors)

    @cached_property
    def two(self) -> int:
        return self.R.add(self.R.one, self.R.one)

    @cached_property
    def two_is_unit(self) -> bool:
        return self.two in self.facts.units

    @cached_property
    def radical_quotient(self) -> tuple[FiniteRing, np.ndarray, UzGraph]:
        """(R/J, projection, G_UZ(R/J))."""
        Q, proj = quotient_ring(self.R, self.facts.jacobson, name=f"quot:{self.R.name}/jacobson")
        return Q, proj, build_uz(Q, ring_facts(Q, self.limits))

    def degree(self, v: int) -> int:
        return self.inv.degree_sequence[v]


_Check = Callable[[RingContext], Outcome]
_RING_CHECKS: list[tuple[str, str, _Check]] = []
_ZN_CHECKS: list[tuple[str, str, Callable[[RingContext, int], Outcome]]] = []


def ring_check(check_id: str, statement: str):
    def register(fn: _Check) -> _Check:
        _RING_CHECKS.append((check_id, statement, fn))
        return fn
    return register


def zn_check(check_id: str, statement: str):
    def register(fn):
        _ZN_CHECKS.append((check_id, statement, fn))
        return fn
    return register


def _first_pair(mask: np.ndarray) -> Optional[list[int]]:
    hits = np.argwhere(mask)
    return [int(v) for v in hits[0]] if len(hits) else None


# ----------------------------------------------------------------------------
# Generic ring catalogue
# ----------------------------------------------------------------------------


@ring_check("S00-trivial-ring", "the zero ring gives K_1 with no edges")
def _trivial_ring(ctx: RingContext) -> Outcome:
    if not ctx.R.is_trivial:
        return skipped()
    if ctx.G.vertex_count == 1 and ctx.G.edge_count == 0:
        return passed(detail="K_1")
    return failed({"vertex_count": ctx.G.vertex_count, "edge_count": ctx.G.edge_count})


@ring_check("T01-max-degree", "max degree is |U(R)| and deg(0) = |U(R)|")
def _max_degree(ctx: RingContext) -> Outcome:
    deg0 = ctx.degree(ctx.R.zero)
    if ctx.inv.max_degree == ctx.n_units and deg0 == ctx.n_units:
        return passed(detail=f"max_degree={ctx.n_units}")
    return failed({"max_degree": ctx.inv.max_degree, "deg0": deg0, "units": ctx.n_units})


@ring_check("T02-unit-sum", "2 not a unit => u1 + u2 is never a unit")
def _unit_sum(ctx: RingContext) -> Outcome:
    if ctx.two_is_unit:
        return skipped()
    us = np.array(sorted(ctx.facts.units), dtype=np.int64)
    unit_mask = np.zeros(ctx.R.order, dtype=bool)
    unit_mask[us] = True
    sums = ctx.R.add_table[np.ix_(us, us)]
    bad = _first_pair(unit_mask[sums])
    if bad is None:
        return passed()
    u1, u2 = int(us[bad[0]]), int(us[bad[1]])
    return failed({"u1": u1, "u2": u2, "sum": ctx.R.add(u1, u2)})


@ring_check("T03-regularity", "2 not a unit => G is |U(R)|-regular")
def _regularity(ctx: RingContext) -> Outcome:
    regular = all(d == ctx.n_units for d in ctx.inv.degree_sequence)

    def witness():
        v = next(v for v, d in enumerate(ctx.inv.degree_sequence) if d != ctx.n_units)
        return {"vertex": v, "degree": ctx.degree(v), "units": ctx.n_units}

    return implication(not ctx.two_is_unit, regular, witness)


@ring_check("T04-eulerian-corollary", "2 not a unit, |U(R)| even, G connected => G Eulerian")
def _eulerian_corollary(ctx: RingContext) -> Outcome:
    hyp = not ctx.two_is_unit and ctx.n_units % 2 == 0 and ctx.inv.connected
    return implication(hyp, ctx.inv.is_eulerian, lambda: {"degree_sequence": ctx.inv.degree_sequence})


@ring_check("T05-local-complete-bipartite", "R local => G = K_{|m|,|U(R)|} on blocks m and U(R)")
def _local_complete_bipartite(ctx: RingContext) -> Outcome:
    if not ctx.facts.is_local:
        return skipped()
    m = sorted(ctx.facts.maximal_ideals[0].members)
    u = sorted(ctx.facts.units)
    expected = np.zeros_like(ctx.G.adjacency)
    expected[np.ix_(m, u)] = True
    expected[np.ix_(u, m)] = True
    bad = _first_pair(expected != ctx.G.adjacency)
    if bad is None:
        return passed(detail=f"K_{{{len(m)},{len(u)}}}")
    x, y = bad
    return failed({"pair": [x, y], "expected_edge": bool(expected[x, y])})


@ring_check("T06-complete-bipartite-local", "G complete bipartite => R local")
def _complete_bipartite_local(ctx: RingContext) -> Outcome:
    return implication(
        ctx.inv.is_complete_bipartite, ctx.facts.is_local,
        lambda: {"sizes": list(ctx.inv.complete_bipartite_sizes),
                 "maximal_ideals": len(ctx.facts.maximal_ideals)},
    )


@ring_check("T07-star-field", "G is a star <=> R is a field")
def _star_field(ctx: RingContext) -> Outcome:
    return equivalence(ctx.inv.is_star, ctx.facts.is_field, ("is_star", "is_field"))


@ring_check("T08-local-eulerian", "R local => (Eulerian <=> |R| and |U(R)| even)")
def _local_eulerian(ctx: RingContext) -> Outcome:
    if not ctx.facts.is_local:
        return skipped()
    parity = ctx.R.order % 2 == 0 and ctx.n_units % 2 == 0
    return equivalence(ctx.inv.is_eulerian, parity, ("is_eulerian", "order_and_units_even"))


@ring_check("T09-local-hamiltonian", "R local, |R| >= 3 => (Hamiltonian <=> |U(R)| = |Z(R)|)")
def _local_hamiltonian(ctx: RingContext) -> Outcome:
    # K_{1,1} for Z_2 has |U| = |Z| = 1 and no cycle at all
    if not ctx.facts.is_local or ctx.R.order < 3:
        return skipped()
    if is_skipped(ctx.inv.is_hamiltonian):
        return skipped(str(ctx.inv.is_hamiltonian))
    balanced = ctx.n_units == ctx.n_zero_divisors
    return equivalence(ctx.inv.is_hamiltonian, balanced, ("is_hamiltonian", "units_equal_zero_divisors"))


@ring_check("T10-local-planar", "R local => (planar <=> |U(R)| <= 2 or |Z(R)| <= 2)")
def _local_planar(ctx: RingContext) -> Outcome:
    if not ctx.facts.is_local:
        return skipped()
    small = ctx.n_units <= 2 or ctx.n_zero_divisors <= 2
    return equivalence(ctx.inv.is_planar, small, ("is_planar", "units_or_zero_divisors_at_most_2"))


@ring_check("T11-local-parameters",
            "R local, min(|U|,|Z|) >= 2 => diameter 2, girth 4, clique 2, chromatic 2, "
            "independence max(|U|,|Z|), domination 2")
def _local_parameters(ctx: RingContext) -> Outcome:
    if not ctx.facts.is_local or min(ctx.n_units, ctx.n_zero_divisors) < 2:
        return skipped()
    expected = {
        "diameter": 2,
        "girth": 4,
        "clique_number": 2,
        "chromatic_number": 2,
        "independence_number": max(ctx.n_units, ctx.n_zero_divisors),
        "domination_number": 2,
    }
    actual = {k: getattr(ctx.inv, k) for k in expected}
    limited = [k for k, v in actual.items() if is_skipped(v)]
    if limited:
        return skipped(f"{limited[0]} {actual[limited[0]]}")
    wrong = {k: {"expected": v, "actual": actual[k]} for k, v in expected.items() if actual[k] != v}
    return failed(wrong) if wrong else passed()


@ring_check("T12-bipartite-condition", "R local or 2 not a unit => G bipartite")
def _bipartite_condition(ctx: RingContext) -> Outcome:
    hyp = ctx.facts.is_local or not ctx.two_is_unit
    return implication(hyp, ctx.inv.is_bipartite, lambda: {"odd_cycle": is_bipartite(ctx.G).odd_cycle})


@ring_check("T13-maximal-ideal-partite", "[U(R), I1, I2*, ...] is an independent partition of G")
def _maximal_ideal_partite(ctx: RingContext) -> Outcome:
    P = maximal_ideal_partition(ctx.R, ctx.facts)
    ok, witness = is_partition_independent(ctx.G, P)
    if ok:
        return passed(detail=f"{len(P.blocks)}-partite")
    (u, v), block = witness
    return failed({"edge": [u, v], "block": block})


@ring_check("T14-quotient-star", "G_UZ(R/m) is a star for every maximal ideal m")
def _quotient_star(ctx: RingContext) -> Outcome:
    for k, m in enumerate(ctx.facts.maximal_ideals):
        Q, _ = quotient_ring(ctx.R, m, name=f"quot:{ctx.R.name}/maxideal:{k}")
        GQ = build_uz(Q, ring_facts(Q, ctx.limits))
        if not is_star(GQ):
            return failed({"maximal_ideal": k, "members": sorted(m.members), "edges": GQ.edges()})
    return passed(detail=f"{len(ctx.facts.maximal_ideals)} quotients")


def _coset_projection(R: FiniteRing, ideal) -> np.ndarray:
    proj = np.empty(R.order, dtype=np.int64)
    for k, c in enumerate(cosets(R, ideal)):
        proj[list(c.members)] = k
    return proj


@ring_check("T15-coset-independence", "I proper, 2+I not a unit of R/I => every coset of I is independent")
def _coset_independence(ctx: RingContext) -> Outcome:
    R = ctx.R
    checked = 0
    for k, ideal in enumerate(ctx.facts.ideals):
        if not ideal.proper:
            continue
        proj = _coset_projection(R, ideal)
        # x + I is a unit of R/I iff x*y lands in 1 + I for some y
        if (proj[R.mul_table[ctx.two]] == proj[R.one]).any():
            continue
        checked += 1
        inside = ctx.G.adjacency & (proj[:, None] == proj[None, :])
        bad = _first_pair(inside)
        if bad is not None:
            return failed({"ideal": ideal.sorted_members(), "edge": bad})
    if not checked:
        return skipped()
    return passed(detail=f"{checked} ideals")


@ring_check("T16-radical-lift", "x+J ~ y+J in G_UZ(R/J) => every a in x+J ~ every b in y+J")
def _radical_lift(ctx: RingContext) -> Outcome:
    _, proj, GQ = ctx.radical_quotient
    lifted = GQ.adjacency[np.ix_(proj, proj)]
    bad = _first_pair(lifted & ~ctx.G.adjacency)
    if bad is None:
        return passed()
    a, b = bad
    return failed({"a": a, "b": b, "cosets": [int(proj[a]), int(proj[b])]})


@ring_check("T17-radical-project", "x ~ y in G => x+J ~ y+J in G_UZ(R/J)")
def _radical_project(ctx: RingContext) -> Outcome:
    Q, proj, GQ = ctx.radical_quotient
    us, vs = np.nonzero(ctx.G.adjacency)
    ok = (proj[us] != proj[vs]) & GQ.adjacency[proj[us], proj[vs]]
    if not ok.all():
        i = int(np.flatnonzero(~ok)[0])
        return failed({"edge": [int(us[i]), int(vs[i])], "cosets": [int(proj[us[i]]), int(proj[vs[i]])]})
    image = project_graph(ctx.G, proj, Q.order)
    if not np.array_equal(image.adjacency, GQ.adjacency):
        bad = _first_pair(image.adjacency != GQ.adjacency)
        return failed({"projection_mismatch": bad})
    return passed(detail=f"R/J order {Q.order}")


@ring_check("T18-diameter-equality",
            "R not Z_2, both graphs connected => (diam G = diam G_UZ(R/J) <=> R/J not Z_2)")
def _diameter_equality(ctx: RingContext) -> Outcome:
    if ctx.R.order == 2:
        return skipped()
    Q, _, GQ = ctx.radical_quotient
    if not (ctx.inv.connected and is_connected(GQ)):
        return skipped()
    d, dq = ctx.inv.diameter, diameter(GQ)
    equal = d == dq
    not_z2 = Q.order != 2
    if equal == not_z2:
        return passed(detail=f"diam={d}, quotient diam={dq}")
    return failed({"diameter": d, "quotient_diameter": dq, "quotient_order": Q.order})


# ----------------------------------------------------------------------------
# Z_n catalogue
# ----------------------------------------------------------------------------


def _prime_power(n: int) -> Optional[tuple[int, int]]:
    f = factorint(n)
    if len(f) != 1:
        return None
    (p, k), = f.items()
    return int(p), int(k)


@zn_check("Z01-star-prime", "G_UZ(Z_n) is a star <=> n prime")
def _star_prime(ctx: RingContext, n: int) -> Outcome:
    return equivalence(ctx.inv.is_star, bool(isprime(n)), ("is_star", "n_prime"))


@zn_check("Z02-even-bipartite", "n even => G bipartite")
def _even_bipartite(ctx: RingContext, n: int) -> Outcome:
    return implication(n % 2 == 0, ctx.inv.is_bipartite, lambda: {"odd_cycle": is_bipartite(ctx.G).odd_cycle})


@zn_check("Z03-prime-power-complete-bipartite", "n = p^k => G = K_{p^(k-1), p^(k-1)(p-1)}")
def _prime_power_kmn(ctx: RingContext, n: int) -> Outcome:
    pk = _prime_power(n)
    if pk is None:
        return skipped()
    p, k = pk
    want = tuple(sorted((p ** (k - 1), p ** (k - 1) * (p - 1))))
    got = ctx.inv.complete_bipartite_sizes
    if ctx.inv.is_complete_bipartite and tuple(got) == want:
        return passed(detail=f"K_{{{want[0]},{want[1]}}}")
    return failed({"expected": list(want), "complete_bipartite": ctx.inv.is_complete_bipartite,
                   "sizes": list(got) if got else None})


@zn_check("Z04-prime-factor-partite", "m distinct prime factors => at most m+1 independent blocks")
def _prime_factor_partite(ctx: RingContext, n: int) -> Outcome:
    m = len(factorint(n))
    P = maximal_ideal_partition(ctx.R, ctx.facts)
    ok, witness = is_partition_independent(ctx.G, P)
    if not ok:
        (u, v), block = witness
        return failed({"edge": [u, v], "block": block})
    if len(P.blocks) > m + 1:
        return failed({"blocks": len(P.blocks), "prime_factors": m})
    return passed(detail=f"{len(P.blocks)} blocks, {m} primes")


@zn_check("Z05-triangle", "has C3 <=> n composite, odd, not a prime power")
def _triangle(ctx: RingContext, n: int) -> Outcome:
    cond = n % 2 == 1 and not isprime(n) and _prime_power(n) is None
    out = equivalence(ctx.inv.has_C3, cond, ("has_C3", "odd_composite_not_prime_power"))
    if out.verdict is Verdict.PASS and ctx.inv.has_C3:
        return passed(detail=f"triangle {list(find_triangle(ctx.G))}")
    return out


@zn_check("Z06-prime-power-c4", "n = p^k, p^(k-1) >= 2, p^(k-1)(p-1) >= 2 => has C4")
def _prime_power_c4(ctx: RingContext, n: int) -> Outcome:
    pk = _prime_power(n)
    hyp = False
    if pk is not None:
        p, k = pk
        a = p ** (k - 1)
        hyp = a >= 2 and a * (p - 1) >= 2
    out = implication(hyp, ctx.inv.has_C4, lambda: {"has_C4": False})
    if out.verdict is Verdict.PASS:
        # two zero divisors 0, p against the units 1 and n-1
        p = pk[0]
        cycle = [0, 1, p, n - 1]
        ok = all(ctx.G.has_edge(cycle[i], cycle[(i + 1) % 4]) for i in range(4))
        if not ok:
            return failed({"cycle": cycle})
        return passed(detail=f"cycle {cycle}", converse=out.converse)
    return out


@zn_check("Z07-even-c4", "n >= 8 even => has C4 and phi(n) > sqrt(n/2) + 1")
def _even_c4(ctx: RingContext, n: int) -> Outcome:
    hyp = n >= 8 and n % 2 == 0
    phi = euler_phi(n)
    # phi > sqrt(n/2) + 1  <=>  phi - 1 > 0 and 2 (phi - 1)^2 > n
    bound = phi - 1 > 0 and 2 * (phi - 1) ** 2 > n
    out = implication(hyp, ctx.inv.has_C4 and bound,
                      lambda: {"has_C4": ctx.inv.has_C4, "phi": phi, "bound_holds": bound})
    if out.verdict is Verdict.PASS:
        return passed(detail=f"C4 {find_c4(ctx.G)}, phi={phi}", converse=out.converse)
    return out


@zn_check("Z08-cycle-graph", "G is a cycle graph <=> n in {4, 6}")
def _cycle_graph(ctx: RingContext, n: int) -> Outcome:
    return equivalence(ctx.inv.is_cycle_graph, n in (4, 6), ("is_cycle_graph", "n_in_4_6"))


@zn_check("Z09-path-graph", "G is a path graph <=> n in {2, 3}")
def _path_graph(ctx: RingContext, n: int) -> Outcome:
    return equivalence(ctx.inv.is_path_graph, n in (2, 3), ("is_path_graph", "n_in_2_3"))


@zn_check("Z10-kst-c4", "n even, t = phi(n), r = n/2, t > sqrt(r) + 1 => has C4")
def _kst_c4(ctx: RingContext, n: int) -> Outcome:
    if n % 2:
        return skipped()
    t, r = euler_phi(n), n // 2
    # the bound is stated for t-regular bipartite graphs with blocks of size r
    sizes = ctx.inv.bipartition.sizes() if ctx.inv.bipartition else []
    if not (ctx.inv.is_bipartite and sorted(sizes) == [r, r] and set(ctx.inv.degree_sequence) == {t}):
        return skipped("not a balanced regular bipartite graph")
    return implication(kst_c4_condition(t, r), ctx.inv.has_C4, lambda: {"t": t, "r": r})


# ----------------------------------------------------------------------------
# Runners
# ----------------------------------------------------------------------------


def _record(report: TheoremReport, check_id: str, statement: str, out: Outcome) -> None:
    if out.converse is not None:
        log.debug("%s %s: converse %s", report.ring, check_id, "holds" if out.converse else "fails")
    if out.verdict is Verdict.FAIL:
        log.info("%s %s failed: %s", report.ring, check_id, out.witness)
    report.checks.append(TheoremCheck(check_id, statement, *out))


def check_ring(R: FiniteRing, facts: RingFacts, G: UzGraph, inv: InvariantReport,
               limits: Optional[Limits] = None) -> TheoremReport:
    """Run S00 and T01-T18 on one ring; inputs must all come from the same ring."""
    ctx = RingContext(R, facts, G, inv, limits or Limits())
    report = TheoremReport(R.name)
    for check_id, statement, fn in _RING_CHECKS:
        if R.is_trivial and check_id != "S00-trivial-ring":
            out = skipped(TRIVIAL)
        else:
            out = fn(ctx)
        _record(report, check_id, statement, out)
    return report


def check_zn(n: int, facts: RingFacts, G: UzGraph, inv: InvariantReport,
             limits: Optional[Limits] = None, R: Optional[FiniteRing] = None) -> TheoremReport:
    """Run Z01-Z10 on Z_n."""
    R = R or ring_zn(n)
    if R.modulus != n or R.kind != "modular":
        raise ValueError(f"check_zn({n}) given {R.name}")
    ctx = RingContext(R, facts, G, inv, limits or Limits())
    report = TheoremReport(R.name)
    for check_id, statement, fn in _ZN_CHECKS:
        out = skipped(TRIVIAL) if n == 1 else fn(ctx, n)
        _record(report, check_id, statement, out)
    return report


def catalogue() -> list[tuple[str, str]]:
    """(id, statement) for every check, generic first."""
    return [(i, s) for i, s, _ in _RING_CHECKS] + [(i, s) for i, s, _ in _ZN_CHECKS]


_MARK = {Verdict.PASS: "PASS", Verdict.FAIL: "FAIL", Verdict.SKIPPED: "SKIP"}


def render_report(report: TheoremReport) -> str:
    """Plain-text report for the terminal."""
    lines = [f"{report.ring}: {report.passed} passed, {report.failed} failed, {report.skipped} skipped"]
    width = max((len(c.id) for c in report.checks), default=0)
    for c in report.checks:
        line = f"  {_MARK[c.verdict]}  {c.id:<{width}}"
        if c.verdict is Verdict.FAIL:
            line += f"  witness: {c.witness}"
        elif c.verdict is Verdict.SKIPPED:
            line += f"  ({c.reason})"
        elif c.detail:
            line += f"  {c.detail}"
        if c.converse is not None:
            line += f"  [converse {'holds' if c.converse else 'fails'}]"
        lines.append(line)
    return "\n".join(lines) + "\n"
