"""Finite commutative rings with identity, stored as dense operation tables.

Every ring, whatever its construction, ends up as an ``add``/``mul`` table over
element indices 0..order-1. The construction kind only decides how the tables
are filled and how elements are labelled:

- ``modular``  Z_n, index i is the residue class of i.
- ``product``  componentwise product; index is the mixed-radix encoding of the
               component indices, first factor most significant.
- ``polyq``    Z_m[x]/(f) for monic f; index encodes the coefficients in base m,
               constant term least significant.
- ``table``    explicit Cayley tables, axioms verified on construction.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from sympy import factorint

log = logging.getLogger(__name__)

# Tables are order x order; past this the dense representation stops being sensible.
MAX_TABLE_ORDER = 4096


class RingAxiomError(ValueError):
    """A table ring violates a ring axiom. ``witness`` holds the offending elements."""

    def __init__(self, axiom: str, witness: tuple[int, ...]):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"ring axiom violated: {axiom} at {witness}")


class RingMismatchError(ValueError):
    """An element or ideal was used with a ring it does not belong to."""


class TooLargeError(RuntimeError):
    """A configured enumeration limit was exceeded. Never a silent truncation."""

    def __init__(self, what: str, limit: int, order: int):
        self.what = what
        self.limit = limit
        self.order = order
        super().__init__(f"ring too large for {what}: order {order} exceeds limit {limit}")


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A finite commutative ring with identity over element indices 0..order-1."""

    kind: str
    name: str
    add_table: np.ndarray
    mul_table: np.ndarray
    zero: int
    one: int
    modulus: Optional[int] = None
    factors: tuple[FiniteRing, ...] = ()
    poly: tuple[int, ...] = ()
    labels: Optional[tuple[str, ...]] = None
    neg_table: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n = self.add_table.shape[0]
        if n < 1 or self.add_table.shape != (n, n) or self.mul_table.shape != (n, n):
            raise RingAxiomError("square tables of equal order", (n,))
        # additive inverse of x: the y with x + y = zero (first hit per row)
        neg = np.argmax(self.add_table == self.zero, axis=1)
        object.__setattr__(self, "neg_table", neg.astype(np.int64))

    @property
    def order(self) -> int:
        return int(self.add_table.shape[0])

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def elements(self) -> range:
        return range(self.order)

    def check(self, x: int) -> int:
        """Validate an element index against this ring."""
        if not 0 <= x < self.order:
            raise RingMismatchError(f"element {x} is not in {self.name} (order {self.order})")
        return x

    def add(self, x: int, y: int) -> int:
        return int(self.add_table[x, y])

    def mul(self, x: int, y: int) -> int:
        return int(self.mul_table[x, y])

    def neg(self, x: int) -> int:
        return int(self.neg_table[x])

    def sub(self, x: int, y: int) -> int:
        return int(self.add_table[x, self.neg_table[y]])

    def components(self, x: int) -> tuple[int, ...]:
        """Component indices of a product-ring element (first factor first)."""
        if self.kind != "product":
            return (x,)
        out = []
        for f in reversed(self.factors):
            x, r = divmod(x, f.order)
            out.append(r)
        return tuple(reversed(out))

    def label(self, x: int) -> str:
        """Human-readable name of element ``x`` (residue, tuple or polynomial)."""
        self.check(x)
        if self.labels is not None:
            return self.labels[x]
        if self.kind == "product":
            parts = (f.label(c) for f, c in zip(self.factors, self.components(x)))
            return "(" + ",".join(parts) + ")"
        if self.kind == "polyq" and self.modulus:
            return _poly_label(_digits(x, self.modulus, len(self.poly) - 1))
        return str(x)

    def __repr__(self) -> str:
        return f"FiniteRing({self.name!r}, order={self.order})"


def _digits(x: int, base: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        x, r = divmod(x, base)
        out.append(r)
    return out


def _poly_label(coeffs: Sequence[int]) -> str:
    terms = []
    for deg, c in enumerate(coeffs):
        if c == 0:
            continue
        var = "" if deg == 0 else ("x" if deg == 1 else f"x^{deg}")
        if not var:
            terms.append(str(c))
        else:
            terms.append(var if c == 1 else f"{c}{var}")
    return "+".join(terms) or "0"


def _guard_order(order: int, what: str) -> None:
    if order > MAX_TABLE_ORDER:
        raise TooLargeError(what, MAX_TABLE_ORDER, order)


def ring_zn(n: int) -> FiniteRing:
    """The ring Z_n of integers modulo n. Z_1 is the zero ring (zero == one)."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"modulus must be a positive integer, got {n!r}")
    n = int(n)
    _guard_order(n, "Z_n tables")
    i = np.arange(n, dtype=np.int64)
    add = (i[:, None] + i[None, :]) % n
    mul = (i[:, None] * i[None, :]) % n
    return FiniteRing("modular", f"zn:{n}", add, mul, zero=0, one=0 if n == 1 else 1, modulus=n)


def ring_product(factors: Sequence[FiniteRing]) -> FiniteRing:
    """Componentwise product ring; index is the mixed-radix encoding, first factor most significant."""
    factors = tuple(factors)
    if not factors:
        raise ValueError("a product needs at least one factor")
    orders = [f.order for f in factors]
    order = int(np.prod(orders))
    _guard_order(order, "product tables")

    strides = [int(np.prod(orders[k + 1:])) for k in range(len(orders))]
    idx = np.arange(order, dtype=np.int64)
    add = np.zeros((order, order), dtype=np.int64)
    mul = np.zeros((order, order), dtype=np.int64)
    zero = one = 0
    for f, stride in zip(factors, strides):
        comp = (idx // stride) % f.order
        add += f.add_table[comp[:, None], comp[None, :]] * stride
        mul += f.mul_table[comp[:, None], comp[None, :]] * stride
        zero += f.zero * stride
        one += f.one * stride

    # nested products are parenthesised so the name stays a parseable ring spec
    name = "prod:" + ",".join(f"({f.name})" if f.kind == "product" else f.name for f in factors)
    return FiniteRing("product", name, add, mul, zero=zero, one=one, factors=factors)


def _normalize_poly(m: int, coeffs: Sequence[int]) -> tuple[int, ...]:
    c = [int(a) % m for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def ring_poly_quotient(m: int, f: Sequence[int]) -> FiniteRing:
    """Z_m[x]/(f) for a monic f given as little-endian coefficients."""
    if not isinstance(m, (int, np.integer)) or m < 2:
        raise ValueError(f"coefficient modulus must be >= 2, got {m!r}")
    m = int(m)
    poly = _normalize_poly(m, f)
    d = len(poly) - 1
    if d < 1:
        raise ValueError(f"modulus polynomial must have degree >= 1, got {list(f)}")
    if poly[-1] != 1:
        raise ValueError(f"modulus polynomial must be monic over Z_{m}, leading coefficient is {poly[-1]}")
    order = m**d
    _guard_order(order, "polynomial quotient tables")

    idx = np.arange(order, dtype=np.int64)
    coef = np.stack([(idx // m**k) % m for k in range(d)], axis=1)
    add_c = (coef[:, None, :] + coef[None, :, :]) % m

    prod = np.zeros((order, order, 2 * d - 1), dtype=np.int64)
    for a in range(d):
        for b in range(d):
            prod[:, :, a + b] += coef[:, None, a] * coef[None, :, b]
    prod %= m
    # x^d = -(f_0 + f_1 x + ... + f_{d-1} x^{d-1})
    for k in range(2 * d - 2, d - 1, -1):
        lead = prod[:, :, k].copy()
        prod[:, :, k] = 0
        for t in range(d):
            prod[:, :, k - d + t] -= lead * poly[t]
        prod %= m
    mul_c = prod[:, :, :d]

    weights = np.array([m**k for k in range(d)], dtype=np.int64)
    add = add_c @ weights
    mul = mul_c @ weights
    name = f"polyq:{m}:" + ",".join(str(c) for c in poly)
    return FiniteRing("polyq", name, add, mul, zero=0, one=1, modulus=m, poly=poly)


def check_ring_axioms(add: np.ndarray, mul: np.ndarray, zero: int, one: int) -> None:
    """Exhaustively verify the commutative-ring-with-identity axioms; raise on the first violation."""
    n = add.shape[0]
    if add.shape != (n, n) or mul.shape != (n, n):
        raise RingAxiomError("square tables of equal order", (add.shape[0],))
    for name, t in (("addition closed", add), ("multiplication closed", mul)):
        bad = np.argwhere((t < 0) | (t >= n))
        if len(bad):
            raise RingAxiomError(name, tuple(int(v) for v in bad[0]))
    for name, t in (("addition commutative", add), ("multiplication commutative", mul)):
        bad = np.argwhere(t != t.T)
        if len(bad):
            raise RingAxiomError(name, tuple(int(v) for v in bad[0]))
    ar = np.arange(n)
    if not np.array_equal(add[zero], ar):
        raise RingAxiomError("additive identity", (zero, int(np.argmax(add[zero] != ar))))
    if not np.array_equal(mul[one], ar):
        raise RingAxiomError("multiplicative identity", (one, int(np.argmax(mul[one] != ar))))
    no_inverse = np.flatnonzero(~(add == zero).any(axis=1))
    if len(no_inverse):
        raise RingAxiomError("additive inverse", (int(no_inverse[0]),))
    for x in range(n):
        for name, lhs, rhs in (
            ("addition associative", add[add[x]], add[x][add]),
            ("multiplication associative", mul[mul[x]], mul[x][mul]),
            ("distributive", mul[x][add], add[mul[x][:, None], mul[x][None, :]]),
        ):
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                y, z = (int(v) for v in bad[0])
                raise RingAxiomError(name, (x, y, z))


def ring_from_tables(
    add: Sequence[Sequence[int]] | np.ndarray,
    mul: Sequence[Sequence[int]] | np.ndarray,
    *,
    name: str = "table",
    labels: Optional[Sequence[str]] = None,
) -> FiniteRing:
    """Build a TableRing from Cayley tables, inferring zero/one and verifying every axiom."""
    a = np.asarray(add, dtype=np.int64)
    m = np.asarray(mul, dtype=np.int64)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape != m.shape or a.shape[0] < 1:
        raise RingAxiomError("square tables of equal order", tuple(a.shape))
    n = a.shape[0]
    _guard_order(n, "table rings")
    ar = np.arange(n)
    zeros = [e for e in range(n) if np.array_equal(a[e], ar)]
    ones = [e for e in range(n) if np.array_equal(m[e], ar)]
    if not zeros:
        raise RingAxiomError("additive identity", ())
    if not ones:
        raise RingAxiomError("multiplicative identity", ())
    check_ring_axioms(a, m, zeros[0], ones[0])
    if labels is not None and len(labels) != n:
        raise ValueError(f"{len(labels)} labels for {n} elements")
    log.debug("table ring %s verified (order %d)", name, n)
    return FiniteRing(
        "table", name, a, m, zero=zeros[0], one=ones[0],
        labels=tuple(labels) if labels is not None else None,
    )


def is_ring_homomorphism(R: FiniteRing, S: FiniteRing, f: Sequence[int] | np.ndarray) -> bool:
    """True iff ``f`` (index array R -> S) preserves +, x and the identity."""
    f = np.asarray(f, dtype=np.int64)
    if f.shape != (R.order,) or ((f < 0) | (f >= S.order)).any():
        return False
    if f[R.one] != S.one:
        return False
    return bool(
        np.array_equal(f[R.add_table], S.add_table[f[:, None], f[None, :]])
        and np.array_equal(f[R.mul_table], S.mul_table[f[:, None], f[None, :]])
    )


def is_ring_isomorphism(R: FiniteRing, S: FiniteRing, f: Sequence[int] | np.ndarray) -> bool:
    f = np.asarray(f, dtype=np.int64)
    return (
        R.order == S.order
        and len(np.unique(f)) == S.order
        and is_ring_homomorphism(R, S, f)
    )


def euler_phi(n: int) -> int:
    """phi(n) = prod p^(k-1) (p-1) over the prime factorization; phi(1) = 1."""
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    out = 1
    for p, k in factorint(n).items():
        out *= p ** (k - 1) * (p - 1)
    return out
