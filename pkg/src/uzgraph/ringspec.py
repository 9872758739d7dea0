"""Ring specification mini-language: text like ``zn:12`` → FiniteRing.

Grammar::

    spec    := zn | prod | polyq | quot | table | "(" spec ")"
    zn      := "zn:" INT
    prod    := "prod:" spec ("," spec)*
    polyq   := "polyq:" INT ":" (POLY | INT ("," INT)*)    # POLY like x^2+x+1
    quot    := "quot:" spec "/" ("jacobson" | "maxideal:" INT)
    table   := "table:" PATH ["#" INT]                     # top level only

Coefficient lists are little-endian (``polyq:2:0,0,1`` is x^2). Inside a product
a comma followed by a letter or "(" starts the next factor, so
``prod:polyq:2:0,0,1,zn:3`` is unambiguous. ``maxideal:k`` is 0-based in the
sorted order of ``maximal_ideals``.

The canonical name of every parsed ring is itself a valid spec, and it is the
label used in every report and file.
"""

from __future__ import annotations

import json
import logging
import re
from pathlib import Path
from typing import Optional

from .anatomy import jacobson_radical, maximal_ideals, quotient_ring
from .config import Limits
from .ring import FiniteRing, ring_from_tables, ring_poly_quotient, ring_product, ring_zn

log = logging.getLogger(__name__)


class RingSpecError(ValueError):
    """Unparseable ring spec. ``position`` is the 0-based offset of the failure."""

    def __init__(self, text: str, position: int, message: str):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


def _norm(text: str) -> str:
    """Lowercase and drop whitespace; spaces are never meaningful in a spec."""
    return "".join((text or "").split()).lower()


_TERM = re.compile(r"([+-]?)(\d*)(x(?:\^(\d+))?)?")


def parse_polynomial(text: str, m: int) -> list[int]:
    """``x^2+x+1`` → little-endian coefficients reduced mod m."""
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(text):
        t = _TERM.match(text, pos)
        if not t or t.end() == pos or (not t.group(2) and not t.group(3)):
            raise ValueError(f"bad polynomial term at {pos}")
        sign = -1 if t.group(1) == "-" else 1
        c = int(t.group(2)) if t.group(2) else 1
        deg = 0 if not t.group(3) else (int(t.group(4)) if t.group(4) else 1)
        coeffs[deg] = coeffs.get(deg, 0) + sign * c
        pos = t.end()
        if pos < len(text) and text[pos] not in "+-":
            raise ValueError(f"bad polynomial term at {pos}")
    if not coeffs:
        raise ValueError("empty polynomial")
    return [coeffs.get(d, 0) % m for d in range(max(coeffs) + 1)]


class _Parser:
    def __init__(self, text: str, limits: Limits):
        self.text = text
        self.pos = 0
        self.limits = limits

    def fail(self, message: str, pos: Optional[int] = None) -> RingSpecError:
        return RingSpecError(self.text, self.pos if pos is None else pos, message)

    def peek(self, s: str) -> bool:
        return self.text.startswith(s, self.pos)

    def expect(self, s: str) -> None:
        if not self.peek(s):
            raise self.fail(f"expected {s!r}")
        self.pos += len(s)

    def integer(self) -> int:
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            raise self.fail("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def parse(self) -> FiniteRing:
        if self.peek("table:"):
            ring = self.table()
        else:
            ring = self.spec()
        if self.pos != len(self.text):
            raise self.fail("unexpected trailing text")
        return ring

    def spec(self) -> FiniteRing:
        start = self.pos
        try:
            if self.peek("("):
                self.pos += 1
                ring = self.spec()
                self.expect(")")
                return ring
            if self.peek("zn:"):
                self.pos += 3
                return ring_zn(self.integer())
            if self.peek("prod:"):
                self.pos += 5
                return self.product()
            if self.peek("polyq:"):
                self.pos += 6
                return self.polyq()
            if self.peek("quot:"):
                self.pos += 5
                return self.quotient()
        except RingSpecError:
            raise
        except ValueError as e:
            raise self.fail(str(e), start) from e
        raise self.fail("expected one of zn:, prod:, polyq:, quot:")

    def product(self) -> FiniteRing:
        factors = [self.spec()]
        while self.peek(","):
            self.pos += 1
            factors.append(self.spec())
        return ring_product(factors)

    def polyq(self) -> FiniteRing:
        m = self.integer()
        self.expect(":")
        start = self.pos
        run = re.compile(r"[0-9x^+-]+").match(self.text, self.pos)
        if not run:
            raise self.fail("expected a polynomial or coefficient list")
        if "x" in run.group():
            try:
                coeffs = parse_polynomial(run.group(), m)
            except ValueError as e:
                raise self.fail(str(e), start) from e
            self.pos = run.end()
        else:
            coeffs = [self.integer()]
            # a comma followed by a digit continues the list; anything else ends it
            while self.peek(",") and self.pos + 1 < len(self.text) and self.text[self.pos + 1].isdigit():
                self.pos += 1
                coeffs.append(self.integer())
        return ring_poly_quotient(m, coeffs)

    def quotient(self) -> FiniteRing:
        inner = self.spec()
        self.expect("/")
        if self.peek("jacobson"):
            self.pos += len("jacobson")
            ideal = jacobson_radical(inner, limits=self.limits)
            which = "jacobson"
        elif self.peek("maxideal:"):
            self.pos += len("maxideal:")
            at = self.pos
            k = self.integer()
            maximal = maximal_ideals(inner, limits=self.limits)
            if k >= len(maximal):
                raise self.fail(f"{inner.name} has {len(maximal)} maximal ideals, no index {k}", at)
            ideal = maximal[k]
            which = f"maxideal:{k}"
        else:
            raise self.fail("expected 'jacobson' or 'maxideal:<k>'")
        ring, _ = quotient_ring(inner, ideal, name=f"quot:{inner.name}/{which}")
        return ring

    def table(self) -> FiniteRing:
        self.pos += len("table:")
        rest = self.text[self.pos:]
        path, _, index = rest.partition("#")
        if not path:
            raise self.fail("expected a file path")
        k = 1
        if index:
            if not index.isdigit() or int(index) < 1:
                raise self.fail("expected a 1-based entry index", self.pos + len(path) + 1)
            k = int(index)
        self.pos = len(self.text)
        entries = load_table_file(path)
        if k > len(entries):
            raise self.fail(f"{path} has {len(entries)} entries, no entry {k}")
        entry = entries[k - 1]
        return ring_from_tables(entry["add"], entry["mul"], name=f"table:{path}#{k}",
                                labels=entry.get("labels"))


def load_table_file(path: str | Path) -> list[dict]:
    """Read a JSON table file: one ``{"label", "add", "mul"}`` object or a list of them."""
    with Path(path).open(encoding="utf-8") as f:
        data = json.load(f)
    entries = data if isinstance(data, list) else [data]
    for i, e in enumerate(entries, 1):
        if not isinstance(e, dict) or "add" not in e or "mul" not in e:
            raise ValueError(f"{path}: entry {i} needs 'add' and 'mul' tables")
    return entries


def parse_ring(text: str, limits: Optional[Limits] = None) -> FiniteRing:
    """Parse a ring spec into a FiniteRing; raise RingSpecError with the failing position."""
    norm = text.strip() if text.strip().lower().startswith("table:") else _norm(text)
    if not norm:
        raise RingSpecError(text, 0, "empty ring spec")
    ring = _Parser(norm, limits or Limits()).parse()
    log.debug("parsed %r as %s (order %d)", text, ring.name, ring.order)
    return ring
