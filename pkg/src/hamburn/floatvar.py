"""Multicolor floating-variable rounding.

Given a_1, ..., a_n in Q^n (encoded vertices, q >= 3), walk from the origin
to a point x in Q^n with |a_i·x| < i for every i. An entry is *fixed* once it
reaches -1/q or 1 - 1/q and never moves again; the others float. Step s keeps

    a_i·x = 0           for i <= n - s
    block sums = 0      for every block that still has a floating entry

and moves along a kernel direction of that system until the next entry hits a
boundary. Step s is complete once at least s blocks are fully fixed; the
point at that moment is the snapshot x_s.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from hamburn.colorcode import CodeVector, decode, dot, high, in_code, in_hull, low
from hamburn.errors import AlgorithmStateError, DimensionError, DomainError, UnsupportedError
from hamburn.linrat import RatMatrix, kernel_vector


@dataclass(frozen=True)
class TraceRecord:
    s: int
    full_blocks: int
    step: Fraction


@dataclass(frozen=True)
class FvCertificate:
    x_final: CodeVector
    per_i_inner: tuple[Fraction, ...]
    per_i_bound: tuple[int, ...]
    trace: tuple[TraceRecord, ...]
    snapshots: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def valid(self) -> bool:
        return all(v < b for v, b in zip(self.per_i_inner, self.per_i_bound))


def _classify(entries: Sequence[Fraction], q: int):
    lo, hi = low(q), high(q)
    mask = [e == lo or e == hi for e in entries]
    counts = [0] * (q + 1)
    for j in range(len(entries) // q):
        r = sum(mask[q * j : q * j + q])
        if r == q - 1:
            raise AlgorithmStateError(f"block {j} has exactly q-1 fixed entries")
        counts[r] += 1
    return mask, counts


def classify(x: CodeVector) -> tuple[list[bool], list[int]]:
    """Fixed-entry mask and block counts f_0..f_q (f_r = blocks with r fixed entries)."""
    return _classify(x.entries, x.q)


def floating_columns(mask: Sequence[bool]) -> list[int]:
    return [k for k, fixed in enumerate(mask) if not fixed]


def build_system(a: Sequence[CodeVector], mask: Sequence[bool], s: int) -> RatMatrix:
    """Coefficient matrix of step s over the floating entries (in index order).

    Rows: a_i restricted to floating entries for i = 1..n-s, then one all-ones
    row per block that still has a floating entry.
    """
    n = len(a)
    if not 1 <= s <= n:
        raise DomainError(f"step {s} outside 1..{n}")
    q = a[0].q
    cols = floating_columns(mask)
    one, zero = Fraction(1), Fraction(0)
    rows = [tuple(a[i].entries[c] for c in cols) for i in range(n - s)]
    for j in range(len(mask) // q):
        if any(q * j <= c < q * j + q for c in cols):
            rows.append(tuple(one if q * j <= c < q * j + q else zero for c in cols))
    return RatMatrix(len(rows), len(cols), tuple(rows))


def max_step(x: Sequence[Fraction], mask: Sequence[bool], y: Sequence[Fraction], q: int) -> Fraction:
    """Largest λ keeping x + λy inside [-1/q, 1 - 1/q] on every floating entry."""
    if isinstance(x, CodeVector):
        x = x.entries
    lo, hi = low(q), high(q)
    best: Optional[Fraction] = None
    for xk, yk, fixed in zip(x, y, mask):
        if fixed:
            if yk:
                raise AlgorithmStateError("direction moves a fixed entry")
            continue
        if yk > 0:
            cand = (hi - xk) / yk
        elif yk < 0:
            cand = (lo - xk) / yk
        else:
            continue
        if best is None or cand < best:
            best = cand
    if best is None:
        raise AlgorithmStateError("degenerate direction: no floating entry moves")
    if best <= 0:
        raise AlgorithmStateError(f"non-positive step {best}")
    return best


def claim1_gap(a_bar: Sequence[Fraction], x_bar: Sequence[Fraction], y_bar: Sequence[Fraction], q: int) -> Fraction:
    """|a·x - a·y| for color vectors a, x and a hull point y (always <= 1)."""
    for name, blk in (("a", a_bar), ("x", x_bar)):
        if not in_code(CodeVector(tuple(blk), q)):
            raise DomainError(f"{name} is not a color vector")
    if not in_hull(y_bar, q):
        raise DomainError("y is not in the convex hull of the color vectors")
    return abs(dot(a_bar, x_bar) - dot(a_bar, y_bar))


def _validate(a: Sequence[CodeVector]) -> tuple[int, int]:
    if not a:
        raise DomainError("need at least one constraint vector")
    q, n = a[0].q, a[0].n
    if q < 3:
        raise UnsupportedError("the multicolor rounding needs q >= 3")
    if len(a) != n:
        raise DimensionError(f"need exactly n={n} constraint vectors, got {len(a)}")
    for ai in a:
        if ai.q != q or ai.n != n:
            raise DimensionError("constraint vectors disagree in (n, q)")
        decode(ai)
    return n, q


def _check_state(x, a_rows, s, q):
    lo, hi = low(q), high(q)
    for j in range(len(x) // q):
        blk = x[q * j : q * j + q]
        if sum(blk) != 0:
            raise AlgorithmStateError(f"block {j} sum is {sum(blk)}")
        if any(e < lo or e > hi for e in blk):
            raise AlgorithmStateError(f"block {j} left the box")
    for i in range(len(a_rows) - s):
        if dot(a_rows[i], x) != 0:
            raise AlgorithmStateError(f"constraint {i + 1} broken at step {s}")


def run(a: Sequence[CodeVector], strict: bool = False) -> FvCertificate:
    """Round the origin to x in Q^n with |a_i·x| < i for all i.

    ``strict`` re-checks every state invariant after each move; the final
    certificate conditions are always checked.
    """
    n, q = _validate(a)
    a_rows = [ai.entries for ai in a]
    x = [Fraction(0)] * (q * n)
    snapshots = {0: tuple(x)}
    trace = []
    s = 1
    fixed_before = -1
    while True:
        mask, counts = _classify(x, q)
        fixed_now = sum(mask)
        if fixed_now <= fixed_before:
            raise AlgorithmStateError("a move fixed no new entry")
        fixed_before = fixed_now
        full = counts[q]
        while s <= n and full >= s:
            snapshots[s] = tuple(x)
            s += 1
        if s > n:
            break
        if full != s - 1:
            raise AlgorithmStateError(f"{full} full blocks at step {s}")
        system = build_system(a, mask, s)
        free_dim = system.cols - system.rows
        bound = (q - 2) * (n - full) - sum(r * counts[r] for r in range(1, q - 1)) + 1
        if free_dim != bound or free_dim < 1:
            raise AlgorithmStateError(f"dimension count {free_dim} (expected {bound} >= 1)")
        direction = kernel_vector(system)
        if direction is None:
            raise AlgorithmStateError("trivial kernel")
        y = [Fraction(0)] * (q * n)
        for c, yc in zip(floating_columns(mask), direction):
            y[c] = yc
        lam = max_step(x, mask, y, q)
        for k, yk in enumerate(y):
            if yk:
                x[k] += lam * yk
        trace.append(TraceRecord(s, full, lam))
        if strict:
            _check_state(x, a_rows, s, q)

    x_final = CodeVector(tuple(x), q)
    decode(x_final)
    for i in range(1, n + 1):
        snap = snapshots[n - i]
        if dot(a_rows[i - 1], snap) != 0:
            raise AlgorithmStateError(f"a_{i}·x_{n - i} != 0")
        if _classify(snap, q)[1][q] < n - i:
            raise AlgorithmStateError(f"snapshot x_{n - i} has too few full blocks")
    per_inner = tuple(abs(dot(row, x)) for row in a_rows)
    bounds = tuple(range(1, n + 1))
    cert = FvCertificate(x_final, per_inner, bounds, tuple(trace), snapshots)
    if not cert.valid:
        raise AlgorithmStateError("final point violates |a_i·x| < i")
    return cert
