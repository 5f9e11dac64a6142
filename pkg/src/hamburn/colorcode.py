"""Simplex vector coloring of [q]^n.

Color ``i`` maps to the block c_i = e_i - (1/q)·1 in Q^q. A vertex maps to the
concatenation of its symbols' color vectors, giving a vector of length qn with
``a·x = (1 - 1/q)·n - d(v, w)`` for a = encode(v), x = encode(w).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from hamburn.errors import DimensionError, DomainError, NotACodewordError
from hamburn.hamming import Vertex, hdist

Block = tuple[Fraction, ...]


def low(q: int) -> Fraction:
    return Fraction(-1, q)


def high(q: int) -> Fraction:
    return 1 - Fraction(1, q)


def color_vector(i: int, q: int) -> Block:
    if q < 2:
        raise DomainError(f"q must be >= 2, got {q}")
    if not 1 <= i <= q:
        raise DomainError(f"color {i} outside 1..{q}")
    lo = low(q)
    return tuple(lo + 1 if j == i else lo for j in range(1, q + 1))


@dataclass(frozen=True)
class CodeVector:
    """n blocks of q rationals, stored flat (entry ``q*j + t`` is block j, slot t)."""

    entries: tuple[Fraction, ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(Fraction(e) for e in self.entries))
        if self.q < 2 or len(self.entries) % self.q:
            raise DimensionError(f"{len(self.entries)} entries do not split into blocks of {self.q}")

    @property
    def n(self) -> int:
        return len(self.entries) // self.q

    @property
    def blocks(self) -> tuple[Block, ...]:
        q = self.q
        return tuple(self.entries[q * j : q * j + q] for j in range(self.n))

    def block(self, j: int) -> Block:
        return self.entries[self.q * j : self.q * j + self.q]

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence], q: int) -> "CodeVector":
        flat = []
        for blk in blocks:
            if len(blk) != q:
                raise DimensionError(f"block of length {len(blk)} for q={q}")
            flat.extend(blk)
        return cls(tuple(flat), q)

    @classmethod
    def zeros(cls, n: int, q: int) -> "CodeVector":
        return cls((Fraction(0),) * (n * q), q)


def encode(v: Vertex) -> CodeVector:
    colors = [color_vector(i, v.q) for i in range(1, v.q + 1)]
    return CodeVector(tuple(e for s in v.symbols for e in colors[s - 1]), v.q)


def block_color(block: Sequence[Fraction], q: int) -> int:
    """The i with block == c_i; raises NotACodewordError otherwise."""
    lo, hi = low(q), high(q)
    if len(block) != q:
        raise DimensionError(f"block of length {len(block)} for q={q}")
    tops = [t for t, e in enumerate(block) if e == hi]
    if len(tops) != 1 or any(e != lo for t, e in enumerate(block) if t != tops[0]):
        raise NotACodewordError(f"block {tuple(str(e) for e in block)} is not a color vector")
    return tops[0] + 1


def decode(x: CodeVector) -> Vertex:
    return Vertex(tuple(block_color(b, x.q) for b in x.blocks), x.q)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"length {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def inner(a: CodeVector, x: CodeVector) -> Fraction:
    if a.q != x.q or a.n != x.n:
        raise DimensionError(f"(n,q)=({a.n},{a.q}) vs ({x.n},{x.q})")
    return dot(a.entries, x.entries)


def dist_identity_check(v: Vertex, w: Vertex) -> bool:
    """Whether encode(v)·encode(w) equals (1 - 1/q)n - d(v, w) exactly."""
    lhs = inner(encode(v), encode(w))
    return lhs == high(v.q) * v.n - hdist(v, w)


def in_hull(block: Sequence[Fraction], q: int) -> bool:
    """Membership in the convex hull of the q color vectors.

    Uses the closed form {z : sum z = 0, z_t >= -1/q for all t}.
    """
    if len(block) != q:
        raise DimensionError(f"block of length {len(block)} for q={q}")
    lo = low(q)
    return sum(block, Fraction(0)) == 0 and all(e >= lo for e in block)


def hull_point(weights: Sequence[Fraction], q: int) -> Block:
    """sum_i weights[i] * c_{i+1}; requires weights >= 0 with sum <= 1."""
    if len(weights) != q:
        raise DimensionError(f"{len(weights)} weights for q={q}")
    if any(w < 0 for w in weights) or sum(weights) > 1:
        raise DomainError("weights must be nonnegative with sum <= 1")
    t = sum(weights, Fraction(0))
    return tuple(Fraction(w) - t / q for w in weights)


def hull_weights(block: Sequence[Fraction], q: int):
    """Convex weights reproducing a sum-zero block, or None if there are none.

    With t = max(0, -q·min z) the candidate weights are z_i + t/q.
    """
    if sum(block, Fraction(0)) != 0:
        return None
    t = max(Fraction(0), -q * min(block))
    weights = tuple(Fraction(z) + t / q for z in block)
    if any(w < 0 for w in weights) or sum(weights) > 1:
        return None
    return weights


def in_code(x: CodeVector) -> bool:
    try:
        decode(x)
    except NotACodewordError:
        return False
    return True


def in_hull_power(x: CodeVector) -> bool:
    return all(in_hull(b, x.q) for b in x.blocks)
