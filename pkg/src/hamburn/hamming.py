"""Hamming graph H(n, q): vertices, distances, balls and burning sequences.

Vertices are 1-based symbol tuples. Whole-graph operations index vertices in
mixed radix: symbol ``s`` at coordinate ``i`` contributes ``(s-1) * q**(n-1-i)``,
so index order is lexicographic order.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Optional, Sequence

import numpy as np

from hamburn.errors import CapacityError, DimensionError, DomainError

DEFAULT_CAP = 10**7
DEFAULT_NODE_BUDGET = 5 * 10**6


def default_cap() -> int:
    """Vertex enumeration budget; ``HAMBURN_CAP`` overrides the default."""
    env = os.environ.get("HAMBURN_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True, order=True)
class Vertex:
    symbols: tuple[int, ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        if self.q < 2:
            raise DomainError(f"q must be >= 2, got {self.q}")
        if not self.symbols:
            raise DomainError("a vertex needs n >= 1 coordinates")
        for s in self.symbols:
            if not 1 <= s <= self.q:
                raise DomainError(f"symbol {s} outside 1..{self.q}")

    @property
    def n(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __repr__(self):
        return f"Vertex({self.symbols}, q={self.q})"

    @classmethod
    def constant(cls, s: int, n: int, q: int) -> "Vertex":
        return cls((s,) * n, q)


def _check_same(u: Vertex, v: Vertex) -> None:
    if u.n != v.n or u.q != v.q:
        raise DimensionError(f"H({u.n},{u.q}) vs H({v.n},{v.q})")


def hdist(u: Vertex, v: Vertex) -> int:
    _check_same(u, v)
    return sum(a != b for a, b in zip(u.symbols, v.symbols))


def ball_size(n: int, q: int, k: int) -> int:
    """|Γ_k(v)| in H(n, q); the same for every v."""
    if k < 0:
        raise DomainError("radius must be >= 0")
    return sum(comb(n, j) * (q - 1) ** j for j in range(min(k, n) + 1))


def vertex_index(v: Vertex) -> int:
    idx = 0
    for s in v.symbols:
        idx = idx * v.q + (s - 1)
    return idx


def vertex_at(index: int, n: int, q: int) -> Vertex:
    syms = []
    for _ in range(n):
        index, d = divmod(index, q)
        syms.append(d + 1)
    return Vertex(tuple(reversed(syms)), q)


def all_vertices(n: int, q: int) -> Iterable[Vertex]:
    for i in range(q**n):
        yield vertex_at(i, n, q)


def _guard(n: int, q: int, cap: Optional[int]) -> int:
    cap = default_cap() if cap is None else cap
    total = q**n
    if total > cap:
        raise CapacityError(f"H({n},{q}) has {total} vertices, budget is {cap}")
    return total


def _digit_columns(n: int, q: int) -> np.ndarray:
    """(n, q**n) array of 0-based symbols, column j = vertex with index j."""
    idx = np.arange(q**n, dtype=np.int64)
    cols = np.empty((n, q**n), dtype=np.int8 if q < 128 else np.int32)
    for i in range(n):
        cols[i] = (idx // q ** (n - 1 - i)) % q
    return cols


def distances_from(v: Vertex, cap: Optional[int] = None) -> np.ndarray:
    """Distance from v to every vertex, in index order."""
    _guard(v.n, v.q, cap)
    return _distances(_digit_columns(v.n, v.q), v)


def _distances(digits: np.ndarray, v: Vertex) -> np.ndarray:
    out = np.zeros(digits.shape[1], dtype=np.int16)
    for i, s in enumerate(v.symbols):
        out += digits[i] != (s - 1)
    return out


def _check_sequence(seq: Sequence[Vertex]) -> tuple[int, int]:
    if not seq:
        raise DomainError("a burning sequence must be nonempty")
    first = seq[0]
    for v in seq[1:]:
        _check_same(first, v)
    return first.n, first.q


def coverage(seq: Sequence[Vertex], cap: Optional[int] = None) -> np.ndarray:
    """Boolean bitmap of Γ_{b-1}(v_1) ∪ ... ∪ Γ_0(v_b) in index order."""
    n, q = _check_sequence(seq)
    total = _guard(n, q, cap)
    digits = _digit_columns(n, q)
    covered = np.zeros(total, dtype=bool)
    b = len(seq)
    for i, v in enumerate(seq):
        covered |= _distances(digits, v) <= b - 1 - i
    return covered


def burns(seq: Sequence[Vertex], cap: Optional[int] = None) -> bool:
    return bool(coverage(seq, cap).all())


def uncovered(seq: Sequence[Vertex], cap: Optional[int] = None) -> Optional[Vertex]:
    """Lexicographically smallest vertex missed by the sequence, or None."""
    n, q = _check_sequence(seq)
    missing = np.flatnonzero(~coverage(seq, cap))
    if missing.size == 0:
        return None
    return vertex_at(int(missing[0]), n, q)


# -- exact burning number by exhaustive search --------------------------------


@lru_cache(maxsize=8)
def _ball_masks(n: int, q: int) -> tuple[tuple[int, ...], ...]:
    """masks[r][v]: bitset of Γ_r(vertex v) for r = 0..n."""
    digits = _digit_columns(n, q)
    total = q**n
    per_radius: list[list[int]] = [[] for _ in range(n + 1)]
    for v in range(total):
        d = _distances(digits, vertex_at(v, n, q))
        for r in range(n + 1):
            bits = np.packbits(d <= r, bitorder="little")
            per_radius[r].append(int.from_bytes(bits.tobytes(), "little"))
    return tuple(tuple(m) for m in per_radius)


class _Search:
    def __init__(self, n: int, q: int, b: int, node_budget: int):
        self.n, self.q, self.b = n, q, b
        self.total = q**n
        self.full = (1 << self.total) - 1
        masks = _ball_masks(n, q)
        # radius of round i (0-based) is b-1-i, clipped at the diameter
        self.round_masks = [masks[min(b - 1 - i, n)] for i in range(b)]
        # tail[i] = most vertices rounds i..b-1 can cover together
        self.tail = [0] * (b + 1)
        for i in range(b - 1, -1, -1):
            self.tail[i] = self.tail[i + 1] + ball_size(n, q, b - 1 - i)
        self.node_budget = node_budget
        self.nodes = 0

    def extend(self, covered: int, depth: int, prefix: list[int]) -> Optional[list[int]]:
        if covered == self.full:
            # remaining rounds may take any center
            return prefix + [0] * (self.b - depth)
        if depth == self.b:
            return None
        if self.total - covered.bit_count() > self.tail[depth]:
            return None
        masks = self.round_masks[depth]
        for v in range(self.total):
            self.nodes += 1
            if self.nodes > self.node_budget:
                raise CapacityError(
                    f"burning-number search for H({self.n},{self.q}) at b={self.b} "
                    f"exceeded {self.node_budget} nodes"
                )
            found = self.extend(covered | masks[v], depth + 1, prefix + [v])
            if found is not None:
                return found
        return None

    def subtree(self, second: int) -> Optional[list[int]]:
        """Search with v_1 = index 0 and v_2 = ``second``."""
        covered = self.round_masks[0][0] | self.round_masks[1][second]
        return self.extend(covered, 2, [0, second])


def _scan(n: int, q: int, b: int, node_budget: int, seconds: Sequence[int], sequential: bool):
    """Search the v_2 subtrees in order; entries are (status, found, nodes).

    Sequentially each subtree gets what is left of the budget and the scan
    stops at the first decisive subtree. In a worker every subtree gets the
    full budget and the caller replays the sequential accounting.
    """
    search = _Search(n, q, b, node_budget)
    out = []
    used = 0
    for s in seconds:
        search.nodes = 1
        search.node_budget = node_budget - used if sequential else node_budget
        try:
            found = search.subtree(s)
        except CapacityError:
            out.append(("capacity", None, search.nodes))
            if sequential:
                break
            continue
        used += search.nodes
        out.append(("ok", found, search.nodes))
        if sequential and found is not None:
            break
    return out


def _scan_job(args):
    return _scan(*args, sequential=False)


def find_burning_sequence(
    n: int,
    q: int,
    b: int,
    cap: Optional[int] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
) -> Optional[list[Vertex]]:
    """A burning sequence of length b with v_1 = (1,...,1), or None if none exists.

    By vertex-transitivity fixing v_1 loses nothing. Centers are tried in
    lexicographic order and a partial sequence is dropped once the uncovered
    count exceeds the total size of the balls still to be placed.
    ``node_budget`` caps the number of centers tried; the outcome, including
    a capacity error, does not depend on ``workers``.
    """
    total = _guard(n, q, cap)
    if b < 1:
        raise DomainError("b must be >= 1")
    search = _Search(n, q, b, node_budget)
    if b == 1:
        found = search.extend(search.round_masks[0][0], 1, [0])
        return None if found is None else [vertex_at(i, n, q) for i in found]
    if search.total - search.round_masks[0][0].bit_count() > search.tail[1]:
        return None
    seconds = list(range(total))
    if workers <= 1:
        results = _scan(n, q, b, node_budget, seconds, sequential=True)
    else:
        chunk = max(1, -(-total // (4 * workers)))
        jobs = [(n, q, b, node_budget, seconds[i : i + chunk]) for i in range(0, total, chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [r for part in pool.map(_scan_job, jobs) for r in part]
    used = 0
    for status, found, nodes in results:
        used += nodes
        if status == "capacity" or used > node_budget:
            raise CapacityError(
                f"burning-number search for H({n},{q}) at b={b} exceeded {node_budget} nodes"
            )
        if found is not None:
            return [vertex_at(i, n, q) for i in found]
    return None


@dataclass(frozen=True)
class BurningResult:
    n: int
    q: int
    value: int
    witness: tuple[Vertex, ...]


def burning_number(
    n: int,
    q: int,
    cap: Optional[int] = None,
    search_cap: Optional[int] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
) -> int:
    """b(H(n, q)) by exhaustive search; see :func:`burning_number_with_witness`."""
    return burning_number_with_witness(n, q, cap, search_cap, node_budget, workers).value


def burning_number_with_witness(
    n: int,
    q: int,
    cap: Optional[int] = None,
    search_cap: Optional[int] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
) -> BurningResult:
    """Smallest b for which a length-b burning sequence exists.

    ``search_cap`` bounds the lengths tried (default n+1, which always
    succeeds since the diameter is n). Every length below the returned value
    has been refuted exhaustively.
    """
    _guard(n, q, cap)
    limit = n + 1 if search_cap is None else search_cap
    if limit < 1:
        raise DomainError("search_cap must be >= 1")
    for b in range(1, limit + 1):
        seq = find_burning_sequence(n, q, b, cap, node_budget, workers)
        if seq is not None:
            return BurningResult(n, q, b, tuple(seq))
    raise CapacityError(f"no burning sequence of length <= {limit} in H({n},{q})")
