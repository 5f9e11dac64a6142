"""Checks and searches around the concluding remarks.

* the q >= n proposition and the "add one color, gain one round" claim,
  checked against brute-force burning numbers;
* a brute-force existence oracle for the two-color Beck-Spencer lemma;
* the open problem for q = 3, n = 3k + 1: given u_1..u_n, is there always a w
  with g(u_i, w) < i, where g takes the worst of the three cyclic shifts?

Vertices in the q = 3 search are 0-based tuples over {0, 1, 2}, shifted
modulo 3. Conversion to the 1-based :class:`~hamburn.hamming.Vertex` is
explicit (:func:`to_vertex`, :func:`from_vertex`).
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from hamburn.adversary import trial_rng
from hamburn.errors import CapacityError, DimensionError, DomainError, UnsupportedError
from hamburn.hamming import Vertex, burning_number

Vertex0 = tuple[int, ...]


def to_vertex(v: Vertex0, q: int = 3) -> Vertex:
    return Vertex(tuple(s + 1 for s in v), q)


def from_vertex(v: Vertex) -> Vertex0:
    return tuple(s - 1 for s in v.symbols)


def _check_ternary(*vs: Vertex0) -> None:
    n = len(vs[0])
    for v in vs:
        if len(v) != n:
            raise DimensionError(f"length {len(v)} vs {n}")
        if any(s not in (0, 1, 2) for s in v):
            raise UnsupportedError("shifts are defined for q = 3 symbols {0, 1, 2} only")


def shift(v: Vertex0, t: int) -> Vertex0:
    _check_ternary(v)
    return tuple((s + t) % 3 for s in v)


def dist0(u: Vertex0, v: Vertex0) -> int:
    if len(u) != len(v):
        raise DimensionError(f"length {len(u)} vs {len(v)}")
    return sum(a != b for a, b in zip(u, v))


def f_value(u: Vertex0, v: Vertex0, k: int) -> Fraction:
    """|2(3k+1)/3 - d(u, v)|."""
    _check_ternary(u, v)
    if len(u) != 3 * k + 1:
        raise DimensionError(f"n={len(u)} but 3k+1={3 * k + 1}")
    return abs(Fraction(2 * (3 * k + 1), 3) - dist0(u, v))


def g_value(u: Vertex0, v: Vertex0, k: int) -> Fraction:
    return max(f_value(u, shift(v, t), k) for t in range(3))


def orbit_distance_sum(v: Vertex0, w: Vertex0) -> int:
    """d(v, w) + d(v, w') + d(v, w''); always 2n."""
    return sum(dist0(v, shift(w, t)) for t in range(3))


# -- open problem search -------------------------------------------------------

EXHAUSTIVE_MAX_K = 1
TABLE_MAX_VERTICES = 2187
COUNTEREXAMPLE_LIMIT = 100


@dataclass
class OpenProblemReport:
    k: int
    n: int
    mode: str
    seed: int
    budget: Optional[int]
    instance_total: int
    instances_checked: int
    complete: bool
    symmetry_reduction: str
    counterexample_count: int
    counterexamples: list = field(default_factory=list)
    witness_stats: dict = field(default_factory=dict)
    witnesses_reverified: int = 0
    chain_checks_passed: int = 0

    @property
    def consistent(self) -> bool:
        """Every found witness re-verified and passed the w* selection check."""
        found = self.instances_checked - self.counterexample_count
        return self.witnesses_reverified == found and self.chain_checks_passed == found


class _Ternary:
    """All of {0,1,2}^n in lexicographic index order, with shift lookups."""

    def __init__(self, n: int):
        self.n = n
        self.size = 3**n
        idx = np.arange(self.size)
        self.digits = np.stack([(idx // 3 ** (n - 1 - i)) % 3 for i in range(n)], axis=1).astype(np.int8)
        self.weights = 3 ** np.arange(n - 1, -1, -1)
        self._g3 = None

    def index(self, digits: np.ndarray) -> np.ndarray:
        return digits.astype(np.int64) @ self.weights

    def g3_rows(self, us: np.ndarray) -> np.ndarray:
        """3·g(u, w) rows as integers: max_t |2n - 3 d(shift(w, t), u)|, one row per u."""
        if self.size <= TABLE_MAX_VERTICES:
            if self._g3 is None:
                self._g3 = self._compute(self.digits)
            return self._g3[self.index(us)]
        return self._compute(us)

    def _compute(self, us: np.ndarray) -> np.ndarray:
        out = np.zeros((len(us), self.size), dtype=np.int16)
        for t in range(3):
            shifted = (self.digits + t) % 3
            for r, u in enumerate(us):
                d = (shifted != u).sum(axis=1)
                np.maximum(out[r], np.abs(2 * self.n - 3 * d), out=out[r])
        return out


def _solve_instances(space: _Ternary, instances: np.ndarray):
    """For each instance (rows of u_1..u_n digits) return (feasible count, first w or -1)."""
    n = space.n
    thresholds = 3 * np.arange(1, n + 1)
    counts = np.empty(len(instances), dtype=np.int64)
    first = np.empty(len(instances), dtype=np.int64)
    for r, inst in enumerate(instances):
        ok = np.all(space.g3_rows(inst) < thresholds[:, None], axis=0)
        hits = np.flatnonzero(ok)
        counts[r] = hits.size
        first[r] = hits[0] if hits.size else -1
    return counts, first


def _reverify(space: _Ternary, instances: np.ndarray, witnesses: np.ndarray, k: int):
    """Recompute every witness from raw digits, independent of the g-table.

    Returns (# witnesses with g(u_i, w) < i for all i,
             # witnesses whose whole shift orbit keeps d(u_j, w^t) >= 2k+1-j, j <= 2k).
    """
    n = space.n
    if len(instances) == 0:
        return 0, 0
    w = space.digits[witnesses]  # (m, n)
    # d[t][m, i] = d(u_i, shift(w, t))
    d = np.stack([((w[:, None, :] + t) % 3 != instances).sum(axis=2) for t in range(3)])
    i = np.arange(1, n + 1)
    g_ok = np.all(np.abs(2 * n - 3 * d) < 3 * i, axis=(0, 2))
    j = np.arange(1, 2 * k + 1)
    chain_ok = np.all(d[:, :, : 2 * k] >= 2 * k + 1 - j, axis=(0, 2))
    return int(g_ok.sum()), int((g_ok & chain_ok).sum())


def _exhaustive_instances(space: _Ternary, start: int, stop: int) -> np.ndarray:
    n = space.n
    out = np.zeros((stop - start, n, n), dtype=np.int8)
    for r, code in enumerate(range(start, stop)):
        rest = []
        for _ in range(n - 1):
            code, v = divmod(code, space.size)
            rest.append(v)
        out[r, 1:] = space.digits[list(reversed(rest))]
    return out


def _random_instances(n: int, seed: int, start: int, stop: int) -> np.ndarray:
    return np.stack([trial_rng(seed, t).integers(0, 3, size=(n, n)) for t in range(start, stop)]).astype(np.int8)


def _chunk_job(args):
    mode, k, seed, start, stop = args
    n = 3 * k + 1
    space = _Ternary(n)
    if mode == "exhaustive":
        instances = _exhaustive_instances(space, start, stop)
    else:
        instances = _random_instances(n, seed, start, stop)
    counts, first = _solve_instances(space, instances)
    found = first >= 0
    reverified, chained = _reverify(space, instances[found], first[found], k)
    bad = [tuple(tuple(int(s) for s in u) for u in instances[r]) for r in np.flatnonzero(~found)]
    return counts, reverified, chained, bad


def open_problem_search(
    k: int,
    mode: str = "randomized",
    budget: Optional[int] = None,
    seed: int = 0,
    workers: int = 1,
    chunk: int = 20000,
) -> OpenProblemReport:
    """Search for instances u_1..u_{3k+1} with no w satisfying g(u_i, w) < i.

    Exhaustive mode (k = 1 only) fixes u_1 = 0 — translating every vertex by
    -u_1 preserves distances and commutes with the shifts — and walks the
    remaining 81^3 choices in lexicographic order; ``budget`` truncates the
    sweep. Randomized mode draws ``budget`` instances, instance t from the
    stream (seed, t).
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    n = 3 * k + 1
    if mode == "exhaustive":
        if k > EXHAUSTIVE_MAX_K:
            raise CapacityError(f"exhaustive search is limited to k <= {EXHAUSTIVE_MAX_K}")
        total = (3**n) ** (n - 1)
        checked = total if budget is None else min(budget, total)
        reduction = "u_1 fixed to the all-zero vertex (translation invariance)"
    elif mode == "randomized":
        if budget is None or budget < 0:
            raise DomainError("randomized mode needs a budget >= 0")
        total = checked = budget
        reduction = "none"
    else:
        raise DomainError(f"unknown mode {mode!r}")

    jobs = [(mode, k, seed, s, min(s + chunk, checked)) for s in range(0, checked, chunk)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_chunk_job, jobs))
    else:
        parts = [_chunk_job(j) for j in jobs]

    stats: Counter = Counter()
    reverified = chained = 0
    bad: list = []
    for counts, rv, ch, b in parts:
        stats.update(int(c) for c in counts)
        reverified += rv
        chained += ch
        bad.extend(b)
    bad.sort()
    return OpenProblemReport(
        k=k,
        n=n,
        mode=mode,
        seed=seed,
        budget=budget,
        instance_total=total,
        instances_checked=checked,
        complete=checked == total,
        symmetry_reduction=reduction,
        counterexample_count=len(bad),
        counterexamples=bad[:COUNTEREXAMPLE_LIMIT],
        witness_stats=dict(sorted(stats.items())),
        witnesses_reverified=reverified,
        chain_checks_passed=chained,
    )


def find_open_problem_witness(us: Sequence[Vertex0], k: int) -> Optional[Vertex0]:
    """Smallest w with g(u_i, w) < i for all i, by exact rational evaluation."""
    n = 3 * k + 1
    if len(us) != n:
        raise DimensionError(f"need {n} vertices, got {len(us)}")
    for w in itertools.product(range(3), repeat=n):
        if all(g_value(u, w, k) < i for i, u in enumerate(us, start=1)):
            return w
    return None


# -- Beck-Spencer existence oracle ----------------------------------------------

BS_MAX_N = 20


def bs_existence(a: Sequence[Sequence[int]]) -> Optional[tuple[int, ...]]:
    """First x in {-1, 1}^n (lexicographic, -1 before 1) with |a_i·x| < 2i for all i."""
    n = len(a)
    if n > BS_MAX_N:
        raise CapacityError(f"2^{n} sign vectors exceeds the n <= {BS_MAX_N} limit")
    if n == 0:
        return ()
    A = np.asarray(a, dtype=np.int64)
    if A.shape != (n, n) or not np.all(np.abs(A) == 1):
        raise DomainError("need n sign vectors of length n with entries in {-1, 1}")
    bits = (np.arange(2**n)[:, None] >> np.arange(n - 1, -1, -1)) & 1
    X = 2 * bits - 1
    ok = np.all(np.abs(X @ A.T) < 2 * np.arange(1, n + 1), axis=1)
    hits = np.flatnonzero(ok)
    if hits.size == 0:
        return None
    return tuple(int(v) for v in X[hits[0]])


def sign_of(v: Vertex) -> tuple[int, ...]:
    """Cube vertex over {1, 2} as a sign vector (1 -> +1, 2 -> -1)."""
    if v.q != 2:
        raise DomainError("sign vectors are for q = 2")
    return tuple(1 if s == 1 else -1 for s in v.symbols)


def sign_identity_holds(n: int) -> bool:
    """a·x = n - 2d(v, w) for every pair of cube vertices, exhaustively."""
    from hamburn.hamming import all_vertices, hdist

    verts = list(all_vertices(n, 2))
    for v in verts:
        sv = sign_of(v)
        for w in verts:
            if sum(p * r for p, r in zip(sv, sign_of(w))) != n - 2 * hdist(v, w):
                return False
    return True


@dataclass(frozen=True)
class BsReport:
    n: int
    trials: int
    seed: int
    found: int
    missing: int


def bs_trials(n: int, trials: int, seed: int = 0) -> BsReport:
    found = missing = 0
    for t in range(trials):
        a = 2 * trial_rng(seed, t).integers(0, 2, size=(n, n)) - 1
        x = bs_existence(a.tolist())
        if x is None:
            missing += 1
        else:
            found += 1
    return BsReport(n, trials, seed, found, missing)


# -- monotonicity claim ------------------------------------------------------------


@dataclass(frozen=True)
class MonotonicityResult:
    n: int
    q: int
    b_prev: int
    b: int
    s: int
    holds: bool


def monotonicity(n: int, q: int, **kw) -> MonotonicityResult:
    """Apply "b(n, q-1) >= s implies b(n, q) >= s + 1" with the largest admissible s.

    The claim needs s <= n, so s = min(b(n, q-1), n).
    """
    if q < 3:
        raise UnsupportedError("the claim is stated for q >= 3")
    b_prev = burning_number(n, q - 1, **kw)
    b = burning_number(n, q, **kw)
    s = min(b_prev, n)
    return MonotonicityResult(n, q, b_prev, b, s, b >= s + 1)


def monotonicity_check(n: int, q: int, **kw) -> bool:
    return monotonicity(n, q, **kw).holds
