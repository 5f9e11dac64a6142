"""Lower and upper bounds on b(H(n, q)) and the constructive evader.

For any m = floor((1 - 1/q)n) vertices v_1..v_m, :func:`evade` finds w with
d(v_i, w) >= m + 1 - i, so w escapes Γ_{m-1}(v_1) ∪ ... ∪ Γ_0(v_m) and no
sequence of length m burns H(n, q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from hamburn import floatvar
from hamburn.colorcode import decode, encode, high, inner
from hamburn.errors import AlgorithmStateError, DimensionError, DomainError, UnsupportedError
from hamburn.hamming import Vertex, hdist


def _need_q3(q: int) -> None:
    if q < 3:
        raise UnsupportedError(f"the lower-bound construction needs q >= 3, got q={q}")


def evader_length(n: int, q: int) -> int:
    """m = floor((1 - 1/q)n)."""
    return (q - 1) * n // q


def lower_bound(n: int, q: int) -> int:
    _need_q3(q)
    if n < 1:
        raise DomainError("n must be >= 1")
    return evader_length(n, q) + 1


def upper_bound(n: int, q: int) -> int:
    """floor((1 - 1/q)n + (q + 1)/2)."""
    if q < 2 or n < 1:
        raise DomainError("need q >= 2 and n >= 1")
    return (2 * (q - 1) * n + q * (q + 1)) // (2 * q)


def canonical_sequence(n: int, q: int) -> list[Vertex]:
    """(1,...,1), (2,...,2), ..., (q,...,q) truncated or padded with (1,...,1)
    to length upper_bound(n, q)."""
    length = upper_bound(n, q)
    return [Vertex.constant(i + 1 if i < q else 1, n, q) for i in range(length)]


def required_distance(i: int, n: int, q: int) -> int:
    """Integer consequence of d(v_i, w) > (1 - 1/q)n - i, split on n = qk + r."""
    k, r = divmod(n, q)
    if r == 0:
        return (q - 1) * k - i + 1
    return (q - 1) * k + r - i


@dataclass(frozen=True)
class EvaderCertificate:
    w: Vertex
    m: int
    distances: tuple[int, ...]
    required: tuple[int, ...]
    floor_case: tuple[int, int]
    inner: tuple[Fraction, ...]
    fv: floatvar.FvCertificate

    @property
    def valid(self) -> bool:
        return all(d >= r for d, r in zip(self.distances, self.required))

    @property
    def slack(self) -> Optional[int]:
        if not self.required:
            return None
        return min(d - r for d, r in zip(self.distances, self.required))


def evade(
    vs: Sequence[Vertex],
    n: int,
    q: int,
    pad: Optional[Sequence[Vertex]] = None,
) -> EvaderCertificate:
    """Vertex w with d(v_i, w) >= m + 1 - i for every given v_i.

    The list is padded to n vertices with (1,...,1) (or with ``pad``) before
    rounding; the guarantee only concerns the first m entries.
    """
    _need_q3(q)
    m = evader_length(n, q)
    if len(vs) > m:
        raise DomainError(f"at most m={m} vertices allowed, got {len(vs)}")
    for v in vs:
        if v.n != n or v.q != q:
            raise DimensionError(f"vertex {v} is not in H({n},{q})")
    fill = list(pad) if pad is not None else [Vertex.constant(1, n, q)] * (n - len(vs))
    full = list(vs) + fill[: n - len(vs)]
    if len(full) != n:
        raise DomainError(f"padding produced {len(full)} vertices, need {n}")

    encoded = [encode(v) for v in full]
    cert = floatvar.run(encoded)
    w = decode(cert.x_final)
    mid = high(q) * n
    for i, (a, v) in enumerate(zip(encoded, full), start=1):
        d = hdist(v, w)
        if inner(a, cert.x_final) != mid - d:
            raise AlgorithmStateError("inner product disagrees with the distance identity")
        if not d > mid - i:
            raise AlgorithmStateError(f"d(v_{i}, w) = {d} is not > {mid} - {i}")
    distances = tuple(hdist(v, w) for v in vs)
    required = tuple(required_distance(i, n, q) for i in range(1, len(vs) + 1))
    for i, r in enumerate(required, start=1):
        if r != m + 1 - i:
            raise AlgorithmStateError(f"floor case gives {r}, expected {m + 1 - i}")
    result = EvaderCertificate(
        w=w,
        m=m,
        distances=distances,
        required=required,
        floor_case=divmod(n, q),
        inner=tuple(cert.per_i_inner[: len(vs)]),
        fv=cert,
    )
    if not result.valid:
        raise AlgorithmStateError("evader misses a required distance")
    return result


def random_vertex(rng: np.random.Generator, n: int, q: int) -> Vertex:
    return Vertex(tuple(int(s) for s in rng.integers(1, q + 1, size=n)), q)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream per (seed, trial) so results do not depend on scheduling."""
    return np.random.default_rng([seed, trial])


@dataclass(frozen=True)
class WitnessReport:
    n: int
    q: int
    m: int
    trials: int
    seed: int
    passes: int
    failures: int
    worst_slack: Optional[int]


def lower_bound_witnessed(n: int, q: int, trials: int, seed: int = 0) -> WitnessReport:
    """Run :func:`evade` on random m-vertex sequences and re-check each w by distance."""
    _need_q3(q)
    m = evader_length(n, q)
    passes = failures = 0
    worst = None
    for t in range(trials):
        rng = trial_rng(seed, t)
        vs = [random_vertex(rng, n, q) for _ in range(m)]
        try:
            cert = evade(vs, n, q)
        except AlgorithmStateError:
            failures += 1
            continue
        # w must lie outside every staggered ball Γ_{m-i}(v_i)
        escaped = all(hdist(v, cert.w) > m - i for i, v in enumerate(vs, start=1))
        if escaped:
            passes += 1
        else:
            failures += 1
        if cert.slack is not None:
            worst = cert.slack if worst is None else min(worst, cert.slack)
    return WitnessReport(n, q, m, trials, seed, passes, failures, worst)
