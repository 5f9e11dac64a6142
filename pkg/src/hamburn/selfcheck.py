"""Invariant suites behind ``hamburn selfcheck``.

Each suite returns a :class:`SuiteResult`; all sampling is seeded so repeated
runs print identical output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from hamburn import adversary, colorcode, experiments, floatvar
from hamburn.colorcode import encode, high, low
from hamburn.errors import HamburnError
from hamburn.hamming import all_vertices

ColorFn = Callable[[int, int], tuple]


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checked: int
    violations: int

    @property
    def passed(self) -> bool:
        return self.violations == 0 and self.checked > 0


def color_table(color_vector: ColorFn = colorcode.color_vector, qs=range(2, 9)) -> SuiteResult:
    checked = bad = 0
    for q in qs:
        for i in range(1, q + 1):
            ci = color_vector(i, q)
            checked += 1
            bad += sum(ci) != 0
            for j in range(1, q + 1):
                expected = high(q) if i == j else low(q)
                checked += 1
                bad += colorcode.dot(ci, color_vector(j, q)) != expected
    return SuiteResult("color-table", checked, bad)


def distance_identity(ns=range(1, 4), qs=range(2, 5)) -> SuiteResult:
    checked = bad = 0
    for n in ns:
        for q in qs:
            verts = list(all_vertices(n, q))
            for v, w in itertools.product(verts, repeat=2):
                checked += 1
                bad += not colorcode.dist_identity_check(v, w)
    return SuiteResult("distance-identity", checked, bad)


def random_distance_identity(n: int, q: int, pairs: int, seed: int = 0) -> SuiteResult:
    rng = np.random.default_rng(seed)
    bad = 0
    for _ in range(pairs):
        v = adversary.random_vertex(rng, n, q)
        w = adversary.random_vertex(rng, n, q)
        bad += not colorcode.dist_identity_check(v, w)
    return SuiteResult("distance-identity-random", pairs, bad)


def _random_fraction(rng, den: int) -> Fraction:
    return Fraction(int(rng.integers(0, den + 1)), den)


def hull_equivalence(samples: int, seed: int = 0, qs=range(2, 7)) -> SuiteResult:
    """Closed-form hull test agrees with explicit convex weights.

    Half the samples are built from random weights (must be inside); the
    other half are random sum-zero blocks, judged both ways.
    """
    rng = np.random.default_rng(seed)
    qs = list(qs)
    bad = 0
    for t in range(samples):
        q = qs[t % len(qs)]
        if t % 2 == 0:
            raw = [_random_fraction(rng, 12) for _ in range(q + 1)]
            total = sum(raw) or Fraction(1)
            weights = [r / total for r in raw[:q]]  # sum <= 1
            block = colorcode.hull_point(weights, q)
            bad += not colorcode.in_hull(block, q)
            bad += block.count(high(q)) > 1
        else:
            head = [Fraction(int(rng.integers(-2 * q, 2 * q + 1)), 2 * q * q) for _ in range(q - 1)]
            block = tuple(head + [-sum(head)])
            via_weights = colorcode.hull_weights(block, q) is not None
            bad += colorcode.in_hull(block, q) != via_weights
            if via_weights:
                w = colorcode.hull_weights(block, q)
                bad += colorcode.hull_point(w, q) != block
            if colorcode.in_hull(block, q):
                bad += block.count(high(q)) > 1
    return SuiteResult("hull-equivalence", samples, bad)


def orbit_identity(n: int = 4) -> SuiteResult:
    checked = bad = 0
    for v in itertools.product(range(3), repeat=n):
        for w in itertools.product(range(3), repeat=n):
            checked += 1
            bad += experiments.orbit_distance_sum(v, w) != 2 * n
    return SuiteResult("orbit-identity", checked, bad)


def rounding_oracle(instances: int, seed: int = 0, q: int = 3, max_n: int = 3) -> SuiteResult:
    """floatvar.run lands in the brute-force feasible set {x in Q^n : |a_i·x| < i}."""
    bad = 0
    for t in range(instances):
        rng = adversary.trial_rng(seed, t)
        n = 1 + t % max_n
        vs = [adversary.random_vertex(rng, n, q) for _ in range(n)]
        a = [encode(v) for v in vs]
        feasible = set()
        for w in all_vertices(n, q):
            x = encode(w)
            if all(abs(colorcode.inner(ai, x)) < i for i, ai in enumerate(a, start=1)):
                feasible.add(w)
        try:
            cert = floatvar.run(a, strict=True)
        except HamburnError:
            bad += 1
            continue
        bad += not feasible or colorcode.decode(cert.x_final) not in feasible
    return SuiteResult("rounding-oracle", instances, bad)


def bound_identities(max_n: int = 50) -> SuiteResult:
    checked = bad = 0
    for n in range(1, max_n + 1):
        checked += 1
        bad += adversary.upper_bound(n, 2) != -(-n // 2) + 1
        for q in range(3, 9):
            checked += 1
            bad += adversary.lower_bound(n, q) > adversary.upper_bound(n, q)
    return SuiteResult("bound-identities", checked, bad)


def run_all(color_vector: ColorFn = colorcode.color_vector) -> list[SuiteResult]:
    return [
        color_table(color_vector),
        distance_identity(),
        random_distance_identity(20, 5, 1000),
        hull_equivalence(2000),
        orbit_identity(4),
        rounding_oracle(60),
        bound_identities(),
    ]
