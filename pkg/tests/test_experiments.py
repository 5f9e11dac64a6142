import itertools
from fractions import Fraction as F

import numpy as np
import pytest

from hamburn import experiments as ex
from hamburn.errors import CapacityError, DimensionError, UnsupportedError
from hamburn.hamming import Vertex, hdist


def test_shift_examples():
    assert ex.shift((0, 1, 2), 1) == (1, 2, 0)
    v = (2, 0, 1, 1)
    assert ex.shift(v, 0) == v
    assert ex.shift(ex.shift(v, 1), 2) == v


def test_shift_needs_ternary():
    with pytest.raises(UnsupportedError):
        ex.shift((0, 3), 1)


def test_f_value_examples():
    u = (0, 0, 0, 0)
    assert ex.f_value(u, (1, 1, 1, 0), 1) == F(1, 3)
    assert ex.f_value(u, u, 1) == F(8, 3)
    assert ex.f_value(u, (1, 1, 0, 0), 1) == F(2, 3)
    with pytest.raises(DimensionError):
        ex.f_value((0, 0, 0), (0, 0, 0), 1)


def test_g_value_self():
    u = (0, 1, 2, 0)
    # d(u,u)=0 and the other two shifts sit at distance 4
    assert [hdist(ex.to_vertex(u), ex.to_vertex(ex.shift(u, t))) for t in range(3)] == [0, 4, 4]
    assert ex.g_value(u, u, 1) == F(8, 3)


def test_g_shift_invariant():
    verts = list(itertools.product(range(3), repeat=4))
    for u in verts[::7]:
        for v in verts[::5]:
            for t in range(3):
                assert ex.g_value(u, ex.shift(v, t), 1) == ex.g_value(u, v, 1)


def test_orbit_identity_exhaustive_n4():
    verts = list(itertools.product(range(3), repeat=4))
    assert all(ex.orbit_distance_sum(v, w) == 8 for v in verts for w in verts)


def test_orbit_identity_random_large(rng):
    for n in (10, 25):
        for _ in range(2000):
            v = tuple(int(s) for s in rng.integers(0, 3, size=n))
            w = tuple(int(s) for s in rng.integers(0, 3, size=n))
            assert ex.orbit_distance_sum(v, w) == 2 * n


def test_vertex_conversion():
    v = (0, 2, 1)
    assert ex.to_vertex(v) == Vertex((1, 3, 2), 3)
    assert ex.from_vertex(ex.to_vertex(v)) == v


def test_open_problem_witness_by_rationals_matches_table_search(rng):
    # compare the integer table search against exact Fraction evaluation
    space = ex._Ternary(4)
    for _ in range(25):
        inst = rng.integers(0, 3, size=(4, 4)).astype(np.int8)
        counts, first = ex._solve_instances(space, inst[None])
        us = [tuple(int(s) for s in u) for u in inst]
        w = ex.find_open_problem_witness(us, 1)
        if w is None:
            assert counts[0] == 0
        else:
            assert tuple(int(s) for s in space.digits[first[0]]) == w
            brute = sum(
                all(ex.g_value(u, cand, 1) < i for i, u in enumerate(us, start=1))
                for cand in itertools.product(range(3), repeat=4)
            )
            assert counts[0] == brute


def test_open_problem_exhaustive_partial_sweep():
    rep = ex.open_problem_search(1, "exhaustive", budget=3000)
    assert rep.instances_checked == 3000 and not rep.complete
    assert rep.instance_total == 81**3
    assert rep.consistent
    assert sum(rep.witness_stats.values()) == 3000


def test_open_problem_exhaustive_rejects_k2():
    with pytest.raises(CapacityError):
        ex.open_problem_search(2, "exhaustive")


def test_open_problem_randomized_deterministic():
    a = ex.open_problem_search(2, "randomized", budget=300, seed=7)
    b = ex.open_problem_search(2, "randomized", budget=300, seed=7, chunk=37, workers=2)
    assert a == b
    assert a.consistent and a.instances_checked == 300


def test_open_problem_large_k_path_without_table():
    rep = ex.open_problem_search(3, "randomized", budget=3, seed=1)
    assert rep.n == 10 and rep.instances_checked == 3
    assert rep.consistent


def test_bs_existence_trivial():
    assert ex.bs_existence([[1]]) in {(-1,), (1,)}


def test_bs_existence_random_n10():
    rep = ex.bs_trials(10, 100, seed=3)
    assert rep.missing == 0 and rep.found == 100


def test_bs_existence_witness_valid(rng):
    a = (2 * rng.integers(0, 2, size=(8, 8)) - 1).tolist()
    x = ex.bs_existence(a)
    assert all(abs(sum(p * r for p, r in zip(ai, x))) < 2 * i for i, ai in enumerate(a, start=1))


def test_bs_existence_capacity():
    with pytest.raises(CapacityError):
        ex.bs_existence([[1] * 21] * 21)


@pytest.mark.parametrize("n", range(1, 5))
def test_sign_identity(n):
    assert ex.sign_identity_holds(n)


def test_monotonicity_n3_q3():
    res = ex.monotonicity(3, 3)
    assert (res.b_prev, res.b) == (3, 4)
    assert res.holds


def test_monotonicity_n2_q3():
    res = ex.monotonicity(2, 3)
    assert res.b_prev == 2 and res.b == 3
    assert ex.monotonicity_check(2, 3)


def test_monotonicity_uses_claim_only_under_its_hypothesis():
    # b(3,3) = 4 = b(3,4): s is capped at n = 3, so only b(3,4) >= 4 is asserted
    res = ex.monotonicity(3, 4)
    assert (res.b_prev, res.b, res.s) == (4, 4, 3)
    assert res.holds


def test_proposition_q_ge_n():
    from hamburn.hamming import burning_number

    assert burning_number(3, 3) == 4
    assert burning_number(3, 4) == 4
    assert burning_number(4, 4) == 5
