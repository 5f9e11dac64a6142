import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamburn.errors import CapacityError, DimensionError, DomainError
from hamburn.hamming import (
    Vertex,
    all_vertices,
    ball_size,
    burning_number,
    burning_number_with_witness,
    burns,
    find_burning_sequence,
    hdist,
    uncovered,
    vertex_at,
    vertex_index,
)

from conftest import V


def brute_uncovered(seq):
    """Independent coverage check by plain enumeration."""
    n, q, b = seq[0].n, seq[0].q, len(seq)
    missing = []
    for syms in itertools.product(range(1, q + 1), repeat=n):
        w = Vertex(syms, q)
        if not any(hdist(v, w) <= b - 1 - i for i, v in enumerate(seq)):
            missing.append(w)
    return missing


def test_hdist_examples():
    assert hdist(V(1, 1, 1, q=3), V(1, 1, 1, q=3)) == 0
    assert hdist(V(1, 2, 3, q=3), V(3, 2, 1, q=3)) == 2
    assert hdist(V(1, 1, 1, 1, q=2), V(2, 2, 2, 2, q=2)) == 4


def test_hdist_dimension_error():
    with pytest.raises(DimensionError):
        hdist(V(1, 1, q=3), V(1, 1, 1, q=3))
    with pytest.raises(DimensionError):
        hdist(V(1, 1, q=3), V(1, 1, q=4))


def test_vertex_validates_symbols():
    with pytest.raises(DomainError):
        V(0, 1, q=3)
    with pytest.raises(DomainError):
        V(4, q=3)


def test_ball_size_examples():
    assert ball_size(2, 3, 1) == 5
    assert ball_size(3, 2, 3) == 8
    center = V(1, 1, 1, 1, q=3)
    enumerated = sum(hdist(center, w) <= 2 for w in all_vertices(4, 3))
    assert enumerated == 33
    assert ball_size(4, 3, 2) == enumerated


@pytest.mark.parametrize("n,q", [(n, q) for n in range(1, 5) for q in range(2, 5)])
def test_ball_of_diameter_is_everything(n, q):
    assert ball_size(n, q, n) == q**n
    assert ball_size(n, q, n + 3) == q**n


def test_mixed_radix_indexing():
    # symbol s at coordinate i contributes (s-1)*q^(n-1-i)
    v = V(2, 3, 1, q=3)
    assert vertex_index(v) == 1 * 9 + 2 * 3 + 0
    for i in range(27):
        assert vertex_index(vertex_at(i, 3, 3)) == i
    order = [vertex_at(i, 3, 3).symbols for i in range(27)]
    assert order == sorted(order)


def test_burns_false_example():
    seq = [V(1, 1, 1, q=2), V(2, 2, 2, q=2)]
    assert not burns(seq)
    missing = brute_uncovered(seq)
    assert V(2, 2, 1, q=2) in missing
    assert uncovered(seq) == min(missing) == V(1, 2, 2, q=2)


def test_antipodal_pair_plus_any_burns_cube():
    for x in all_vertices(3, 2):
        assert burns([V(1, 1, 1, q=2), V(2, 2, 2, q=2), x])


@pytest.mark.parametrize("n,q", [(2, 3), (3, 3), (3, 2), (2, 5)])
def test_repeated_center_of_length_n_plus_one_burns(n, q):
    v = vertex_at(q**n // 2, n, q)
    assert burns([v] * (n + 1))
    assert uncovered([v] * (n + 1)) is None


def test_single_center_uncovered():
    assert uncovered([V(1, 1, 1, q=3)]) == V(1, 1, 2, q=3)


def test_capacity_guard():
    with pytest.raises(CapacityError):
        burns([V(1, 1, 1, q=3)], cap=26)
    with pytest.raises(CapacityError):
        burning_number(3, 3, cap=10)


def test_capacity_env_override(monkeypatch):
    monkeypatch.setenv("HAMBURN_CAP", "8")
    with pytest.raises(CapacityError):
        burns([V(1, 1, 1, q=3)])
    assert burns([V(1, 1, 1, q=2)] * 4)


@pytest.mark.parametrize(
    "n,q,expected",
    [(3, 2, 3), (4, 2, 3), (3, 3, 4)],
)
def test_burning_number_known_values(n, q, expected):
    assert burning_number(n, q) == expected


def test_burning_number_h23():
    # bounds 2 <= b <= 3; exhaustive search pins the value
    res = burning_number_with_witness(2, 3)
    assert res.value == 3
    assert burns(list(res.witness))
    # refute length 2 independently: every pair of centers misses something
    verts = list(all_vertices(2, 3))
    assert all(brute_uncovered([u, v]) for u in verts for v in verts)


@pytest.mark.parametrize("n,q", [(n, q) for n in range(1, 4) for q in range(2, 5)])
def test_witness_and_exhaustiveness(n, q):
    res = burning_number_with_witness(n, q)
    assert len(res.witness) == res.value
    assert burns(list(res.witness))
    assert res.value <= n + 1
    if res.value > 1:
        assert find_burning_sequence(n, q, res.value - 1) is None


def test_burning_number_nondecreasing_in_q():
    for n in (2, 3):
        vals = [burning_number(n, q) for q in range(2, 6)]
        assert vals == sorted(vals)


def test_search_agrees_with_brute_force_on_tiny_graphs():
    for n, q in [(2, 2), (2, 3), (3, 2)]:
        verts = list(all_vertices(n, q))
        brute = next(
            b for b in range(1, n + 2) if any(not brute_uncovered(list(s)) for s in itertools.product(verts, repeat=b))
        )
        assert burning_number(n, q) == brute


def test_node_budget_and_workers_agree():
    with pytest.raises(CapacityError):
        find_burning_sequence(4, 3, 4, node_budget=5)
    seq1 = find_burning_sequence(3, 3, 4, workers=1)
    seq2 = find_burning_sequence(3, 3, 4, workers=2)
    assert seq1 == seq2


@st.composite
def triples(draw):
    n = draw(st.integers(1, 8))
    q = draw(st.integers(2, 5))
    vert = st.tuples(*[st.integers(1, q)] * n).map(lambda s: Vertex(s, q))
    return draw(vert), draw(vert), draw(vert)


@settings(max_examples=300, deadline=None)
@given(triples())
def test_hdist_is_a_metric(t):
    u, v, w = t
    assert hdist(u, v) == hdist(v, u) >= 0
    assert (hdist(u, v) == 0) == (u == v)
    assert hdist(u, w) <= hdist(u, v) + hdist(v, w)
    assert hdist(u, v) <= u.n


def test_prepending_keeps_burning(rng):
    for _ in range(30):
        n, q = 3, 3
        seq = [vertex_at(int(i), n, q) for i in rng.integers(0, 27, size=4)]
        if burns(seq):
            extra = vertex_at(int(rng.integers(0, 27)), n, q)
            assert burns([extra] + seq)


def test_prepending_to_a_witness_keeps_burning():
    seq = list(burning_number_with_witness(3, 3).witness)
    for extra in all_vertices(3, 3):
        assert burns([extra] + seq)
