import pytest
from hypothesis import given
from hypothesis import strategies as st

from collapse_entanglement.fock import BasisIndex, Truncation, dimension, flat_index, unflatten


def test_first_basis_element():
    assert flat_index(BasisIndex(0, 0, 0), Truncation(3)) == 0


def test_alice_outermost_stride():
    assert flat_index(BasisIndex(1, 0, 0), Truncation(3)) == 16


def test_dimensions():
    assert dimension(Truncation(0), "bipartite") == 2
    assert dimension(Truncation(9), "bipartite") == 20
    assert dimension(Truncation(9), "tripartite") == 200
    assert dimension(Truncation(2), "tripartite") == 18


def test_exhaustive_round_trip_nmax2():
    t = Truncation(2)
    seen = set()
    for alice in range(2):
        for out_n in range(3):
            for hor_n in range(3):
                b = BasisIndex(alice, out_n, hor_n)
                i = flat_index(b, t)
                assert unflatten(i, t) == b
                seen.add(i)
    assert seen == set(range(18))


@pytest.mark.parametrize("n_max", [0, 1, 3, 4])
def test_bijection_onto_range(n_max):
    t = Truncation(n_max)
    indices = {
        flat_index(BasisIndex(a, o, h), t)
        for a in range(2)
        for o in range(n_max + 1)
        for h in range(n_max + 1)
    }
    assert indices == set(range(t.dimension("tripartite")))


def test_bipartite_round_trip():
    t = Truncation(5)
    for a in range(2):
        for n in range(6):
            b = BasisIndex(a, n)
            assert unflatten(flat_index(b, t), t, "bipartite") == b


@pytest.mark.parametrize(
    "bad",
    [BasisIndex(2, 0, 0), BasisIndex(0, 4, 0), BasisIndex(0, 0, 4), BasisIndex(-1, 0, 0)],
)
def test_out_of_range_occupation(bad):
    with pytest.raises(IndexError):
        flat_index(bad, Truncation(3))


def test_unflatten_out_of_range():
    with pytest.raises(IndexError):
        unflatten(18, Truncation(2))


def test_negative_n_max_rejected():
    with pytest.raises(ValueError):
        Truncation(-1)


@given(
    n_max=st.integers(min_value=0, max_value=12),
    alice=st.integers(min_value=0, max_value=1),
    data=st.data(),
)
def test_round_trip_property(n_max, alice, data):
    t = Truncation(n_max)
    out_n = data.draw(st.integers(min_value=0, max_value=n_max))
    hor_n = data.draw(st.integers(min_value=0, max_value=n_max))
    b = BasisIndex(alice, out_n, hor_n)
    i = flat_index(b, t)
    assert 0 <= i < t.dimension("tripartite")
    assert unflatten(i, t) == b
