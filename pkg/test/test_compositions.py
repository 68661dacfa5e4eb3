'''测试weak composition的枚举和transfer'''
import pytest
from hypothesis import given, strategies as st
from psi4opt.compositions import (CompositionSpace, as_exponents, enumerate_compositions, is_balanced, is_concentrated,
                                  balanced_representative, concentrated_representative, transfer, transfer_block,
                                  imbalance, canonical_key, orbit_size, orbit_representatives, format_vector)
from psi4opt.snippets import (EmptyVectorError, NegativeEntryError, SameIndexError, IndexRangeError, EmptyEntryError,
                              InputError)


def test_enumerate_order():
    assert list(enumerate_compositions(CompositionSpace(2, 2))) == [(2, 0), (1, 1), (0, 2)]
    assert list(CompositionSpace(1, 4)) == [(4,)]
    assert list(CompositionSpace(3, 0)) == [(0, 0, 0)]


@pytest.mark.parametrize("n, d, size", [(6, 3, 56), (2, 2, 3), (1, 4, 1), (3, 0, 1), (7, 16, 74613)])
def test_space_size(n, d, size):
    space = CompositionSpace(n, d)
    assert space.size == size == len(space)


@pytest.mark.parametrize("n, d", [(1, 0), (2, 5), (4, 4), (5, 3), (6, 3)])
def test_enumerate_exhaustive(n, d):
    space = CompositionSpace(n, d)
    vectors = list(space)
    assert len(vectors) == len(set(vectors)) == space.size
    assert all(len(e) == n and sum(e) == d and min(e) >= 0 for e in vectors)
    assert vectors == sorted(vectors, reverse=True)


def test_space_errors():
    with pytest.raises(EmptyVectorError):
        CompositionSpace(0, 3)
    with pytest.raises(InputError):
        CompositionSpace(2, -1)


def test_as_exponents():
    assert as_exponents([1, 0]) == (1, 0)
    with pytest.raises(EmptyVectorError):
        as_exponents(())
    with pytest.raises(NegativeEntryError):
        as_exponents((1, -1))
    with pytest.raises(InputError):
        as_exponents((1.0, 2))
    with pytest.raises(InputError):
        as_exponents((True, 2))


def test_membership():
    space = CompositionSpace(2, 3)
    assert (1, 2) in space
    assert (3, 1) not in space
    assert (-1, 4) not in space
    assert (3,) not in space


def test_balanced_concentrated():
    assert is_balanced((1, 1, 1, 0, 0, 0))
    assert not is_balanced((2, 0, 1))
    assert is_concentrated((3, 0, 0))
    assert is_concentrated((0, 0, 0))
    assert not is_concentrated((1, 1))
    assert balanced_representative(CompositionSpace(6, 3)) == (1, 1, 1, 0, 0, 0)
    assert balanced_representative(CompositionSpace(4, 7)) == (2, 2, 2, 1)
    assert balanced_representative(CompositionSpace(3, 0)) == (0, 0, 0)
    assert concentrated_representative(CompositionSpace(6, 3)) == (3, 0, 0, 0, 0, 0)


def test_transfer():
    assert transfer((3, 0, 0), 0, 1) == (2, 1, 0)
    assert transfer_block((3, 1, 0), 0, 2, 3) == (0, 1, 3)
    with pytest.raises(SameIndexError):
        transfer((3, 0, 0), 1, 1)
    with pytest.raises(IndexRangeError):
        transfer((3, 0, 0), 0, 3)
    with pytest.raises(IndexError):
        transfer((3, 0, 0), -1, 0)
    with pytest.raises(EmptyEntryError):
        transfer((3, 0, 0), 1, 0)
    with pytest.raises(EmptyEntryError):
        transfer_block((3, 1, 0), 1, 0, 2)
    with pytest.raises(InputError):
        transfer_block((3, 1, 0), 0, 1, 0)


def test_imbalance_decreases():
    assert imbalance((3, 0, 0)) == 9
    assert imbalance(transfer((3, 0, 0), 0, 1)) == 5


def test_orbits():
    assert canonical_key((0, 2, 1)) == (2, 1, 0)
    assert orbit_size((1, 1, 1, 0, 0, 0)) == 20
    assert orbit_size((3, 0, 0, 0, 0, 0)) == 6
    assert orbit_size((4,)) == 1
    assert list(orbit_representatives(CompositionSpace(6, 3))) == [(3, 0, 0, 0, 0, 0), (2, 1, 0, 0, 0, 0),
                                                                    (1, 1, 1, 0, 0, 0)]


@given(st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=9))
def test_orbit_sizes_cover_space(n, d):
    space = CompositionSpace(n, d)
    representatives = list(orbit_representatives(space))
    assert sum(orbit_size(key) for key in representatives) == space.size
    assert all(key == canonical_key(key) and key in space for key in representatives)
    assert {canonical_key(e) for e in space} == set(representatives)


vectors = st.lists(st.integers(min_value=0, max_value=12), min_size=2, max_size=7)


@given(vectors, st.data())
def test_transfer_keeps_sum(e, data):
    i = data.draw(st.sampled_from([k for k, x in enumerate(e) if x > 0] or [None]))
    if i is None:
        return
    j = data.draw(st.sampled_from([k for k in range(len(e)) if k != i]))
    moved = transfer(e, i, j)
    assert sum(moved) == sum(e) and min(moved) >= 0
    assert moved[i] == e[i] - 1 and moved[j] == e[j] + 1


@given(vectors, st.data())
def test_balancing_transfer_lowers_imbalance(e, data):
    '''e_i >= e_j + 2时从i移一个单位到j, imbalance严格下降'''
    pairs = [(i, j) for i in range(len(e)) for j in range(len(e)) if e[i] >= e[j] + 2]
    if not pairs:
        assert max(e) - min(e) <= 1
        return
    i, j = data.draw(st.sampled_from(pairs))
    assert imbalance(transfer(e, i, j)) < imbalance(e)


@given(vectors, st.data())
def test_canonical_key_is_permutation_invariant(e, data):
    permuted = data.draw(st.permutations(e))
    assert canonical_key(permuted) == canonical_key(e)
    assert orbit_size(permuted) == orbit_size(e)


def test_format_vector():
    assert format_vector((1, 1, 1, 0, 0, 0)) == '(1,1,1,0,0,0)'
    assert format_vector((4,)) == '(4)'


if __name__ == '__main__':
    test_enumerate_order()
    test_transfer()
    test_orbits()
