import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rbdgraph.contfrac import cf_eval, hj_expand
from rbdgraph.errors import InvalidSite, LimitExceeded, NotAFilling, NotBlowdownSite, NotInZk
from rbdgraph.tuples import (BlowSite, betti, blowdown, blowup, depth, enumerate_zk, fillings, height,
                             interior_ones, is_zk, minimal_resolution)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


def brute_zk(k):
    """Filter all tuples with entries in 1..k-1 through the continued fraction."""
    if k == 1:
        return [(0,)]
    return [t for t in itertools.product(range(1, k), repeat=k) if cf_eval(t) == 0]


def test_blowup_examples():
    assert blowup((0,), BlowSite.initial()) == (1, 1)
    assert blowup((1, 2, 1), BlowSite.interior(2)) == (1, 3, 1, 2)
    assert blowup((1, 2, 1), BlowSite.exterior()) == (1, 2, 2, 1)


@pytest.mark.parametrize("t,site", [
    ((1, 1), BlowSite.initial()),
    ((0,), BlowSite.exterior()),
    ((1, 2, 1), BlowSite.interior(3)),
    ((1, 2, 1), BlowSite.interior(0)),
])
def test_blowup_bad_sites(t, site):
    with pytest.raises(InvalidSite):
        blowup(t, site)


def test_blowdown_examples():
    assert blowdown((2, 1, 4, 2, 1, 4, 1), 2) == (1, 3, 2, 1, 4, 1)
    assert blowdown((1, 2, 1), 3) == (1, 1)
    assert blowdown((1, 3, 1, 3, 1), 3) == (1, 2, 2, 1)
    assert blowdown((1, 1), 1) == (0,)
    assert blowdown((1, 3, 1, 2), 1) == (2, 1, 2)


@pytest.mark.parametrize("t,i", [((1, 2, 1), 2), ((2, 1, 2), 1), ((1, 1, 3), 2), ((1, 2, 1), 4)])
def test_blowdown_bad_sites(t, i):
    with pytest.raises(NotBlowdownSite):
        blowdown(t, i)


def test_height_examples():
    assert height((2, 1, 4, 2, 1, 4, 1)) == 3
    assert height((2, 1, 4, 1, 2)) == 2
    for k in range(2, 9):
        assert height(minimal_resolution(k)) == 0
    with pytest.raises(NotInZk):
        height((2, 2, 2))


def test_depth_examples():
    assert depth((2, 1, 4, 1, 2)) == 2
    assert depth((3, 1, 4, 3, 1, 2, 4, 1, 4)) == 3
    assert depth((1, 2, 1)) == 0
    assert depth((1, 1)) == 0
    assert interior_ones((3, 1, 4, 3, 1, 2, 4, 1, 4)) == [2, 5, 8]


def test_enumerate_small():
    assert enumerate_zk(1) == [(0,)]
    assert enumerate_zk(2) == [(1, 1)]
    assert enumerate_zk(3) == [(1, 2, 1), (2, 1, 2)]
    assert len(enumerate_zk(5)) == 14


def test_enumerate_catalan():
    for k in range(1, 11):
        assert len(enumerate_zk(k)) == CATALAN[k - 1]


def test_enumerate_matches_brute_force():
    for k in range(1, 7):
        assert enumerate_zk(k) == brute_zk(k)


def test_enumerate_is_sorted_and_in_zk():
    zs = enumerate_zk(8)
    assert zs == sorted(set(zs))
    assert all(is_zk(n) for n in zs)


def test_enumerate_limit(monkeypatch):
    with pytest.raises(LimitExceeded):
        enumerate_zk(13)
    with pytest.raises(LimitExceeded):
        enumerate_zk(6, limit=5)
    monkeypatch.setenv("RBD_MAX_K", "4")
    with pytest.raises(LimitExceeded):
        enumerate_zk(5)


def test_fillings_examples():
    assert set(fillings((2, 2, 4, 2, 2))) == {(1, 2, 2, 2, 1), (2, 1, 3, 2, 1), (1, 2, 3, 1, 2), (2, 1, 4, 1, 2)}
    assert set(fillings((3, 2, 3, 3, 3))) == {
        (1, 2, 2, 2, 1), (2, 1, 3, 2, 1), (1, 2, 3, 1, 2), (3, 1, 2, 3, 1), (3, 1, 3, 1, 3), (3, 2, 1, 3, 2)}
    assert fillings((2, 2, 2)) == [(1, 2, 1), (2, 1, 2)]


def test_fillings_contain_root_and_respect_reversal():
    for k in range(1, 7):
        for b in itertools.product(range(2, 5), repeat=k):
            fs = set(fillings(b))
            assert minimal_resolution(k) in fs
            if b == b[::-1]:
                assert {n[::-1] for n in fs} == fs


def test_betti_examples():
    assert betti((1, 2, 2, 2, 1), 24, 7) == 3
    assert betti((2, 1, 4, 1, 2), 24, 7) == 1
    for p, q in [(24, 7), (81, 47), (140, 41), (7, 6)]:
        k = len(hj_expand(p, p - q))
        assert betti(minimal_resolution(k), p, q) == len(hj_expand(p, q))
    with pytest.raises(NotAFilling):
        betti((3, 1, 2, 3, 1), 24, 7)


def test_betti_is_r_minus_height():
    for p, q in [(24, 7), (81, 47), (37, 10), (45, 26), (140, 41)]:
        r = len(hj_expand(p, q))
        for n in fillings(hj_expand(p, p - q)):
            assert betti(n, p, q) == r - height(n)


def test_blowup_closure():
    for k in range(1, 8):
        for n in enumerate_zk(k):
            sites = [BlowSite.initial()] if k == 1 else (
                [BlowSite.exterior()] + [BlowSite.interior(j) for j in range(1, k)])
            for s in sites:
                assert is_zk(blowup(n, s))


def test_blowdown_closure():
    for k in range(2, 9):
        for n in enumerate_zk(k):
            for i, x in enumerate(n, 1):
                if x == 1:
                    assert is_zk(blowdown(n, i))


def test_height_by_interior_blowdowns():
    # blowing down interior 1s in any order reaches u_{k - ht} after ht steps
    for k in range(2, 9):
        for n in enumerate_zk(k):
            ht = height(n)
            frontier = {n}
            for _ in range(ht):
                frontier = {blowdown(m, i) for m in frontier for i in interior_ones(m)}
                assert frontier
            assert frontier == {minimal_resolution(k - ht)}


def test_top_height_has_only_interior_ones():
    for k in range(3, 9):
        for n in enumerate_zk(k):
            if height(n) == k - 2:
                assert n[0] != 1 and n[-1] != 1


@given(st.lists(st.sampled_from(["e", "i"]), max_size=10), st.data())
def test_random_blowup_histories_stay_in_zk(ops, data):
    n = blowup((0,), BlowSite.initial())
    interior = 0
    for op in ops:
        if op == "e":
            n = blowup(n, BlowSite.exterior())
        else:
            j = data.draw(st.integers(1, len(n) - 1))
            n = blowup(n, BlowSite.interior(j))
            interior += 1
    assert is_zk(n)
    assert height(n) == interior
