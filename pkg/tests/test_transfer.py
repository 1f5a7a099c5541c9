import math
from itertools import permutations, product

import pytest
from hypothesis import given, settings

from cyclic_descents.cycles import SignedCycle, to_canonical_cycles, is_cyclic
from cyclic_descents.permutations import SignedPermutation
from cyclic_descents.statistics import descent_set, truncated_descent_set
from cyclic_descents.transfer import (
    TransferTrace, capital_phi, capital_psi_D, capital_psi_Dbar,
    left_to_right_maxima, p_flag, phi_plus, preimage_quadruple, psi_plus,
)

from conftest import all_cyclic_words, word_to_perm, signed_perms


# -- frozen worked examples ------------------------------------------------

def test_forward_seven():
    # (-4,-1,2,5,-3,-6,7): one swap moves 5 next to 4
    pi = SignedPermutation([2, 5, -6, -1, -3, 7, -4])
    assert sorted(descent_set(pi).members) == [2, 4, 6]
    t = TransferTrace()
    s = phi_plus(pi, trace=t)
    assert s.images == (-1, 2, -6, -3, -5, 4)
    assert sorted(descent_set(s).members) == [0, 2, 4]
    assert str(to_canonical_cycles(s)) == "(-5)(-1)(2)(4,-3,-6)"
    assert t.swap_count() == 1
    assert capital_phi(pi).images == (1, 2, -6, -3, -5, 4)
    assert psi_plus(s) == pi


def test_forward_thirteen():
    # (1,-4,8,-6,11,2,-3,7,-5,10,12,9,13): two batches in the first round,
    # three single-swap batches in the second, five swaps total
    pi = SignedPermutation([-4, -3, 7, 8, 10, 11, -5, -6, 13, 12, 2, 9, 1])
    assert sorted(descent_set(pi).members) == [0, 6, 7, 9, 10, 12]
    t = TransferTrace()
    s = phi_plus(pi, trace=t)
    assert s.images == (-5, -3, 2, 7, 8, 10, -4, -6, 12, 11, 1, 9)
    assert sorted(descent_set(s).members) == [0, 6, 7, 9, 10]
    assert str(to_canonical_cycles(s)) == "(2,-3)(7,-4)(11,1,-5,8,-6,10)(12,9)"
    assert t.swap_count() == 5
    assert psi_plus(s) == pi


def test_forward_negative_class():
    # (3,4,8,-1,5,7,2,-6,-9) carries -9, so the map factors through negation
    pi = SignedPermutation([5, -6, 4, 8, 7, -9, 2, -1, 3])
    assert sorted(descent_set(pi).members) == [1, 4, 5, 7]
    out = capital_phi(pi)
    assert out.images == (4, -1, 5, 8, 7, -6, 3, 2)
    assert sorted(descent_set(out).members) == [1, 4, 5, 7]
    with pytest.raises(ValueError):
        phi_plus(pi)


def test_degree_one():
    assert phi_plus(SignedPermutation([1])).images == ()
    assert capital_phi(SignedPermutation([-1])).images == ()
    assert psi_plus(SignedPermutation([])).images == (1,)
    assert capital_psi_D(SignedPermutation([])).images == (1,)
    assert capital_psi_Dbar(SignedPermutation([])).images == (-1,)


def test_non_cyclic_rejected():
    with pytest.raises(ValueError):
        phi_plus(SignedPermutation([1, 2]))
    with pytest.raises(ValueError):
        capital_phi(SignedPermutation([-1, 2, 3]))


# -- the trigger predicate -------------------------------------------------

def test_p_flag():
    pi = SignedPermutation([2, 5, -6, -1, -3, 7, -4])
    s = SignedPermutation([-1, 2, -6, -4, -3, 5])
    # Des(pi) = {2,4,6}, Des(s) = {0,2}; difference window is {4}
    assert p_flag(pi, s, 4, 5)
    assert p_flag(pi, s, 5, 4)
    assert not p_flag(pi, s, 3, 4)
    assert not p_flag(pi, s, 2, 3)
    assert not p_flag(pi, s, 2, 4)  # not adjacent
    assert not p_flag(pi, s, 0, 1)  # 0 outside the window
    assert not p_flag(pi, s, 6, 7)  # 6 outside the window
    with pytest.raises(ValueError):
        p_flag(s, s, 1, 2)
    with pytest.raises(ValueError):
        p_flag(pi, s, -1, 0)


def test_left_to_right_maxima():
    c = SignedCycle((1, -4, 8, -6, 11, 2, -3, 7, -5, 10, 12, 9, 13))
    assert left_to_right_maxima(c) == [1, 3, 5, 11, 13]


# -- exhaustive structure at small degree ---------------------------------

def test_bijection_small_degrees():
    for N in range(1, 6):
        n = N - 1
        Bn = 2 ** n * math.factorial(n)
        hit_D, hit_Db = set(), set()
        for w in all_cyclic_words(N):
            pi = word_to_perm(w)
            out = capital_phi(pi)
            assert truncated_descent_set(pi, n) == descent_set(out)
            neg = sum(1 for v in w if v < 0)
            (hit_D if neg % 2 == 0 else hit_Db).add(out.images)
        assert len(hit_D) == Bn
        assert len(hit_Db) == Bn


def test_inverses_small_degrees():
    for N in range(1, 6):
        for w in all_cyclic_words(N):
            pi = word_to_perm(w)
            out = capital_phi(pi)
            neg = sum(1 for v in w if v < 0)
            back = capital_psi_D(out) if neg % 2 == 0 else capital_psi_Dbar(out)
            assert back == pi


def test_psi_lands_in_positive_class():
    for n in range(0, 4):
        for b in permutations(range(1, n + 1)):
            for signs in product((1, -1), repeat=n):
                s = SignedPermutation([e * v for e, v in zip(signs, b)])
                up = psi_plus(s)
                assert is_cyclic(up)
                assert up.n == n + 1
                assert (n + 1) in up.images  # positive class
                assert phi_plus(up) == s


def test_preimage_quadruple_classes():
    for s in (SignedPermutation([2, -3, 1]), SignedPermutation([-1, -2, 3, 4])):
        quad = preimage_quadruple(s)
        n1 = s.n + 1
        classes = set()
        for q in quad:
            assert is_cyclic(q)
            pos = n1 in q.images
            even = q.negative_count() % 2 == 0
            classes.add((pos, even))
            out = capital_phi(q)
            assert out in (s, s.times_neg1())
        assert len(classes) == 4


# -- trace bookkeeping -----------------------------------------------------

def test_trace_disabled_records_nothing():
    pi = SignedPermutation([-4, -3, 7, 8, 10, 11, -5, -6, 13, 12, 2, 9, 1])
    t = TransferTrace(enabled=False)
    phi_plus(pi, trace=t)
    assert t.iterations == []


def test_trace_swaps_adjacent_magnitudes():
    pi = SignedPermutation([-4, -3, 7, 8, 10, 11, -5, -6, 13, 12, 2, 9, 1])
    t = TransferTrace()
    phi_plus(pi, trace=t)
    for _, snap, swaps in t.iterations:
        assert snap.n == 12
        for xv, yv, (xp, yp) in swaps:
            assert abs(abs(xv) - abs(yv)) == 1
            assert xp != yp


def test_psi_trace_records_iterations():
    s = SignedPermutation([-5, -3, 2, 7, 8, 10, -4, -6, 12, 11, 1, 9])
    t = TransferTrace()
    psi_plus(s, trace=t)
    assert t.swap_count() == 5
    for _, snap, _ in t.iterations:
        assert snap.n == 13


# -- randomized round trips ------------------------------------------------

@settings(deadline=None, max_examples=200)
@given(signed_perms(max_n=8, min_n=0))
def test_phi_psi_roundtrip(s):
    assert phi_plus(psi_plus(s)) == s


@settings(deadline=None, max_examples=200)
@given(signed_perms(max_n=8))
def test_capital_roundtrips(s):
    up = capital_psi_D(s)
    assert is_cyclic(up) and up.negative_count() % 2 == 0
    assert capital_phi(up) == s
    up2 = capital_psi_Dbar(s)
    assert is_cyclic(up2) and up2.negative_count() % 2 == 1
    assert capital_phi(up2) == s


@settings(deadline=None, max_examples=150)
@given(signed_perms(max_n=8))
def test_capital_preserves_descents(s):
    for up in (capital_psi_D(s), capital_psi_Dbar(s)):
        assert truncated_descent_set(up, s.n) == descent_set(s)
