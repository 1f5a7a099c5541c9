import math
from itertools import permutations

import pytest

from cyclic_descents.classic import phi_classic
from cyclic_descents.permutations import SignedPermutation
from cyclic_descents.statistics import descent_set, truncated_descent_set
from cyclic_descents.transfer import capital_phi, psi_plus


def unsigned_cyclic(N):
    """All cyclic permutations of [N] with positive images, via cycle words."""
    for b in permutations(range(1, N)):
        w = list(b) + [N]
        img = [0] * N
        for p in range(N):
            img[w[p] - 1] = w[(p + 1) % N]
        yield SignedPermutation(img)


def test_smallest_case():
    # the 2-cycle (1,2) maps to the identity of degree 1
    pi = SignedPermutation([2, 1])
    assert phi_classic(pi).images == (1,)


def test_rejects_bad_inputs():
    with pytest.raises(ValueError):
        phi_classic(SignedPermutation([-2, -1]))
    with pytest.raises(ValueError):
        phi_classic(SignedPermutation([1, 2]))


def test_agrees_with_signed_map():
    for N in range(1, 7):
        for pi in unsigned_cyclic(N):
            assert phi_classic(pi, check=True) == capital_phi(pi)


def test_descents_preserved():
    for pi in unsigned_cyclic(5):
        out = phi_classic(pi)
        assert truncated_descent_set(pi, 4) == descent_set(out)
        # position-0 descents cannot occur without signs
        assert 0 not in descent_set(out).members


def test_bijection_onto_unsigned():
    for N in range(2, 7):
        n = N - 1
        images = {phi_classic(pi).images for pi in unsigned_cyclic(N)}
        assert len(images) == math.factorial(n)
        assert all(all(v > 0 for v in img) for img in images)


def test_psi_inverts_classic():
    for pi in unsigned_cyclic(6):
        s = phi_classic(pi)
        assert psi_plus(s) == pi
