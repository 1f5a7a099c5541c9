"""Enumeration, ranking and sampling over the eight element families."""

import math

import numpy as np
import pytest
from scipy import stats as sps

from cyclic_descents.colored import ColoredPermutation, color_of
from cyclic_descents.cycles import is_cyclic
from cyclic_descents.domains import (BudgetError, DomainSpec, cardinality,
                                     iterate, iterate_words, make_rng, rank,
                                     sample, sample_stat_batch, unrank)
from cyclic_descents.permutations import SignedPermutation


def test_cardinalities():
    assert cardinality(DomainSpec("B", 4)) == 2**4 * 24
    assert cardinality(DomainSpec("D", 4)) == 2**3 * 24
    assert cardinality(DomainSpec("CB", 5)) == 2**5 * 24
    assert cardinality(DomainSpec("CD", 5)) == 2**4 * 24
    assert cardinality(DomainSpec("CDbar", 5)) == 2**4 * 24
    assert cardinality(DomainSpec("S", 5)) == 120
    assert cardinality(DomainSpec("CS", 5)) == 24
    assert cardinality(DomainSpec("CSnr", 4, r=3)) == 3**4 * 6
    assert cardinality(DomainSpec("CSnr", 4, r=3, color_filter=1)) == 3**3 * 6


def test_domain_validation():
    with pytest.raises(ValueError):
        DomainSpec("Q", 3)
    with pytest.raises(ValueError):
        DomainSpec("CB", 0)
    with pytest.raises(ValueError):
        DomainSpec("B", 3, r=2)
    with pytest.raises(ValueError):
        DomainSpec("CSnr", 3, r=2, color_filter=2)


@pytest.mark.parametrize("kind,n", [("B", 3), ("D", 3), ("CB", 4), ("CD", 4),
                                    ("CDbar", 4), ("S", 4), ("CS", 4)])
def test_unrank_covers_exactly(kind, n):
    d = DomainSpec(kind, n)
    seen = {unrank(d, i) for i in range(cardinality(d))}
    assert len(seen) == cardinality(d)
    for x in seen:
        assert isinstance(x, SignedPermutation)
        if kind in ("D",):
            assert x.negative_count() % 2 == 0
        if kind == "CD":
            assert is_cyclic(x) and x.negative_count() % 2 == 0
        if kind == "CDbar":
            assert is_cyclic(x) and x.negative_count() % 2 == 1
        if kind in ("CB", "CS"):
            assert is_cyclic(x)
        if kind in ("S", "CS"):
            assert all(v > 0 for v in x.images)


def test_unrank_colored_filter():
    d = DomainSpec("CSnr", 4, r=3, color_filter=2)
    seen = set()
    for i in range(cardinality(d)):
        p = unrank(d, i)
        assert isinstance(p, ColoredPermutation)
        assert color_of(p) == 2
        seen.add((p.omega, p.tau))
    assert len(seen) == cardinality(d)


@pytest.mark.parametrize("kind,n", [("B", 3), ("CB", 4)])
def test_rank_inverts_unrank(kind, n):
    d = DomainSpec(kind, n)
    for i in range(cardinality(d)):
        assert rank(d, unrank(d, i)) == i


def test_iterate_matches_unrank():
    d = DomainSpec("CD", 4)
    assert list(iterate(d)) == [unrank(d, i) for i in range(cardinality(d))]
    assert list(iterate(d, start=5, stop=9)) == [unrank(d, i) for i in range(5, 9)]


def test_iterate_words_shape():
    d = DomainSpec("CB", 4)
    ws = list(iterate_words(d))
    assert len(ws) == 96
    for w in ws:
        assert abs(w[-1]) == 4
        assert sorted(abs(v) for v in w) == [1, 2, 3, 4]


def test_budget_refusal():
    big = DomainSpec("B", 40)
    with pytest.raises(BudgetError):
        next(iterate(big))
    gen = iterate(big, allow_big=True)
    assert isinstance(next(gen), SignedPermutation)


def test_rng_streams_are_stable_and_worker_split():
    a = make_rng(123).integers(0, 1 << 32, size=4)
    b = make_rng(123).integers(0, 1 << 32, size=4)
    c = make_rng(123, worker=1).integers(0, 1 << 32, size=4)
    assert (a == b).all()
    assert (a != c).any()


def test_scalar_sampling_uniform_chi_square():
    # 1e5 draws over the 96 cyclic signed permutations of degree 4; the
    # goodness of fit should survive a 1e-3 significance bar.
    d = DomainSpec("CB", 4)
    m = cardinality(d)
    rng = make_rng(2024)
    counts = {i: 0 for i in range(m)}
    for _ in range(100_000):
        counts[rank(d, sample(d, rng))] += 1
    _, p = sps.chisquare(list(counts.values()))
    assert p > 1e-3


def test_sample_accepts_plain_seed():
    d = DomainSpec("CD", 5)
    assert sample(d, 99) == sample(d, 99)


def test_batch_stats_match_exact_distribution():
    d = DomainSpec("CB", 4)
    vals = sample_stat_batch(d, "des", 60_000, seed=5)
    assert vals.shape == (60_000,)
    want = {1: 20 / 96, 2: 56 / 96, 3: 20 / 96}
    seen, cnt = np.unique(vals, return_counts=True)
    assert set(seen) == set(want)
    obs = dict(zip(seen.tolist(), cnt.tolist()))
    _, p = sps.chisquare([obs[k] for k in want],
                         [60_000 * v for v in want.values()])
    assert p > 1e-3


@pytest.mark.parametrize("kind", ["CB", "CD", "CDbar"])
@pytest.mark.parametrize("stat", ["des", "maj", "neg", "fmaj"])
def test_batch_stats_follow_exact_law(kind, stat):
    from cyclic_descents.lab import exact_distribution
    d = DomainSpec(kind, 5)
    table = exact_distribution(d, stat).counts
    total = cardinality(d)
    draws = 20_000
    vals = sample_stat_batch(d, stat, draws, seed=17)
    obs = {k: 0 for k in table}
    for v, c in zip(*np.unique(vals, return_counts=True)):
        assert int(v) in table
        obs[int(v)] = int(c)
    keys = sorted(table)
    _, p = sps.chisquare([obs[k] for k in keys],
                         [draws * table[k] / total for k in keys])
    assert p > 1e-3


def test_batch_sampler_is_deterministic():
    d = DomainSpec("CDbar", 6)
    x = sample_stat_batch(d, "fmaj", 5000, seed=11)
    y = sample_stat_batch(d, "fmaj", 5000, seed=11)
    z = sample_stat_batch(d, "fmaj", 5000, seed=11, worker=1)
    assert (x == y).all()
    assert (x != z).any()


def test_batch_parity_classes_sample_their_class():
    for kind, want in (("CD", 0), ("CDbar", 1)):
        d = DomainSpec(kind, 5)
        vals = sample_stat_batch(d, "neg", 2000, seed=3)
        assert ((vals % 2) == want).all()
