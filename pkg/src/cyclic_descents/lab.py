"""Exact statistic distributions, refined descent tables, and normality
diagnostics.

Exact paths use big integers and rationals only; floating point appears
solely in the Monte-Carlo normality report.  Tables are plain mappings with
big-integer counts, so shard counts merge associatively and the full table
is invariant under iteration order.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .colored import ColoredPermutation, colored_stats
from .domains import DomainSpec, cardinality, iterate, iterate_words
from .statistics import DescentSet, descent_set, stats, truncated_descent_set

_SIGNED_STATS = ("des", "maj", "neg", "fmaj")
_COLORED_STATS = ("des", "maj", "col", "fmaj")


@dataclass(frozen=True)
class DistributionTable:
    domain: DomainSpec
    stat: str
    counts: dict

    def __post_init__(self):
        if sum(self.counts.values()) != cardinality(self.domain):
            raise ValueError("counts do not cover the domain")

    def total(self):
        return sum(self.counts.values())


@dataclass(frozen=True)
class RefinedTable:
    domain: DomainSpec
    counts: dict

    def __post_init__(self):
        if sum(self.counts.values()) != cardinality(self.domain):
            raise ValueError("counts do not cover the domain")


@dataclass(frozen=True)
class MomentReport:
    mean: Fraction
    variance: Fraction

    def __post_init__(self):
        if self.variance < 0:
            raise ValueError("negative variance")


@dataclass(frozen=True)
class NormalityReport:
    n: int
    domain: str
    stat: str
    sample_count: int
    seed: int
    mean: float
    variance: float
    skewness: float
    excess_kurtosis: float
    ks_distance: float

    def __post_init__(self):
        if self.sample_count <= 0:
            raise ValueError("need samples")
        if not 0 <= self.ks_distance <= 1:
            raise ValueError("distance out of range")


def _word_stat_counter(d: DomainSpec, stat: str, start=0, stop=None):
    """Counts over a cycle-word range without building permutation objects."""
    n = d.n
    idx = stat  # one of des/maj/neg/fmaj
    out = Counter()
    img = [0] * (n + 1)
    for w in iterate_words(d, start, stop):
        for p in range(n - 1):
            img[abs(w[p])] = w[p + 1]
        img[abs(w[n - 1])] = w[0]
        des = maj = neg = 0
        prev = 0
        for i in range(1, n + 1):
            v = img[i]
            if prev > v:
                des += 1
                maj += i - 1
            if v < 0:
                neg += 1
            prev = v
        if idx == "des":
            out[des] += 1
        elif idx == "maj":
            out[maj] += 1
        elif idx == "neg":
            out[neg] += 1
        else:
            out[2 * maj + neg] += 1
    return out


def count_range(d: DomainSpec, stat: str, start=0, stop=None, allow_big=False):
    """Statistic counts over an unrank index range; merges associatively
    across shards."""
    allowed = _COLORED_STATS if d.kind == "CSnr" else _SIGNED_STATS
    if stat not in allowed:
        raise ValueError(f"statistic {stat!r} not defined on {d.kind}")
    if d.kind in ("CB", "CD", "CDbar"):
        return _word_stat_counter(d, stat, start, stop)
    out = Counter()
    pos = _COLORED_STATS.index(stat) if d.kind == "CSnr" else _SIGNED_STATS.index(stat)
    for p in iterate(d, allow_big=allow_big, start=start, stop=stop):
        if isinstance(p, ColoredPermutation):
            out[colored_stats(p)[pos]] += 1
        else:
            r = stats(p)
            out[(r.des, r.maj, r.neg, r.fmaj)[pos]] += 1
    return out


def exact_distribution(d: DomainSpec, stat: str, allow_big=False) -> DistributionTable:
    """Exact law of a statistic under the uniform measure, by full iteration."""
    if cardinality(d) > 2 ** 32 and not allow_big:
        from .domains import BudgetError
        raise BudgetError(f"{d} holds {cardinality(d)} elements; pass allow_big")
    return DistributionTable(d, stat, dict(count_range(d, stat, allow_big=True)))


def refined_descent_table(d: DomainSpec, allow_big=False) -> RefinedTable:
    """Counts keyed by descent set; cyclic domains key on the descent set
    truncated to {0,...,n-2} so they compare against degree n-1 tables."""
    if d.kind == "CSnr":
        raise ValueError("refined tables cover the signed and plain families")
    truncate = d.kind in ("CB", "CD", "CDbar", "CS")
    out = Counter()
    if d.kind in ("CB", "CD", "CDbar"):
        n = d.n
        img = [0] * (n + 1)
        mask_cap = (1 << (n - 1)) - 1
        for w in iterate_words(d):
            for p in range(n - 1):
                img[abs(w[p])] = w[p + 1]
            img[abs(w[n - 1])] = w[0]
            mask = 0
            prev = 0
            for i in range(1, n + 1):
                v = img[i]
                if prev > v:
                    mask |= 1 << (i - 1)
                prev = v
            out[mask & mask_cap] += 1
        counts = {DescentSet(n - 1, m): c for m, c in out.items()}
        return RefinedTable(d, counts)
    for p in iterate(d, allow_big=allow_big):
        key = truncated_descent_set(p, p.n - 1) if truncate else descent_set(p)
        out[key] += 1
    return RefinedTable(d, dict(out))


def exact_moments(t: DistributionTable) -> MomentReport:
    """Exact rational mean and variance of the table's uniform law."""
    total = t.total()
    if total == 0:
        raise ValueError("empty table")
    s1 = sum(v * c for v, c in t.counts.items())
    s2 = sum(v * v * c for v, c in t.counts.items())
    mean = Fraction(s1, total)
    return MomentReport(mean, Fraction(s2, total) - mean * mean)


def theoretical_moments(stat: str, n: int) -> MomentReport:
    """Closed-form moments on the signed group of degree n: descents are
    (n/2, (n+1)/12); the flag major index is (n^2/2, (4n^3+6n^2-n)/36).

    The same values hold for the cyclic classes once n >= 5.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if stat == "des":
        return MomentReport(Fraction(n, 2), Fraction(n + 1, 12))
    if stat == "fmaj":
        return MomentReport(Fraction(n * n, 2),
                            Fraction(4 * n ** 3 + 6 * n ** 2 - n, 36))
    raise ValueError(f"no closed form for {stat!r}")


def _normal_cdf(x: float) -> float:
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def ks_against_normal(z: np.ndarray) -> float:
    """Kolmogorov-Smirnov distance of standardized samples against N(0,1)."""
    z = np.sort(np.asarray(z, dtype=np.float64))
    N = len(z)
    best = 0.0
    for i in range(N):
        F = _normal_cdf(z[i])
        lo = F - i / N
        hi = (i + 1) / N - F
        if lo > best:
            best = lo
        if hi > best:
            best = hi
    return best


def normality_diagnostics(kind: str, stat: str, n: int, samples: int,
                          seed: int, worker: int = 0) -> NormalityReport:
    """Monte-Carlo check of the normal limit on a cyclic signed domain.

    Standardizes by the closed-form moments (valid once n >= 5), then
    reports sample skewness, excess kurtosis, and the KS distance to the
    standard normal.  Deterministic given (seed, worker)."""
    if n < 5:
        raise ValueError("closed-form moments require n >= 5")
    if samples < 10 ** 3:
        raise ValueError("need at least 1000 samples")
    if stat not in ("des", "fmaj"):
        raise ValueError("diagnostics cover des and fmaj")
    from .domains import sample_stat_batch
    d = DomainSpec(kind, n)
    vals = sample_stat_batch(d, stat, samples, seed, worker).astype(np.float64)
    tm = theoretical_moments(stat, n)
    mu = float(tm.mean)
    sd = math.sqrt(float(tm.variance))
    z = (vals - mu) / sd
    m = vals.mean()
    c = vals - m
    m2 = float((c * c).mean())
    m3 = float((c ** 3).mean())
    m4 = float((c ** 4).mean())
    return NormalityReport(
        n=n, domain=kind, stat=stat, sample_count=samples, seed=seed,
        mean=float(m), variance=m2,
        skewness=m3 / m2 ** 1.5,
        excess_kurtosis=m4 / (m2 * m2) - 3.0,
        ks_distance=ks_against_normal(z),
    )
