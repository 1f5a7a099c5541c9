"""Desk-scale checkers for every headline claim of the library.

Each checker exhaustively sweeps (or, where stated, randomly samples) its
domain and returns a ClaimResult; nothing is asserted so callers decide how
to report.  The descent-preservation sweep can be sharded by unrank range
and spread over processes, and shard results merge deterministically.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product

from .classic import phi_classic
from .colored import (ColoredPermutation, color_of, colored_descent_set,
                      colored_phi, colored_psi)
from .domains import DomainSpec, cardinality, iterate_words, make_rng, _uniform_index, _perm_unrank
from .lab import exact_distribution, exact_moments, refined_descent_table, theoretical_moments
from .permutations import SignedPermutation
from .statistics import stats
from .transfer import (TransferTrace, _capital_phi_word, capital_phi,
                       capital_psi_D, capital_psi_Dbar, phi_plus, psi_plus)

MAX_REPORTED = 5


@dataclass
class ClaimResult:
    claim: str
    params: dict
    passed: bool
    checked: int
    elapsed: float
    details: str = ""
    failures: list = field(default_factory=list)

    def line(self):
        mark = "PASS" if self.passed else "FAIL"
        ps = ",".join(f"{k}={v}" for k, v in self.params.items())
        msg = f" - {self.details}" if self.details else ""
        return f"[{mark}] {self.claim}({ps}): {self.checked} checks in {self.elapsed:.2f}s{msg}"


def _word_descent_mask(w):
    """Descent mask of the permutation a full cycle word denotes."""
    N = len(w)
    img = [0] * (N + 1)
    for p in range(N):
        img[abs(w[p])] = w[(p + 1) % N]
    mask = 0
    prev = 0
    for i in range(1, N + 1):
        v = img[i]
        if prev > v:
            mask |= 1 << (i - 1)
        prev = v
    return mask


def _images_descent_mask(res):
    mask = 0
    prev = 0
    for i, v in enumerate(res):
        if prev > v:
            mask |= 1 << i
        prev = v
    return mask


def _descents_range(N, start, stop):
    """Worker for the descent-preservation sweep over one unrank range."""
    cap = (1 << (N - 1)) - 1
    bad = []
    count = 0
    for w in iterate_words(DomainSpec("CB", N), start, stop):
        res = _capital_phi_word(list(w))
        if _word_descent_mask(w) & cap != _images_descent_mask(res):
            if len(bad) < MAX_REPORTED:
                bad.append(w)
        count += 1
    return count, bad


def check_phi_descents(n, shard=None, threads=1) -> ClaimResult:
    """Descents at 0..n-1 agree between each cyclic permutation of degree
    n+1 and its image in B_n; exhaustive over the (sharded) domain."""
    t0 = time.time()
    N = n + 1
    total = cardinality(DomainSpec("CB", N))
    if shard is None:
        lo, hi = 0, total
    else:
        i, t = shard
        if not 0 <= i < t:
            raise ValueError(f"bad shard {i}/{t}")
        lo, hi = total * i // t, total * (i + 1) // t
    checked = 0
    bad = []
    if threads > 1:
        bounds = [(lo + (hi - lo) * k // threads, lo + (hi - lo) * (k + 1) // threads)
                  for k in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as ex:
            for cnt, b in ex.map(_descents_worker, [(N, a, b) for a, b in bounds]):
                checked += cnt
                bad.extend(b)
    else:
        checked, bad = _descents_range(N, lo, hi)
    return ClaimResult(
        "phi-descents", {"n": n, "shard": shard, "threads": threads},
        not bad, checked, time.time() - t0,
        "" if not bad else f"first bad words {bad[:MAX_REPORTED]}", bad[:MAX_REPORTED])


def _descents_worker(args):
    return _descents_range(*args)


def check_bijection(n, parity="D") -> ClaimResult:
    """The map restricted to one parity class of cyclic degree-(n+1)
    permutations hits every element of B_n exactly once."""
    t0 = time.time()
    kind = "CD" if parity == "D" else "CDbar"
    seen = set()
    checked = 0
    dup = []
    for w in iterate_words(DomainSpec(kind, n + 1)):
        out = tuple(_capital_phi_word(list(w)))
        if out in seen and len(dup) < MAX_REPORTED:
            dup.append(w)
        seen.add(out)
        checked += 1
    want = cardinality(DomainSpec("B", n))
    ok = not dup and len(seen) == want
    return ClaimResult(
        "bijection-" + parity, {"n": n}, ok, checked, time.time() - t0,
        f"{len(seen)}/{want} distinct images", dup)


def check_inverses(n) -> ClaimResult:
    """Six composition laws: the parity-class maps invert each other in both
    orders, and the raw positive-class maps do as well."""
    t0 = time.time()
    checked = 0
    bad = []

    def note(tag, x):
        if len(bad) < MAX_REPORTED:
            bad.append((tag, x))

    for b in permutations(range(1, n + 1)):
        for smask in range(1 << n):
            sigma = SignedPermutation(
                [-v if smask >> i & 1 else v for i, v in enumerate(b)])
            up = capital_psi_D(sigma)
            if up.negative_count() % 2 or capital_phi(up) != sigma:
                note("D-left", sigma)
            up = capital_psi_Dbar(sigma)
            if up.negative_count() % 2 == 0 or capital_phi(up) != sigma:
                note("Dbar-left", sigma)
            up = psi_plus(sigma)
            if (n + 1) not in up.images or phi_plus(up) != sigma:
                note("plus-left", sigma)
            checked += 3
    for kind, back in (("CD", capital_psi_D), ("CDbar", capital_psi_Dbar)):
        for w in iterate_words(DomainSpec(kind, n + 1)):
            pi = SignedPermutation(_word_images(w))
            if back(capital_phi(pi)) != pi:
                note(kind + "-right", pi)
            checked += 1
    for w in iterate_words(DomainSpec("CB", n + 1)):
        if w[-1] < 0:
            continue
        pi = SignedPermutation(_word_images(w))
        if psi_plus(phi_plus(pi)) != pi:
            note("plus-right", pi)
        checked += 1
    return ClaimResult("inverses", {"n": n}, not bad, checked,
                       time.time() - t0, "", bad)


def _word_images(w):
    N = len(w)
    img = [0] * N
    for p in range(N):
        img[abs(w[p]) - 1] = w[(p + 1) % N]
    return img


def check_corollary_counts(n) -> ClaimResult:
    """Refined descent tables agree: B_n equals both parity classes of
    cyclic degree n+1 under descent-set truncation."""
    t0 = time.time()
    tb = refined_descent_table(DomainSpec("B", n))
    tc = refined_descent_table(DomainSpec("CD", n + 1))
    tcb = refined_descent_table(DomainSpec("CDbar", n + 1))
    ok = tb.counts == tc.counts == tcb.counts
    checked = sum(tb.counts.values()) + sum(tc.counts.values()) + sum(tcb.counts.values())
    detail = "" if ok else "tables differ"
    return ClaimResult("corollary-counts", {"n": n}, ok, checked,
                       time.time() - t0, detail)


def check_elizalde_equivalence(n) -> ClaimResult:
    """The unsigned rewriting agrees with the signed map on every cyclic
    plain permutation of degree n+1, with its internal cross-checks armed."""
    t0 = time.time()
    checked = 0
    bad = []
    for b in permutations(range(1, n + 1)):
        w = list(b) + [n + 1]
        pi = SignedPermutation(_word_images(w))
        try:
            a = phi_classic(pi, check=True)
        except AssertionError as e:
            bad.append((w, f"cross-check: {e}"))
            continue
        c = capital_phi(pi)
        if a != c and len(bad) < MAX_REPORTED:
            bad.append((w, f"{a} != {c}"))
        checked += 1
    return ClaimResult("elizalde-equivalence", {"n": n}, not bad, checked,
                       time.time() - t0, "", bad)


def check_colored(n, r) -> ClaimResult:
    """Colored transfer: descents in [n-1] preserved, each fixed-color class
    of cyclic degree-(n+1) elements maps bijectively, and the lift with a
    target color inverts it."""
    t0 = time.time()
    checked = 0
    bad = []
    by_color = {c: set() for c in range(r)}
    keep = set(range(1, n))
    for b in permutations(range(1, n + 1)):
        w = list(b) + [n + 1]
        img = tuple(_word_images(w))
        for tau in product(range(r), repeat=n + 1):
            p = ColoredPermutation(n + 1, r, img, tau)
            out = colored_phi(p)
            if colored_descent_set(p) & keep != colored_descent_set(out) & keep:
                if len(bad) < MAX_REPORTED:
                    bad.append(("descents", p))
            by_color[color_of(p)].add((out.omega, out.tau))
            checked += 1
    full = r ** n * math.factorial(n)
    for c, hit in by_color.items():
        if len(hit) != full:
            bad.append(("color-class", (c, len(hit), full)))
    for ww in permutations(range(1, n + 1)):
        for tau in product(range(r), repeat=n):
            p = ColoredPermutation(n, r, ww, tau)
            for c in range(r):
                up = colored_psi(p, c)
                if color_of(up) != c or colored_phi(up) != p:
                    if len(bad) < MAX_REPORTED:
                        bad.append(("roundtrip", (p, c)))
                checked += 1
    return ClaimResult("colored", {"n": n, "r": r}, not bad, checked,
                       time.time() - t0, "", bad)


def check_moments(n_lo=5, n_hi=7) -> ClaimResult:
    """Exact des/fmaj moments on the three cyclic signed domains equal the
    closed forms, as rationals, for every degree in [n_lo, n_hi]."""
    t0 = time.time()
    checked = 0
    bad = []
    for n in range(n_lo, n_hi + 1):
        for kind in ("CB", "CD", "CDbar"):
            for stat in ("des", "fmaj"):
                m = exact_moments(exact_distribution(DomainSpec(kind, n), stat))
                th = theoretical_moments(stat, n)
                if (m.mean, m.variance) != (th.mean, th.variance):
                    bad.append((kind, n, stat, str(m.mean), str(m.variance)))
                checked += 1
    return ClaimResult("moments", {"n": f"{n_lo}..{n_hi}"}, not bad, checked,
                       time.time() - t0, "", bad)


def check_stat_gaps(n_hi=7) -> ClaimResult:
    """Per-element statistic gaps across the map: descents drop by 0 or 1,
    the flag major index by 0 to 2n+1, over cyclic degree-n domains."""
    t0 = time.time()
    checked = 0
    bad = []
    for n in range(1, n_hi + 1):
        for w in iterate_words(DomainSpec("CB", n)):
            pi = SignedPermutation(_word_images(w))
            out = SignedPermutation(_capital_phi_word(list(w)))
            rp, ro = stats(pi), stats(out)
            dd = rp.des - ro.des
            df = rp.fmaj - ro.fmaj
            if dd not in (0, 1) or not 0 <= df <= 2 * n + 1:
                if len(bad) < MAX_REPORTED:
                    bad.append((pi, dd, df))
            checked += 1
    return ClaimResult("stat-gaps", {"n": f"1..{n_hi}"}, not bad, checked,
                       time.time() - t0, "", bad)


def check_order_swap_properties(count=10000, degree=10, seed=0) -> ClaimResult:
    """Instrumented runs on random positive-class cyclic words: all working
    order/swap invariants hold, and tracing never changes the output."""
    t0 = time.time()
    rng = make_rng(seed)
    perms = math.factorial(degree - 1)
    checked = 0
    bad = []
    for _ in range(count):
        q = _uniform_index(rng, perms)
        s = _uniform_index(rng, 1 << (degree - 1))
        b = _perm_unrank(q, range(1, degree))
        w = [-v if s >> i & 1 else v for i, v in enumerate(b)] + [degree]
        pi = SignedPermutation(_word_images(w))
        trace = TransferTrace()
        try:
            with_trace = phi_plus(pi, trace=trace)
        except AssertionError as e:
            if len(bad) < MAX_REPORTED:
                bad.append((w, f"invariant: {e}"))
            continue
        plain = phi_plus(pi)
        if with_trace != plain and len(bad) < MAX_REPORTED:
            bad.append((w, "trace changed the output"))
        checked += 1
    return ClaimResult("order-swap-properties",
                       {"count": count, "degree": degree, "seed": seed},
                       not bad, checked, time.time() - t0, "", bad)


CLAIMS = {
    "phi-descents": check_phi_descents,
    "bijection-D": lambda n, **kw: check_bijection(n, "D"),
    "bijection-Dbar": lambda n, **kw: check_bijection(n, "Dbar"),
    "inverses": check_inverses,
    "corollary-counts": check_corollary_counts,
    "elizalde-equivalence": check_elizalde_equivalence,
    "colored": check_colored,
    "moments": check_moments,
    "stat-gaps": check_stat_gaps,
    "order-swap-properties": check_order_swap_properties,
}
