"""Descent-preserving transfer maps between cyclic signed permutations and B_n.

The forward direction (`phi_plus`, wrapped by the four-case `capital_phi`)
rewrites the cycle word of a cyclic permutation of degree n+1 into a signed
permutation of degree n whose descents at 1..n-1 agree with the input; the
position-0 descent is repaired by `capital_phi`.  The reverse direction
(`psi_plus`, wrapped by the six-case `capital_psi_D` / `capital_psi_Dbar`)
undoes the rewriting.

Both rewriting passes work on a flat entry list whose cycle boundaries never
move.  A swap exchanges the magnitudes of two entries while each keeps its
sign, and only a constant number of image/descent slots change per swap, so
every repair step is O(1).

An optional TransferTrace records the intermediate states and swap events,
and additionally asserts the structural invariants of the rewriting (the
order properties of the working permutation at every loop boundary and the
swap properties of every completed swap batch).  Enabling the trace never
changes the output.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cycles import CycleNotation, SignedCycle
from .permutations import SignedPermutation
from .statistics import _descent_mask


@dataclass
class TransferTrace:
    """Recorded run of a transfer pass.

    iterations holds one (loop index, working snapshot, swap events) triple
    per outer-loop iteration; each swap event is (x, y, (pos_x, pos_y)) with
    the pre-swap entry values.  With enabled=False the trace is inert.
    """

    enabled: bool = True
    iterations: list = field(default_factory=list)

    def swap_count(self):
        return sum(len(sw) for _, _, sw in self.iterations)


def p_flag(pi: SignedPermutation, sigma: SignedPermutation, x: int, y: int) -> bool:
    """The swap trigger: |x-y| = 1 and min(x,y) in Des(pi) Delta Des(sigma),
    restricted to {1,...,n-1} where n is the degree of sigma."""
    n = sigma.n
    if pi.n != n + 1:
        raise ValueError(f"degrees {pi.n} and {n} are not consecutive")
    if x < 0 or y < 0:
        raise ValueError("magnitudes must be nonnegative")
    if abs(x - y) != 1:
        return False
    mn = min(x, y)
    if not 1 <= mn <= n - 1:
        return False
    delta = _descent_mask(pi.images) ^ _descent_mask(sigma.images)
    return delta >> mn & 1 == 1


def left_to_right_maxima(c: SignedCycle):
    """1-based positions of entries exceeding everything to their left."""
    out = []
    best = None
    for i, v in enumerate(c.entries, start=1):
        if best is None or v > best:
            out.append(i)
            best = v
    return out


def _cycle_word_big_last(pi: SignedPermutation):
    """Cycle word of a cyclic permutation, rotated so the +-n entry is last."""
    N = pi.n
    if N < 1:
        raise ValueError("need degree >= 1")
    images = pi.images
    w = []
    a = N
    while True:
        v = images[a - 1]
        w.append(v)
        a = -v if v < 0 else v
        if a == N:
            break
    if len(w) != N:
        raise ValueError(f"{pi} is not cyclic")
    return w


def _phi_plus_word(word, trace=None):
    """Run the cyclic-to-signed rewriting on a cycle word ending in +N.

    Returns the one-line images of the output as a list indexed 1..N-1
    (slot 0 unused).  The word is not modified.
    """
    N = len(word)
    n = N - 1
    if word[n] != N:
        raise ValueError("cycle word must end with its positive largest entry")

    # the input as a function on magnitudes, plus its descent flags 0..n-1
    pi_img = [0] * (N + 1)
    for p in range(n):
        pi_img[abs(word[p])] = word[p + 1]
    pi_img[N] = word[0]
    desP = [False] * n
    prev = 0
    for i in range(n):
        v = pi_img[i + 1]
        desP[i] = prev > v
        prev = v

    # split at left-to-right maxima; the final +N is dropped and each block
    # becomes one cycle of the working permutation
    ent = list(word[:n])
    starts = []
    best = None
    for p in range(n):
        v = ent[p]
        if best is None or v > best:
            starts.append(p)
            best = v
    m = len(starts)
    ends = [0] * m
    chunk_of = [0] * n
    for j in range(m):
        lo = starts[j]
        hi = starts[j + 1] if j + 1 < m else n
        ends[j] = hi - 1
        for p in range(lo, hi):
            chunk_of[p] = j

    pos_of = [0] * (n + 1)
    for p in range(n):
        pos_of[abs(ent[p])] = p
    sig = [0] * (n + 1)
    for j in range(m):
        lo, hi = starts[j], ends[j]
        for p in range(lo, hi):
            sig[abs(ent[p])] = ent[p + 1]
        sig[abs(ent[hi])] = ent[lo]
    desS = [False] * n
    prev = 0
    for i in range(n):
        v = sig[i + 1]
        desS[i] = prev > v
        prev = v

    ctx = None
    if trace is not None and trace.enabled:
        ctx = _PhiContext(trace, ent, starts, ends, chunk_of, pos_of, sig,
                          desS, desP, pi_img, n, m)

    for j in range(m):
        if ctx is not None:
            ctx.begin_iteration(j)
        jstart = starts[j]
        jend = ends[j]
        zv = ent[jend]
        zm = -zv if zv < 0 else zv

        # pick eps with the trigger true and the largest pi value at |z+eps|
        eps = 0
        best = 0
        for e in (-1, 1):
            t = zv + e
            tm = -t if t < 0 else t
            mn = tm if tm < zm else zm
            if 1 <= mn < n and (tm - zm == 1 or zm - tm == 1) and desP[mn] != desS[mn]:
                pv = pi_img[tm]
                if eps == 0:
                    eps, best = e, pv
                else:
                    # pi is injective on magnitudes, so no tie is possible
                    assert pv != best
                    if pv > best:
                        eps, best = e, pv
        if eps == 0:
            continue

        while True:
            zv = ent[jend]
            zm = -zv if zv < 0 else zv
            t = zv + eps
            tm = -t if t < 0 else t
            mn = tm if tm < zm else zm
            if not (1 <= mn < n and (tm - zm == 1 or zm - tm == 1)
                    and desP[mn] != desS[mn]):
                break
            if ctx is not None:
                ctx.begin_batch(j, zv, eps, pos_of[tm])

            x_mag, y_mag = zm, tm
            while True:
                d = x_mag - y_mag
                if d != 1 and d != -1:
                    break
                mn2 = y_mag if d == 1 else x_mag
                if not (1 <= mn2 < n) or desP[mn2] == desS[mn2]:
                    break
                xp = pos_of[x_mag]
                yp = pos_of[y_mag]
                xv = ent[xp]
                yv = ent[yp]
                if ctx is not None:
                    ctx.record_swap(xv, yv, xp, yp)
                ent[xp] = y_mag if xv > 0 else -y_mag
                ent[yp] = x_mag if yv > 0 else -x_mag
                pos_of[x_mag] = yp
                pos_of[y_mag] = xp
                cx = chunk_of[xp]
                pxp = ends[cx] if xp == starts[cx] else xp - 1
                cy = chunk_of[yp]
                pyp = ends[cy] if yp == starts[cy] else yp - 1
                for p in {xp, yp, pxp, pyp}:
                    cc = chunk_of[p]
                    q = starts[cc] if p == ends[cc] else p + 1
                    a = ent[p]
                    a = -a if a < 0 else a
                    sig[a] = ent[q]
                    f = a - 1
                    desS[f] = (sig[f] if f else 0) > sig[a]
                    if a < n:
                        desS[a] = sig[a] > sig[a + 1]
                if xp != jstart and yp != jstart:
                    nx = ent[pxp]
                    ny = ent[pyp]
                    x_mag = -nx if nx < 0 else nx
                    y_mag = -ny if ny < 0 else ny
                # otherwise x and y keep their magnitudes; the swap just
                # settled the descent between them, so the loop check fails

            if ctx is not None:
                ctx.end_batch(j)

    if ctx is not None:
        ctx.final_check()
    return sig


def phi_plus(pi: SignedPermutation, trace: TransferTrace | None = None) -> SignedPermutation:
    """The cyclic-to-signed map on the positive class (the +-largest entry
    must appear with a plus sign).  Output degree is one less than input."""
    word = _cycle_word_big_last(pi)
    if word[-1] != pi.n:
        raise ValueError(f"{pi} contains -{pi.n}; only the positive class is accepted")
    sig = _phi_plus_word(word, trace)
    return SignedPermutation(sig[1:])


def _capital_phi_word(word):
    """Four-case descent fixup over the raw rewriting; word ends with +-N.

    Returns the one-line image list (0-based) of the degree N-1 output.
    """
    N = len(word)
    n = N - 1
    last = word[-1]
    if last == N:
        res = _phi_plus_word(word)
    elif last == -N:
        res = _phi_plus_word([-v for v in word])
        for i in range(1, n + 1):
            res[i] = -res[i]
    else:
        raise ValueError("cycle word must end with its +-largest entry")
    if n == 0:
        return []
    pi1 = 0
    for p in range(N):
        v = word[p]
        if v == 1 or v == -1:
            pi1 = word[p + 1] if p + 1 < N else word[0]
            break
    if (pi1 < 0) != (res[1] < 0):
        # reattach the position-0 descent by flipping the image +-1
        for i in range(1, n + 1):
            v = res[i]
            if v == 1 or v == -1:
                res[i] = -v
                break
    return res[1:]


def capital_phi(pi: SignedPermutation) -> SignedPermutation:
    """Descent-preserving map from cyclic permutations of degree n+1 to B_n:
    descents at 0..n-1 are preserved exactly."""
    return SignedPermutation(_capital_phi_word(_cycle_word_big_last(pi)))


def _canonical_chunks(images):
    """Canonical cycles of a one-line image sequence, as one flat entry list
    plus the start index of each cycle."""
    n = len(images)
    visited = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if visited[start]:
            continue
        walk = []
        a = start
        while True:
            visited[a] = True
            v = images[a - 1]
            walk.append(v)
            a = -v if v < 0 else v
            if a == start:
                break
        entries = [walk[-1]] + walk[:-1]
        big = 0
        for i in range(1, len(entries)):
            if entries[i] > entries[big]:
                big = i
        cycles.append(entries[big:] + entries[:big])
    cycles.sort(key=lambda c: c[0])
    flat = []
    starts = []
    for c in cycles:
        starts.append(len(flat))
        flat.extend(c)
    return flat, starts


def _psi_plus_word(images, trace=None):
    """Run the signed-to-cyclic rewriting on one-line images of degree n.

    Returns the cycle word of the degree n+1 output, ending in +(n+1).
    """
    n = len(images)
    N = n + 1
    flat, starts = _canonical_chunks(images)
    m = len(starts)
    went = flat + [N]
    ends = [0] * m
    chunk_of = [0] * n
    for j in range(m):
        lo = starts[j]
        hi = starts[j + 1] if j + 1 < m else n
        ends[j] = hi - 1
        for p in range(lo, hi):
            chunk_of[p] = j
    pos_of = [0] * (n + 1)
    for p in range(n):
        pos_of[abs(went[p])] = p

    # fixed descent flags of the input
    desS = [False] * n
    prev = 0
    for i in range(n):
        v = images[i]
        desS[i] = prev > v
        prev = v
    # evolving big cycle as a function, with its descent flags 0..n-1
    pi_img = [0] * (N + 1)
    for p in range(N):
        pi_img[abs(went[p])] = went[p + 1] if p + 1 < N else went[0]
    desP = [False] * n
    prev = 0
    for i in range(n):
        v = pi_img[i + 1]
        desP[i] = prev > v
        prev = v

    rec = trace is not None and trace.enabled
    if rec:
        def snapshot():
            cycs = [SignedCycle(tuple(went[starts[k]:ends[k] + 1])) for k in range(m)]
            cycs.append(SignedCycle((N,)))
            return CycleNotation(N, cycs)

    for j in range(m - 2, -1, -1):
        swaps = []
        if rec:
            trace.iterations.append((j + 1, snapshot(), swaps))
        jstart = starts[j]
        jend = ends[j]
        zv = went[jend]
        zm = -zv if zv < 0 else zv

        # mirror choice: the trigger must hold and the pi value be smallest
        eps = 0
        best = 0
        for e in (-1, 1):
            t = zv + e
            tm = -t if t < 0 else t
            mn = tm if tm < zm else zm
            if 1 <= mn < n and (tm - zm == 1 or zm - tm == 1) and desP[mn] != desS[mn]:
                pv = pi_img[tm]
                if eps == 0:
                    eps, best = e, pv
                else:
                    assert pv != best
                    if pv < best:
                        eps, best = e, pv
        if eps == 0:
            continue

        while True:
            zv = went[jend]
            zm = -zv if zv < 0 else zv
            t = zv + eps
            tm = -t if t < 0 else t
            mn = tm if tm < zm else zm
            if not (1 <= mn < n and (tm - zm == 1 or zm - tm == 1)
                    and desP[mn] != desS[mn]):
                break

            x_mag, y_mag = zm, tm
            while True:
                d = x_mag - y_mag
                if d != 1 and d != -1:
                    break
                mn2 = y_mag if d == 1 else x_mag
                if not (1 <= mn2 < n) or desP[mn2] == desS[mn2]:
                    break
                xp = pos_of[x_mag]
                yp = pos_of[y_mag]
                xv = went[xp]
                yv = went[yp]
                if rec:
                    assert abs(abs(xv) - abs(yv)) == 1
                    swaps.append((xv, yv, (xp, yp)))
                went[xp] = y_mag if xv > 0 else -y_mag
                went[yp] = x_mag if yv > 0 else -x_mag
                pos_of[x_mag] = yp
                pos_of[y_mag] = xp
                # refresh the big-cycle images around the rewritten slots
                for p in {xp, yp, xp - 1 if xp else N - 1, yp - 1 if yp else N - 1}:
                    a = went[p]
                    a = -a if a < 0 else a
                    pi_img[a] = went[p + 1] if p + 1 < N else went[0]
                    if a <= n:
                        f = a - 1
                        desP[f] = (pi_img[f] if f else 0) > pi_img[a]
                        if a < n:
                            desP[a] = pi_img[a] > pi_img[a + 1]
                cx = chunk_of[xp]
                pxp = ends[cx] if xp == starts[cx] else xp - 1
                cy = chunk_of[yp]
                pyp = ends[cy] if yp == starts[cy] else yp - 1
                if xp != jstart and yp != jstart:
                    nx = went[pxp]
                    ny = went[pyp]
                    x_mag = -nx if nx < 0 else nx
                    y_mag = -ny if ny < 0 else ny

    return went


def psi_plus(sigma: SignedPermutation, trace: TransferTrace | None = None) -> SignedPermutation:
    """The signed-to-cyclic map: inverse of phi_plus, landing in the positive
    class of cyclic permutations one degree up."""
    went = _psi_plus_word(sigma.images, trace)
    N = len(went)
    img = [0] * (N + 1)
    for p in range(N):
        img[abs(went[p])] = went[p + 1] if p + 1 < N else went[0]
    return SignedPermutation(img[1:])


def capital_psi_D(sigma: SignedPermutation) -> SignedPermutation:
    """Inverse of the descent-preserving map restricted to cyclic permutations
    with an even number of negative entries."""
    s1 = sigma.images[0] if sigma.n else 0
    even = sigma.negative_count() % 2 == 0
    if s1 == 1:
        pick = sigma if even else sigma.times_neg1()
        return psi_plus(pick)
    if s1 == -1:
        pick = sigma.times_neg1() if even else sigma
        return psi_plus(pick.negate_all()).negate_all()
    if even:
        return psi_plus(sigma)
    return psi_plus(sigma.negate_all()).negate_all()


def capital_psi_Dbar(sigma: SignedPermutation) -> SignedPermutation:
    """Inverse of the descent-preserving map restricted to cyclic permutations
    with an odd number of negative entries."""
    s1 = sigma.images[0] if sigma.n else 0
    even = sigma.negative_count() % 2 == 0
    if s1 == 1:
        pick = sigma.times_neg1() if even else sigma
        return psi_plus(pick)
    if s1 == -1:
        pick = sigma if even else sigma.times_neg1()
        return psi_plus(pick.negate_all()).negate_all()
    if even:
        return psi_plus(sigma.negate_all()).negate_all()
    return psi_plus(sigma)


def preimage_quadruple(sigma: SignedPermutation):
    """The four candidate preimages of {sigma, (-1)sigma} under the
    descent-preserving map, one in each of the four sign/parity classes."""
    neg1 = sigma.times_neg1()
    return (
        psi_plus(sigma),
        psi_plus(neg1),
        psi_plus(sigma.negate_all()).negate_all(),
        psi_plus(neg1.negate_all()).negate_all(),
    )


class _PhiContext:
    """Structural checks for the instrumented forward rewriting.

    Asserts, at the start of every outer-loop iteration and after every swap
    batch, the order properties of the working permutation, and for every
    batch the locality and descent-effect properties of its swaps.
    """

    def __init__(self, trace, ent, starts, ends, chunk_of, pos_of, sig, desS,
                 desP, pi_img, n, m):
        self.trace = trace
        self.ent = ent
        self.starts = starts
        self.ends = ends
        self.chunk_of = chunk_of
        self.pos_of = pos_of
        self.sig = sig
        self.desS = desS
        self.desP = desP
        self.pi_img = pi_img
        self.n = n
        self.m = m
        self.init_ent = tuple(ent)
        self.init_first = [ent[p] for p in starts]
        self.touched = [False] * n
        self.cur_swaps = []
        self.batch = None
        self.batches_this_iter = 0

    def _snapshot(self):
        cycs = [
            SignedCycle(tuple(self.ent[self.starts[k]:self.ends[k] + 1]))
            for k in range(self.m)
        ]
        return CycleNotation(self.n, cycs)

    def begin_iteration(self, j):
        self.cur_swaps = []
        self.trace.iterations.append((j + 1, self._snapshot(), self.cur_swaps))
        self.batches_this_iter = 0
        self.check_order(j)

    def begin_batch(self, j, zv, eps, y_pos):
        if self.batches_this_iter:
            # the start of every later round of the outer loop is a boundary
            self.check_order(j)
        self.batches_this_iter += 1
        self.batch = {
            "z": zv,
            "eps": eps,
            "first_y": y_pos,
            "ent0": list(self.ent),
            "sig0": list(self.sig),
            "desS0": list(self.desS),
            "affected": set(),
            "swaps": [],
        }

    def record_swap(self, xv, yv, xp, yp):
        assert abs(abs(xv) - abs(yv)) == 1, "swap magnitudes must be adjacent"
        self.cur_swaps.append((xv, yv, (xp, yp)))
        b = self.batch
        b["affected"].update((xp, yp))
        b["swaps"].append((xp, yp))
        self.touched[xp] = True
        self.touched[yp] = True

    def end_batch(self, j):
        b = self.batch
        n, m = self.n, self.m
        chunk_of, ends = self.chunk_of, self.ends
        affected = b["affected"]

        # (I) each swap joins the current cycle to one on its right
        for xp, yp in b["swaps"]:
            cs = {chunk_of[xp], chunk_of[yp]}
            assert j in cs and max(cs) > j, f"swap {xp},{yp} not between cycle {j} and a later one"

        # (II) last entries of later cycles survive, and nothing right of the
        # first partner moves
        for k in range(j + 1, m):
            assert ends[k] not in affected, f"last entry of cycle {k} was swapped"
        for q in affected:
            assert q <= b["first_y"], "swap reached right of the first partner"

        # (III) entries whose image reaches the next cycle's leader survive
        if j + 1 < m:
            first_val = b["ent0"][self.starts[j + 1]]
            for p in range(n):
                if b["sig0"][abs(b["ent0"][p])] >= first_val:
                    assert p not in affected, f"large entry at {p} was swapped"

        # (IV) the cumulative effect on the descent mismatches
        desP, desS0, desS1 = self.desP, b["desS0"], self.desS
        delta0 = {d for d in range(1, n) if desP[d] != desS0[d]}
        delta1 = {d for d in range(1, n) if desP[d] != desS1[d]}
        z, eps = b["z"], b["eps"]
        d0 = min(abs(z), abs(z + eps))
        assert d0 in delta0 and d0 not in delta1, "target descent not settled"
        d1 = min(abs(z), abs(z - eps))
        if 1 <= d1 <= n - 1:
            assert d1 not in delta1, "descent behind z not settled"
        d2 = min(abs(z + eps), abs(z + 2 * eps))
        d2_ok = 1 <= d2 <= n - 1
        if d2_ok:
            if d2 in delta0:
                assert d2 not in delta1, "descent ahead of the partner not settled"
            elif b["sig0"][abs(z + 2 * eps)] > b["sig0"][abs(z + eps)]:
                assert d2 not in delta1, "descent ahead of the partner introduced"
        introduced = delta1 - delta0
        assert introduced <= ({d2} if d2_ok else set()), f"stray descents {introduced}"
        self.batch = None

    def check_order(self, j):
        ent, sig, pi_img = self.ent, self.sig, self.pi_img
        starts, ends, chunk_of = self.starts, self.ends, self.chunk_of
        n, m = self.n, self.m

        # (A) entries of each cycle keep their original relative order
        for k in range(m):
            lo, hi = starts[k], ends[k]
            for p in range(lo, hi + 1):
                for q in range(p + 1, hi + 1):
                    assert (ent[p] < ent[q]) == (self.init_ent[p] < self.init_ent[q]), \
                        f"relative order broken in cycle {k}"

        # (B) cycle leaders increase and dominate everything before them
        for k in range(m):
            if k:
                assert ent[starts[k]] > ent[starts[k - 1]], "cycle leaders out of order"
            assert ent[starts[k]] == max(ent[: ends[k] + 1]), \
                f"leader of cycle {k} not dominant"

        # (C) the image order against later leaders pins down untouched entries
        for k in range(j + 1, m):
            pk1 = self.init_first[k]
            sk1 = ent[starts[k]]
            for p in range(n):
                x = ent[p]
                a = -x if x < 0 else x
                lhs = pi_img[a] > pk1
                rhs = sig[a] >= sk1
                assert lhs == rhs, f"image-order mismatch at entry {x} vs cycle {k}"
                if lhs:
                    assert (sig[a] == sk1) == (p == ends[k]), \
                        "equality must mark the last entry"
                    assert not self.touched[p], f"swapped entry {x} claims exemption"

        # (D) every descent mismatch is an adjacent last/non-last pair
        desP, desS = self.desP, self.desS
        for d in range(1, n):
            if desP[d] == desS[d]:
                continue
            pd = self.pos_of[d]
            pd1 = self.pos_of[d + 1]
            last_d = pd == ends[chunk_of[pd]] and chunk_of[pd] >= j
            last_d1 = pd1 == ends[chunk_of[pd1]] and chunk_of[pd1] >= j
            assert last_d != last_d1, f"mismatch {d}: need exactly one trailing entry"
            xpos, opos = (pd, pd1) if last_d else (pd1, pd)
            assert chunk_of[opos] > chunk_of[xpos], f"mismatch {d}: partner not to the right"
            assert opos != ends[chunk_of[opos]], f"mismatch {d}: partner trails its cycle"
            xm = abs(ent[xpos])
            om = abs(ent[opos])
            assert pi_img[xm] > pi_img[om], f"mismatch {d}: input images not descending"
            assert sig[xm] < sig[om], f"mismatch {d}: working images not ascending"

    def final_check(self):
        self.check_order(self.m)
        self.batch = None
