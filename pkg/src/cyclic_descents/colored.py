"""Colored permutations: pairs (omega, tau) with r colors per position.

A colored value is the pair (color, magnitude) and values are ordered
lexicographically by that key, so color-0 values come first; no root of
unity is ever materialized.  Descents live in {1,...,n} with position n
compared against a fixed point n+1 of color 0.

The transfer map to and from cyclic colored permutations acts through the
unsigned rewriting on omega and carries the colors along: the removed
position's color is folded into the total so each fixed-color class maps
bijectively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classic import phi_classic
from .permutations import SignedPermutation
from .transfer import _psi_plus_word


@dataclass(frozen=True)
class ColoredPermutation:
    n: int
    r: int
    omega: tuple
    tau: tuple

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("need at least one color")
        if len(self.omega) != self.n or len(self.tau) != self.n:
            raise ValueError("omega and tau must have length n")
        if sorted(self.omega) != list(range(1, self.n + 1)):
            raise ValueError(f"{self.omega} is not a permutation of [{self.n}]")
        if any(not 0 <= c < self.r for c in self.tau):
            raise ValueError(f"colors must lie in 0..{self.r - 1}")

    def __str__(self):
        parts = [
            f"{w}^{c}" if c else str(w)
            for w, c in zip(self.omega, self.tau)
        ]
        return "[" + ",".join(parts) + "]"


def colored_descent_set(p: ColoredPermutation):
    """Descent positions in {1,...,n}; position n descends when its color
    is nonzero (the fixed point n+1 carries color 0)."""
    n = p.n
    out = set()
    for i in range(1, n):
        if (p.tau[i - 1], p.omega[i - 1]) > (p.tau[i], p.omega[i]):
            out.add(i)
    if n and p.tau[n - 1] != 0:
        out.add(n)
    return out


def colored_stats(p: ColoredPermutation):
    """(des, maj, col, fmaj): des counts every descent, maj sums only those
    in [n-1], col adds the colors as plain integers, fmaj = r*maj + col."""
    des_set = colored_descent_set(p)
    des = len(des_set)
    maj = sum(i for i in des_set if i <= p.n - 1)
    col = sum(p.tau)
    return des, maj, col, p.r * maj + col


def color_of(p: ColoredPermutation) -> int:
    """Total color modulo r."""
    return sum(p.tau) % p.r


def is_cyclic_colored(p: ColoredPermutation) -> bool:
    """Colors never affect the cycle structure, so test omega alone."""
    n = p.n
    if n == 0:
        raise ValueError("degree 0 has no cycle")
    seen = 1
    a = p.omega[0]
    while a != 1:
        a = p.omega[a - 1]
        seen += 1
    return seen == n


def colored_phi(p: ColoredPermutation) -> ColoredPermutation:
    """Descent-preserving map from cyclic colored permutations of degree n+1
    to degree n: rewrite omega, keep the first n colors.  Descents in
    {1,...,n-1} are preserved; each fixed-color class maps bijectively."""
    if not is_cyclic_colored(p):
        raise ValueError(f"{p} is not cyclic")
    omega = phi_classic(SignedPermutation(list(p.omega)))
    return ColoredPermutation(p.n - 1, p.r, tuple(omega.images), p.tau[:-1])


def colored_psi(p: ColoredPermutation, target_color: int) -> ColoredPermutation:
    """Inverse of colored_phi onto the cyclic class of the given total color:
    lift omega one degree up and give the new position the color that brings
    the total to target_color."""
    r = p.r
    if not 0 <= target_color < r:
        raise ValueError(f"target color must lie in 0..{r - 1}")
    went = _psi_plus_word(list(p.omega))
    N = len(went)
    img = [0] * N
    for q in range(N):
        img[went[q] - 1] = went[(q + 1) % N]
    last = (target_color - sum(p.tau)) % r
    return ColoredPermutation(N, r, tuple(img), p.tau + (last,))
