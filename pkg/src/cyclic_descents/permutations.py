"""Signed permutations and their group operations.

A signed permutation of degree n is a bijection s on {-n,...,-1,1,...,n}
with s(-i) = -s(i).  Only the images of 1..n are stored; the hyperoctahedral
group of all such bijections is written B_n, and D_n is the subgroup whose
one-line notation contains an even number of negative entries.
"""

from __future__ import annotations


def sgn(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


class SignedPermutation:
    """Immutable signed permutation stored as a tuple of images of 1..n.

    Degree 0 (the empty permutation) is allowed and acts as the identity
    of the trivial group.
    """

    __slots__ = ("images", "n")

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        seen = [False] * (n + 1)
        for v in images:
            if not isinstance(v, int):
                raise TypeError(f"image {v!r} is not an integer")
            a = abs(v)
            if a < 1 or a > n:
                raise ValueError(f"image {v} out of range for degree {n}")
            if seen[a]:
                raise ValueError(f"magnitude {a} repeated in {images}")
            seen[a] = True
        self.images = images
        self.n = n

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    def __call__(self, i):
        """Apply to any i with 1 <= |i| <= n, honoring s(-i) = -s(i)."""
        a = abs(i)
        if a < 1 or a > self.n:
            raise ValueError(f"argument {i} out of range for degree {self.n}")
        v = self.images[a - 1]
        return v if i > 0 else -v

    def __mul__(self, other):
        """Composition self*other, applied right to left."""
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} != {other.n}")
        return SignedPermutation(self(v) for v in other.images)

    def inverse(self):
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            if v > 0:
                inv[v - 1] = i
            else:
                inv[-v - 1] = -i
        return SignedPermutation(inv)

    def negate_all(self):
        """Left-multiply by [-1,-2,...,-n]: negate every image."""
        return SignedPermutation(-v for v in self.images)

    def times_neg1(self):
        """Left-multiply by [-1,2,...,n]: flip the sign of the image +-1."""
        return SignedPermutation(-v if abs(v) == 1 else v for v in self.images)

    def negative_count(self):
        return sum(1 for v in self.images if v < 0)

    def in_D(self):
        return self.negative_count() % 2 == 0

    def __eq__(self, other):
        return isinstance(other, SignedPermutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"SignedPermutation({list(self.images)})"

    def __str__(self):
        return "[" + ",".join(str(v) for v in self.images) + "]"


def apply(sigma: SignedPermutation, i: int) -> int:
    return sigma(i)


def compose(pi: SignedPermutation, sigma: SignedPermutation) -> SignedPermutation:
    """Composition pi*sigma: the result maps i to pi(sigma(i))."""
    return pi * sigma


def inverse(sigma: SignedPermutation) -> SignedPermutation:
    return sigma.inverse()


def negate_all(pi: SignedPermutation) -> SignedPermutation:
    return pi.negate_all()


def times_neg1(sigma: SignedPermutation) -> SignedPermutation:
    return sigma.times_neg1()


def parity_info(sigma: SignedPermutation):
    """Return (negative_count, in_D)."""
    neg = sigma.negative_count()
    return neg, neg % 2 == 0
