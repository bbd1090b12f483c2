"""The symplectic Lie algebra sp_2n in its defining representation.

Matrices use the form ``Omega = [[0, I], [-I, 0]]``, so a member has block
shape ``[[A, B], [C, -A^T]]`` with ``B`` and ``C`` symmetric.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from spgen.linalg import Mat, commutator, exp_nilpotent, mat_inv


def _E(size: int, i: int, j: int) -> Mat:
    # 1-based matrix unit, matching the usual E_{ij} notation
    return Mat.unit(size, i - 1, j - 1)


@dataclass(frozen=True)
class RootData:
    """Chevalley-style root vectors for the diagonal Cartan subalgebra."""

    simple: tuple[Mat, ...]
    negative_simple: tuple[Mat, ...]
    highest: Mat
    lowest: Mat
    positive: tuple[Mat, ...]
    negative: tuple[Mat, ...]

    @property
    def generators(self) -> tuple[Mat, ...]:
        """Nilpotent standard generators used to build random conjugators."""
        return self.simple + self.negative_simple + (self.highest, self.lowest)


def _root_data(n: int) -> RootData:
    s = 2 * n
    simple = [_E(s, i, i + 1) - _E(s, n + i + 1, n + i) for i in range(1, n)]
    simple.append(_E(s, n, 2 * n))
    neg_simple = [_E(s, i + 1, i) - _E(s, n + i, n + i + 1) for i in range(1, n)]
    neg_simple.append(_E(s, 2 * n, n))

    positive, negative = [], []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            positive.append(_E(s, i, j) - _E(s, n + j, n + i))
            negative.append(_E(s, j, i) - _E(s, n + i, n + j))
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if i == j:
                positive.append(_E(s, i, n + i))
                negative.append(_E(s, n + i, i))
            else:
                positive.append(_E(s, i, n + j) + _E(s, j, n + i))
                negative.append(_E(s, n + i, j) + _E(s, n + j, i))
    return RootData(
        simple=tuple(simple),
        negative_simple=tuple(neg_simple),
        highest=_E(s, 1, n + 1),
        lowest=_E(s, n + 1, 1),
        positive=tuple(positive),
        negative=tuple(negative),
    )


@dataclass(frozen=True)
class SpContext:
    n: int
    omega: Mat
    basis: tuple[Mat, ...]
    roots: RootData

    @property
    def size(self) -> int:
        return 2 * self.n

    @property
    def dim(self) -> int:
        return self.n * (2 * self.n + 1)

    def from_coords(self, coords) -> Mat:
        out = Mat.zeros(self.size)
        for c, b in zip(coords, self.basis):
            if c:
                out = out + b * c
        return out

    def root_vectors(self) -> tuple[Mat, ...]:
        """All 2n^2 root vectors, positive ones first."""
        return self.roots.positive + self.roots.negative


@lru_cache(maxsize=None)
def make_context(n: int) -> SpContext:
    if n < 1:
        raise ValueError("n must be >= 1")
    s = 2 * n
    omega = Mat([[1 if j == i + n else -1 if i == j + n else 0 for j in range(s)]
                 for i in range(s)])
    basis = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            basis.append(_E(s, i, j) - _E(s, n + j, n + i))
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            basis.append(_E(s, i, n + i) if i == j else _E(s, i, n + j) + _E(s, j, n + i))
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            basis.append(_E(s, n + i, i) if i == j else _E(s, n + i, j) + _E(s, n + j, i))
    return SpContext(n=n, omega=omega, basis=tuple(basis), roots=_root_data(n))


def _check_size(ctx: SpContext, x: Mat) -> None:
    if x.shape != (ctx.size, ctx.size):
        raise ValueError(f"expected a {ctx.size}x{ctx.size} matrix, got {x.rows}x{x.cols}")


def is_member(ctx: SpContext, x: Mat) -> bool:
    """True iff ``x^T Omega + Omega x == 0``."""
    _check_size(ctx, x)
    return (x.T @ ctx.omega + ctx.omega @ x).is_zero()


def coords(ctx: SpContext, x: Mat) -> list[Fraction]:
    """Coordinates of a member in the standard basis of ``ctx``."""
    if not is_member(ctx, x):
        raise ValueError("matrix is not in sp_2n")
    n = ctx.n
    out = [x[i, j] for i in range(n) for j in range(n)]
    out += [x[i, n + j] for i in range(n) for j in range(i, n)]
    out += [x[n + i, j] for i in range(n) for j in range(i, n)]
    return out


def is_nilpotent(x: Mat) -> bool:
    if not x.is_square:
        raise ValueError("nilpotency needs a square matrix")
    return (x ** x.rows).is_zero()


def ad_matrix(ctx: SpContext, x: Mat) -> Mat:
    """Matrix of ``y -> [x, y]`` in the standard basis coordinates."""
    if not is_member(ctx, x):
        raise ValueError("matrix is not in sp_2n")
    cols = [coords(ctx, commutator(x, b)) for b in ctx.basis]
    return Mat(zip(*cols))


def random_symplectic(ctx: SpContext, rng: random.Random, k: int, bound: int) -> Mat:
    """Product of ``k`` factors ``exp(c z)`` with ``z`` a random root generator.

    ``c`` is uniform in ``[-bound, bound]``.  ``k == 0`` gives the identity.
    """
    if k < 0 or bound < 1:
        raise ValueError("need k >= 0 and bound >= 1")
    gens = ctx.roots.generators
    g = Mat.identity(ctx.size)
    for _ in range(k):
        z = gens[rng.randrange(len(gens))]
        c = rng.randint(-bound, bound)
        g = g @ exp_nilpotent(z * c)
    return g


def conjugate(g: Mat, x: Mat) -> Mat:
    """``g x g^-1``."""
    if g.shape != x.shape:
        raise ValueError(f"shape mismatch {g.shape} vs {x.shape}")
    return g @ x @ mat_inv(g)


def is_symplectic(ctx: SpContext, g: Mat) -> bool:
    _check_size(ctx, g)
    return g.T @ ctx.omega @ g == ctx.omega


def random_nilpotent(ctx: SpContext, rng: random.Random, terms: int = 2,
                     coeff_bound: int = 3, k: int = 4, bound: int = 2) -> Mat:
    """A random nonzero nilpotent member: a conjugated positive-root combination.

    A combination of positive root vectors is strictly upper triangular in
    the Borel sense, hence nilpotent; conjugation keeps it nilpotent.
    """
    pos = ctx.roots.positive
    while True:
        x = Mat.zeros(ctx.size)
        for _ in range(terms):
            c = rng.randint(-coeff_bound, coeff_bound)
            x = x + pos[rng.randrange(len(pos))] * c
        if not x.is_zero():
            break
    return conjugate(random_symplectic(ctx, rng, k, bound), x)
