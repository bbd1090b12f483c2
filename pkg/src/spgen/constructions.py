"""Explicit nilpotent generator pairs for sp_2n and their supporting objects."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from spgen.exactnum import CycloElement
from spgen.linalg import LinAlgError, Mat, commutator, mat_inv
from spgen.sp_lie import SpContext, is_member, is_nilpotent, make_context

TAGS = ("lemma3", "example1", "prop3")


@dataclass(frozen=True)
class GeneratorPair:
    n: int
    x: Mat
    y: Mat
    tag: str
    t: Mat | None = None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "tag": self.tag,
            "x": self.x.to_json(),
            "y": self.y.to_json(),
            "t": None if self.t is None else self.t.to_json(),
        }

    @classmethod
    def from_json(cls, data, where: str = "$") -> "GeneratorPair":
        if not isinstance(data, dict):
            raise ValueError(f"{where}: expected a pair object")
        for key in ("n", "x", "y"):
            if key not in data:
                raise ValueError(f"{where}: missing key {key!r}")
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"{where}.n: expected a positive integer")
        tag = data.get("tag", "custom")
        if not isinstance(tag, str):
            raise ValueError(f"{where}.tag: expected a string")
        t = data.get("t")
        return cls(
            n=n,
            x=Mat.from_json(data["x"], f"{where}.x"),
            y=Mat.from_json(data["y"], f"{where}.y"),
            tag=tag,
            t=None if t is None else Mat.from_json(t, f"{where}.t"),
        )


def _E(size: int, i: int, j: int) -> Mat:
    return Mat.unit(size, i - 1, j - 1)


def regular_nilpotent(n: int) -> Mat:
    """Sum of the simple root vectors."""
    out = Mat.zeros(2 * n)
    for v in make_context(n).roots.simple:
        out = out + v
    return out


def lemma3_T(n: int) -> Mat:
    """``(-1)^(n-1) E_{n+1,1}`` plus the simple root vectors; ``T^(2n) = I``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return regular_nilpotent(n) + _E(2 * n, n + 1, 1) * (-1) ** (n - 1)


def lemma3_pair(n: int) -> GeneratorPair:
    """Lowest root vector ``E_{n+1,1}`` with the regular nilpotent."""
    x = _E(2 * n, n + 1, 1)
    return GeneratorPair(n=n, x=x, y=regular_nilpotent(n), tag="lemma3", t=lemma3_T(n))


def example1_pair(n: int) -> GeneratorPair:
    pair = lemma3_pair(n)
    return GeneratorPair(n=n, x=pair.x, y=pair.y, tag="example1", t=pair.t)


def negative_simple_sum(n: int, weights: Sequence) -> Mat:
    """``sum_i weights[i] * v_{-alpha_i}`` over the negative simple root vectors."""
    if len(weights) != n:
        raise ValueError(f"expected {n} weights, got {len(weights)}")
    out = Mat.zeros(2 * n)
    for w, v in zip(weights, make_context(n).roots.negative_simple):
        out = out + v * w
    return out


def _support_coeffs(x: Mat, vectors: Sequence[Mat]) -> list[Fraction] | None:
    """Coefficients of ``x`` in the given root vectors, or None if outside their span."""
    coeffs = []
    for v in vectors:
        i, j = next((i, j) for i in range(v.rows) for j in range(v.cols) if v[i, j])
        coeffs.append(x[i, j] / v[i, j])
    rebuilt = Mat.zeros(x.rows)
    for c, v in zip(coeffs, vectors):
        rebuilt = rebuilt + v * c
    return coeffs if rebuilt == x else None


def simple_root_values(ctx: SpContext, t: Mat) -> list[Fraction]:
    """Values of the simple roots on a diagonal member ``t``."""
    d = t.diagonal()
    n = ctx.n
    return [d[i] - d[i + 1] for i in range(n - 1)] + [2 * d[n - 1]]


def prop3_condition_check(ctx: SpContext, N: Mat, M: Mat) -> bool:
    """Do the simple roots take pairwise distinct nonzero values on ``[N, M]``?"""
    for name, mat, vecs in (("N", N, ctx.roots.simple),
                            ("M", M, ctx.roots.negative_simple)):
        coeffs = _support_coeffs(mat, vecs)
        if coeffs is None or not all(coeffs):
            raise ValueError(f"{name} is not a full-support sum of "
                             f"{'simple' if name == 'N' else 'negative simple'} root vectors")
    t = commutator(N, M)
    if not t.is_diagonal():
        raise ValueError("pair does not bracket to Cartan")
    values = simple_root_values(ctx, t)
    return all(values) and len(set(values)) == len(values)


def example2_weights(n: int) -> list[int]:
    return [3 ** i for i in range(1, n + 1)]


def example2_diagonal(weights: Sequence) -> list:
    """``diag(a_1, a_2 - a_1, ..., a_n - a_{n-1}, -a_1, ..., a_{n-1} - a_n)``."""
    n = len(weights)
    top = [weights[0]] + [weights[i] - weights[i - 1] for i in range(1, n)]
    return top + [-v for v in top]


def prop3_pair(n: int, weights: Sequence | None = None) -> GeneratorPair:
    """Regular nilpotent ``N`` with a weighted negative simple sum ``M``.

    Default weights are ``3**i``; any weights passing
    :func:`prop3_condition_check` are accepted.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if weights is None:
        weights = example2_weights(n)
    N = regular_nilpotent(n)
    M = negative_simple_sum(n, weights)
    if not prop3_condition_check(make_context(n), N, M):
        raise ValueError("weights give repeated or zero simple root values")
    return GeneratorPair(n=n, x=N, y=M, tag="prop3", t=commutator(N, M))


def construct(tag: str, n: int) -> GeneratorPair:
    try:
        builder = {"lemma3": lemma3_pair, "example1": example1_pair,
                   "prop3": prop3_pair}[tag]
    except KeyError:
        raise ValueError(f"unknown construction {tag!r}") from None
    return builder(n)


def lemma3_eigenvector(n: int, power: int) -> list[CycloElement]:
    """Eigenvector of ``lemma3_T(n)`` for the eigenvalue ``xi^power``, xi of order 2n."""
    m = 2 * n
    lam = CycloElement.xi(m, power)
    top = [lam ** i for i in range(n)]
    bottom = [lam ** (-j) * (-1) ** (n + j) for j in range(1, n + 1)]
    return top + bottom


@dataclass
class ConjugationReport:
    n: int
    invertible: bool
    diagonalizes: bool
    off_diagonal_nonzero: bool
    diagonal: Mat | None

    @property
    def ok(self) -> bool:
        return self.invertible and self.diagonalizes and self.off_diagonal_nonzero

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "invertible": self.invertible,
            "diagonalizes": self.diagonalizes,
            "off_diagonal_nonzero": self.off_diagonal_nonzero,
            "diagonal": None if self.diagonal is None else self.diagonal.to_json(),
        }


def verify_lemma3_conjugation(n: int) -> ConjugationReport:
    """Diagonalize ``lemma3_T(n)`` over Q(xi_2n) and inspect ``C^-1 E_{n+1,1} C``.

    Columns of ``C`` are the explicit eigenvectors for ``xi^0, ..., xi^(2n-1)``.
    """
    m = 2 * n
    columns = [lemma3_eigenvector(n, k) for k in range(m)]
    C = Mat(zip(*columns))
    try:
        Cinv = mat_inv(C)
    except LinAlgError:
        return ConjugationReport(n, False, False, False, None)
    D = Cinv @ lemma3_T(n) @ C
    roots = [CycloElement.xi(m, k) for k in range(m)]
    seen = []
    if D.is_diagonal():
        for d in D.diagonal():
            seen.extend(k for k, r in enumerate(roots) if r == d)
    diagonalizes = D.is_diagonal() and sorted(seen) == list(range(m))
    X = Cinv @ _E(m, n + 1, 1) @ C
    off = all(X[i, j] for i in range(m) for j in range(m) if i != j)
    return ConjugationReport(n, True, diagonalizes, off, D)


def check_pair(pair: GeneratorPair) -> None:
    """Raise ``ValueError`` unless both elements are nilpotent members."""
    ctx = make_context(pair.n)
    for name, v in (("x", pair.x), ("y", pair.y)):
        if not is_member(ctx, v):
            raise ValueError(f"{name} is not in sp_{2 * pair.n}")
        if not is_nilpotent(v):
            raise ValueError(f"{name} is not nilpotent")
