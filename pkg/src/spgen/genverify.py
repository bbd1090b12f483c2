"""Generation of sp_2n by bracket closure, with portable certificates."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from spgen._backend import kernels
from spgen.exactnum import Poly, poly_gcd
from spgen.linalg import Mat, SpanBasis, charpoly, commutator, rank, span_insert
from spgen.sp_lie import SpContext, ad_matrix, coords, is_member, make_context

# A word is a generator index or a pair (left, right) meaning [left, right].
Word = Union[int, tuple]


@dataclass
class ClosureResult:
    basis: SpanBasis
    words: list
    bound: int | None = None

    @property
    def dimension(self) -> int:
        return self.basis.rank

    @property
    def generated(self) -> bool:
        return self.bound is not None and self.dimension == self.bound


@dataclass
class Certificate:
    """Bracket words whose values span sp_2n."""

    n: int
    generators: list[Mat]
    words: list
    dimension: int = field(default=-1)

    def __post_init__(self):
        if self.dimension < 0:
            self.dimension = self.n * (2 * self.n + 1)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "generators": [g.to_json() for g in self.generators],
            "words": [word_to_json(w) for w in self.words],
            "dimension": self.dimension,
        }

    @classmethod
    def from_json(cls, data, where: str = "$") -> "Certificate":
        if not isinstance(data, dict):
            raise ValueError(f"{where}: expected a certificate object")
        for key in ("n", "generators", "words", "dimension"):
            if key not in data:
                raise ValueError(f"{where}: missing key {key!r}")
        n, dim = data["n"], data["dimension"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"{where}.n: expected a positive integer")
        if not isinstance(dim, int) or isinstance(dim, bool):
            raise ValueError(f"{where}.dimension: expected an integer")
        gens = data["generators"]
        if not isinstance(gens, list):
            raise ValueError(f"{where}.generators: expected a list")
        words = data["words"]
        if not isinstance(words, list):
            raise ValueError(f"{where}.words: expected a list")
        return cls(
            n=n,
            generators=[Mat.from_json(g, f"{where}.generators[{i}]")
                        for i, g in enumerate(gens)],
            words=[word_from_json(w, f"{where}.words[{i}]") for i, w in enumerate(words)],
            dimension=dim,
        )


def word_to_json(w: Word):
    if isinstance(w, int):
        return w
    return [word_to_json(w[0]), word_to_json(w[1])]


def word_from_json(data, where: str = "$") -> Word:
    if isinstance(data, int) and not isinstance(data, bool):
        if data < 0:
            raise ValueError(f"{where}: negative generator index")
        return data
    if isinstance(data, list) and len(data) == 2:
        return (word_from_json(data[0], f"{where}[0]"),
                word_from_json(data[1], f"{where}[1]"))
    raise ValueError(f"{where}: a word is an integer or a two-element list")


def evaluate_word(word: Word, generators: Sequence[Mat], cache: dict | None = None) -> Mat:
    if cache is None:
        cache = {}
    if word in cache:
        return cache[word]
    if isinstance(word, int):
        if not 0 <= word < len(generators):
            raise IndexError(f"generator index {word} out of range")
        value = generators[word]
    else:
        value = commutator(evaluate_word(word[0], generators, cache),
                           evaluate_word(word[1], generators, cache))
    cache[word] = value
    return value


def bracket_closure(gens: Sequence[Mat], size: int | None = None,
                    bound: int | None = None) -> ClosureResult:
    """Basis and words for the Lie subalgebra generated by ``gens``.

    Elements are processed in insertion order; element ``a`` is bracketed
    with every earlier element ``b`` as ``[b, a]``, generators first.  Every
    pair is therefore tried exactly once.  Coordinates are the flattened
    ``size**2`` matrix entries.

    ``bound`` stops the search once that many independent elements are
    found; pass it only when ``gens`` are known to lie in a subspace of
    that dimension (e.g. sp_2n).
    """
    if not gens:
        raise ValueError("need at least one generator")
    if size is None:
        size = gens[0].rows
    for g in gens:
        if g.shape != (size, size):
            raise ValueError(f"generator of shape {g.shape}, expected {(size, size)}")

    basis = SpanBasis(size * size)
    values: list[list[int]] = []
    words: list = []

    def full() -> bool:
        return bound is not None and basis.rank >= bound

    # scaling an element by a nonzero constant leaves all spans unchanged
    for idx, g in enumerate(gens):
        v = kernels.primitive(g.scaled_integer()[0])
        basis, inserted = basis.insert_int(v)
        if inserted:
            values.append(v)
            words.append(idx)
        if full():
            return ClosureResult(basis, words, bound)

    a = 0
    while a < len(values) and not full():
        va = values[a]
        for b in range(a):
            c = kernels.commutator(values[b], va, size)
            basis, inserted = basis.insert_int(c)
            if inserted:
                values.append(kernels.primitive(c))
                words.append((words[b], words[a]))
                if full():
                    break
        a += 1
    return ClosureResult(basis, words, bound)


def generates_sp(ctx: SpContext, gens: Sequence[Mat]):
    """Return ``(True, Certificate)`` or ``(False, ClosureResult)``."""
    for i, g in enumerate(gens):
        if not is_member(ctx, g):
            raise ValueError(f"generator {i} is not in sp_2n")
    result = bracket_closure(gens, ctx.size, ctx.dim)
    if result.generated:
        return True, Certificate(ctx.n, list(gens), list(result.words), ctx.dim)
    return False, result


def verify_certificate(cert: Certificate) -> bool:
    """Re-evaluate every word from scratch and check that the values span sp_2n."""
    ctx = make_context(cert.n)
    if cert.dimension != ctx.dim:
        return False
    for g in cert.generators:
        if g.shape != (ctx.size, ctx.size):
            return False
    cache: dict = {}
    span = SpanBasis(ctx.dim)
    for w in cert.words:
        value = evaluate_word(w, cert.generators, cache)
        if not is_member(ctx, value):
            return False
        span, _ = span_insert(span, coords(ctx, value))
    return span.rank == ctx.dim


def consistent_check(ctx: SpContext, t: Mat) -> bool:
    """Spectral consistency test for a member ``t``.

    Requires ``charpoly(ad t) = x^n q(x)`` with ``q(0) != 0`` and ``q``
    squarefree, plus ``rank(ad t) = 2n^2``: the zero eigenvalue is then
    semisimple of multiplicity n and the 2n^2 root values are distinct and
    nonzero.
    """
    ad = ad_matrix(ctx, t)
    p = charpoly(ad)
    zeros = 0
    while zeros < len(p.coeffs) and not p.coeffs[zeros]:
        zeros += 1
    if zeros != ctx.n:
        return False
    q = Poly(p.coeffs[zeros:])
    if poly_gcd(q, q.derivative()).degree != 0:
        return False
    return rank(ad) == 2 * ctx.n ** 2


def vandermonde_closure(ctx: SpContext, t: Mat, x: Mat) -> tuple[list[Mat], bool]:
    """Iterates ``A_1 = [t, x]``, ``A_i = [t, A_{i-1}]`` for ``i <= 2n^2``.

    Also reports whether the iterates are linearly independent.
    """
    if not is_member(ctx, x):
        raise ValueError("x is not in sp_2n")
    if not consistent_check(ctx, t):
        raise ValueError("element not consistent")
    m = 2 * ctx.n ** 2
    iterates = []
    current = x
    span = SpanBasis(ctx.dim)
    for _ in range(m):
        current = commutator(t, current)
        iterates.append(current)
        span, _ = span_insert(span, coords(ctx, current))
    return iterates, span.rank == m
