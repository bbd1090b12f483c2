"""Exact dense linear algebra over Q and Q(xi_m)."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from spgen._backend import kernels
from spgen.exactnum import (
    CycloElement,
    Poly,
    scalar_from_json,
    scalar_to_json,
)

Scalar = Union[Fraction, CycloElement]


class LinAlgError(ValueError):
    pass


def _coerce_row_scalars(grid: list[list]) -> list[list]:
    order = None
    for row in grid:
        for v in row:
            if isinstance(v, CycloElement):
                if order is not None and v.m != order:
                    raise ValueError(
                        f"cannot mix cyclotomic orders {order} and {v.m}")
                order = v.m
    if order is None:
        return [[Fraction(v) for v in row] for row in grid]
    return [[v if isinstance(v, CycloElement) else CycloElement(order, (v,))
             for v in row] for row in grid]


class Mat:
    """Immutable dense matrix with a single scalar kind.

    Rational entries are stored as :class:`~fractions.Fraction`; as soon as
    one entry is a :class:`CycloElement` all rational entries are promoted
    into the same field.
    """

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Iterable[Iterable]):
        grid = [list(r) for r in entries]
        if not grid or not grid[0]:
            raise ValueError("matrix must have at least one row and column")
        cols = len(grid[0])
        if any(len(r) != cols for r in grid):
            raise ValueError("ragged matrix rows")
        grid = _coerce_row_scalars(grid)
        self.rows = len(grid)
        self.cols = cols
        self._e: tuple[tuple, ...] = tuple(tuple(r) for r in grid)

    # -- constructors ---------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Mat":
        return cls([[0] * (rows if cols is None else cols) for _ in range(rows)])

    @classmethod
    def identity(cls, size: int) -> "Mat":
        return cls([[int(i == j) for j in range(size)] for i in range(size)])

    @classmethod
    def unit(cls, size: int, i: int, j: int) -> "Mat":
        """Matrix unit with a single 1 at 0-based position ``(i, j)``."""
        grid = [[0] * size for _ in range(size)]
        grid[i][j] = 1
        return cls(grid)

    @classmethod
    def diag(cls, values: Sequence) -> "Mat":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)]
                    for i in range(n)])

    @classmethod
    def from_flat(cls, flat: Sequence, rows: int, cols: int) -> "Mat":
        return cls([flat[i * cols:(i + 1) * cols] for i in range(rows)])

    # -- access ---------------------------------------------------------
    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> tuple:
        return self._e[i]

    def tolist(self) -> list[list]:
        return [list(r) for r in self._e]

    def flat(self) -> list:
        return [v for r in self._e for v in r]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_cyclotomic(self) -> bool:
        return isinstance(self._e[0][0], CycloElement)

    @property
    def T(self) -> "Mat":
        return Mat(zip(*self._e))

    def is_zero(self) -> bool:
        return not any(v for r in self._e for v in r)

    def is_diagonal(self) -> bool:
        return all(not self._e[i][j] for i in range(self.rows)
                   for j in range(self.cols) if i != j)

    def diagonal(self) -> list:
        return [self._e[i][i] for i in range(min(self.rows, self.cols))]

    def trace(self):
        return sum(self.diagonal(), Fraction(0))

    def scaled_integer(self) -> tuple[list[int], int]:
        """Flat integer entries ``ints`` and ``den`` with ``self == ints/den``."""
        if self.is_cyclotomic:
            raise TypeError("integer scaling needs rational entries")
        flat = self.flat()
        den = math.lcm(1, *(v.denominator for v in flat))
        return [int(v * den) for v in flat], den

    # -- arithmetic -----------------------------------------------------
    def _check_same_shape(self, other: "Mat") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._e == other._e

    def __hash__(self) -> int:
        return hash(self._e)

    def __add__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        self._check_same_shape(other)
        return Mat([[a + b for a, b in zip(r, s)] for r, s in zip(self._e, other._e)])

    def __sub__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        self._check_same_shape(other)
        return Mat([[a - b for a, b in zip(r, s)] for r, s in zip(self._e, other._e)])

    def __neg__(self) -> "Mat":
        return Mat([[-a for a in r] for r in self._e])

    def __mul__(self, scalar) -> "Mat":
        if isinstance(scalar, Mat):
            return NotImplemented
        return Mat([[a * scalar for a in r] for r in self._e])

    def __rmul__(self, scalar) -> "Mat":
        return self * scalar

    def __matmul__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other._e))
        out = []
        for r in self._e:
            row = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a and b:
                        acc = a * b + acc
                row.append(acc)
            out.append(row)
        return Mat(out)

    def __pow__(self, k: int) -> "Mat":
        if not self.is_square or k < 0:
            raise ValueError("matrix power needs a square matrix and k >= 0")
        result, base = Mat.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in r) for r in self._e)
        return f"Mat([{body}])"

    # -- serialization --------------------------------------------------
    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[scalar_to_json(v) for v in r] for r in self._e],
        }

    @classmethod
    def from_json(cls, data, where: str = "$") -> "Mat":
        """Parse Mat JSON; errors name the offending JSON path."""
        if not isinstance(data, dict):
            raise ValueError(f"{where}: expected a matrix object")
        for key in ("rows", "cols", "entries"):
            if key not in data:
                raise ValueError(f"{where}: missing key {key!r}")
        rows, cols, entries = data["rows"], data["cols"], data["entries"]
        for key, val in (("rows", rows), ("cols", cols)):
            if not isinstance(val, int) or isinstance(val, bool) or val < 1:
                raise ValueError(f"{where}.{key}: expected a positive integer")
        if not isinstance(entries, list) or len(entries) != rows:
            raise ValueError(f"{where}.entries: expected {rows} rows")
        grid = []
        for i, r in enumerate(entries):
            if not isinstance(r, list) or len(r) != cols:
                raise ValueError(f"{where}.entries[{i}]: expected {cols} entries")
            row = []
            for j, v in enumerate(r):
                try:
                    row.append(scalar_from_json(v))
                except ValueError as exc:
                    raise ValueError(f"{where}.entries[{i}][{j}]: {exc}") from None
            grid.append(row)
        return cls(grid)


def commutator(a: Mat, b: Mat) -> Mat:
    """Lie bracket ``ab - ba``."""
    if not (a.is_square and a.shape == b.shape):
        raise ValueError(f"commutator needs equal square shapes, got {a.shape}, {b.shape}")
    if a.is_cyclotomic != b.is_cyclotomic:
        raise ValueError("commutator operands have different scalar kinds")
    return a @ b - b @ a


def _require_rational(a: Mat, what: str) -> None:
    if a.is_cyclotomic:
        raise TypeError(f"{what} needs rational entries")


def rank(a: Mat) -> int:
    """Exact rank via Bareiss elimination on an integer-scaled copy."""
    _require_rational(a, "rank")
    ints, _ = a.scaled_integer()
    rows = [ints[i * a.cols:(i + 1) * a.cols] for i in range(a.rows)]
    return kernels.bareiss_rank(rows, a.cols)


class SpanBasis:
    """Subspace of Q^d kept in reduced row-echelon form.

    Rows are held internally as integer numerators over a per-row
    denominator; :attr:`rows` exposes them as fractions.  Values are
    immutable: :func:`span_insert` returns a new basis.
    """

    __slots__ = ("dim", "_nums", "_dens", "_pivots")

    def __init__(self, dim: int, _nums=(), _dens=(), _pivots=()):
        self.dim = dim
        self._nums: list[list[int]] = list(_nums)
        self._dens: list[int] = list(_dens)
        self._pivots: list[int] = list(_pivots)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def __len__(self) -> int:
        return len(self._pivots)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(self._pivots)

    @property
    def rows(self) -> list[tuple[Fraction, ...]]:
        return [tuple(Fraction(x, d) for x in num)
                for num, d in zip(self._nums, self._dens)]

    def reduce_int(self, v: Sequence[int]) -> list[int]:
        """Primitive integer residue of an integer vector (zero iff in span)."""
        return kernels.reduce_vector(self._nums, self._dens, self._pivots, v)

    def insert_int(self, v: Sequence[int]) -> tuple["SpanBasis", bool]:
        if len(v) != self.dim:
            raise ValueError(f"vector length {len(v)} != ambient dimension {self.dim}")
        r = self.reduce_int(v)
        if not any(r):
            return self, False
        nums, dens, pivots = kernels.insert_reduced(
            self._nums, self._dens, self._pivots, r)
        return SpanBasis(self.dim, nums, dens, pivots), True

    def contains(self, v: Sequence) -> bool:
        ints = _clear_denominators(v)
        if len(ints) != self.dim:
            raise ValueError(f"vector length {len(ints)} != ambient dimension {self.dim}")
        return not any(self.reduce_int(ints))


def _clear_denominators(v: Sequence) -> list[int]:
    fr = [Fraction(x) for x in v]
    den = math.lcm(1, *(x.denominator for x in fr))
    return [int(x * den) for x in fr]


def span_insert(s: SpanBasis, v: Sequence) -> tuple[SpanBasis, bool]:
    """Insert ``v`` into the span; ``inserted`` is True iff ``v`` was outside it."""
    return s.insert_int(_clear_denominators(v))


def charpoly(a: Mat) -> Poly:
    """Monic ``det(xI - a)`` by Faddeev-LeVerrier.

    The recurrence runs on ``D*a`` with ``D`` the common denominator, where
    every step is integral; coefficient ``k`` is then rescaled by ``D**k``.
    """
    if not a.is_square:
        raise ValueError("charpoly needs a square matrix")
    _require_rational(a, "charpoly")
    s = a.rows
    ints, den = a.scaled_integer()
    coeffs = kernels.charpoly(ints, s)
    return Poly([Fraction(c, den ** (s - i)) for i, c in enumerate(coeffs)])


def poly_at_matrix(p: Poly, a: Mat) -> Mat:
    """Evaluate ``p(a)`` by Horner's rule."""
    ident = Mat.identity(a.rows)
    result = Mat.zeros(a.rows)
    for c in reversed(p.coeffs):
        result = result @ a + ident * c
    return result


def mat_inv(a: Mat) -> Mat:
    """Exact inverse by Gauss-Jordan elimination over the entry field."""
    if not a.is_square:
        raise ValueError("only square matrices can be inverted")
    n = a.rows
    one = a[0, 0] ** 0 if a.is_cyclotomic else Fraction(1)
    zero = one - one
    aug = [list(a.row(i)) + [one if i == j else zero for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise LinAlgError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            c = aug[r][col]
            if r != col and c:
                aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
    return Mat([row[n:] for row in aug])


def exp_nilpotent(z: Mat) -> Mat:
    """``sum z^j / j!`` for nilpotent ``z``; the series terminates below ``size``."""
    if not z.is_square:
        raise ValueError("exp_nilpotent needs a square matrix")
    _require_rational(z, "exp_nilpotent")
    size = z.rows
    result = Mat.identity(size)
    term = Mat.identity(size)
    for j in range(1, size + 1):
        term = (term @ z) * Fraction(1, j)
        if term.is_zero():
            return result
        if j == size:
            break
        result = result + term
    raise ValueError("not nilpotent")
