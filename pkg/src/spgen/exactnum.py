"""Exact scalars: rationals, rational polynomials and cyclotomic fields.

Rationals are :class:`fractions.Fraction`, which already keeps values reduced
with a positive denominator.  :class:`Poly` and :class:`CycloElement` are
immutable and hashable.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; anything else raises ``ValueError``."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"invalid rational {text!r}")
    return Fraction(text)


def format_rational(value: Number) -> str:
    return str(Fraction(value))


class Poly:
    """Dense univariate polynomial over Q, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: Number = 1) -> "Poly":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(f"+{mono}")
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                sign = "+" if c > 0 else "-"
                terms.append(f"{sign}{abs(c)}{'*' + mono if mono else ''}")
        body = "".join(terms)
        return f"Poly({body[1:] if body[0] == '+' else body})"

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        result, base = Poly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lead
        if len(rem) <= dq:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if not c:
                continue
            c = c / lead
            quot[k - dq] = c
            for j, oj in enumerate(other.coeffs):
                rem[k - dq + j] -= c * oj
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, value):
        """Horner evaluation at any value supporting ``*`` and ``+`` with rationals."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if not self:
            raise ZeroDivisionError("zero polynomial has no monic form")
        lead = self.lead
        return Poly([c / lead for c in self.coeffs])

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm over Q."""
    if not p and not q:
        raise ValueError("gcd undefined")
    while q:
        p, q = q, p % q
    return p.monic()


def poly_xgcd(p: Poly, q: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*p + t*q == g`` and ``g`` monic."""
    if not p and not q:
        raise ValueError("gcd undefined")
    r0, r1 = p, q
    s0, s1 = Poly((1,)), Poly()
    t0, t1 = Poly(), Poly((1,))
    while r1:
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    lead = r0.lead
    return r0.monic(), s0 * (1 / lead), t0 * (1 / lead)


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> Poly:
    """The m-th cyclotomic polynomial, via x^m - 1 = prod_{d | m} Phi_d."""
    if m < 1:
        raise ValueError("cyclotomic order must be positive")
    p = Poly.monomial(m) - 1
    for d in _divisors(m)[:-1]:
        quo, rem = divmod(p, cyclotomic_polynomial(d))
        assert not rem
        p = quo
    return p


def euler_phi(m: int) -> int:
    return cyclotomic_polynomial(m).degree


class CycloElement:
    """An element of Q(xi_m), stored as a residue modulo Phi_m with x -> xi.

    Elements of different orders never mix; rationals are promoted.
    """

    __slots__ = ("m", "residue")

    def __init__(self, m: int, coeffs: Union[Poly, Iterable[Number]] = ()):
        if m < 1:
            raise ValueError("cyclotomic order must be positive")
        poly = coeffs if isinstance(coeffs, Poly) else Poly(coeffs)
        if poly.degree >= euler_phi(m):
            poly = poly % cyclotomic_polynomial(m)
        self.m = m
        self.residue: Poly = poly

    @classmethod
    def xi(cls, m: int, power: int = 1) -> "CycloElement":
        """The generator xi raised to ``power`` (any integer)."""
        return cls(m, Poly.monomial(power % m))

    @classmethod
    def rational(cls, m: int, value: Number) -> "CycloElement":
        return cls(m, (value,))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self.residue.coeffs

    def is_rational(self) -> bool:
        return self.residue.degree <= 0

    def _coerce(self, other) -> "CycloElement":
        if isinstance(other, CycloElement):
            if other.m != self.m:
                raise ValueError(
                    f"cannot mix cyclotomic orders {self.m} and {other.m}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElement(self.m, (other,))
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.residue)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.residue == Poly((other,))
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self.m == other.m and self.residue == other.residue

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.residue.coeffs[0] if self.residue else Fraction(0))
        return hash((self.m, self.residue.coeffs))

    def __repr__(self) -> str:
        body = repr(self.residue)[5:-1].replace("x", "xi")
        return f"CycloElement(m={self.m}, {body})"

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElement(self.m, self.residue + other.residue)

    __radd__ = __add__

    def __neg__(self) -> "CycloElement":
        return CycloElement(self.m, -self.residue)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElement(self.m, self.residue - other.residue)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElement(self.m, self.residue * other.residue)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * cyclo_inv(other)

    def __rtruediv__(self, other):
        return cyclo_inv(self) * other

    def __pow__(self, k: int) -> "CycloElement":
        if k < 0:
            return cyclo_inv(self) ** (-k)
        result, base = CycloElement(self.m, (1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": self.residue.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "CycloElement":
        if not isinstance(data, dict) or set(data) != {"m", "coeffs"}:
            raise ValueError("cyclotomic entry must be {'m': ..., 'coeffs': [...]}")
        m = data["m"]
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise ValueError(f"invalid cyclotomic order {m!r}")
        coeffs = data["coeffs"]
        if not isinstance(coeffs, list):
            raise ValueError("cyclotomic coeffs must be a list")
        return cls(m, [parse_rational(c) for c in coeffs])


def cyclo_inv(a: CycloElement) -> CycloElement:
    """Inverse in Q(xi_m) from the extended Euclidean algorithm against Phi_m."""
    if not a:
        raise ZeroDivisionError("division by zero in cyclotomic field")
    g, s, _ = poly_xgcd(a.residue, cyclotomic_polynomial(a.m))
    # Phi_m is irreducible, so any nonzero residue is coprime to it.
    assert g == Poly((1,))
    return CycloElement(a.m, s)


def scalar_to_json(value) -> Union[str, dict]:
    if isinstance(value, CycloElement):
        return value.to_json()
    return format_rational(value)


def scalar_from_json(data) -> Union[Fraction, CycloElement]:
    if isinstance(data, dict):
        return CycloElement.from_json(data)
    return parse_rational(data)


def lcm_of_denominators(values: Sequence[Fraction]) -> int:
    return math.lcm(1, *(Fraction(v).denominator for v in values))
