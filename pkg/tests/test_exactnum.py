import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spgen.exactnum import (
    CycloElement,
    Poly,
    cyclo_inv,
    cyclotomic_polynomial,
    format_rational,
    parse_rational,
    poly_gcd,
)

from conftest import small_fractions

x = Poly.x()


def test_gcd_shared_root():
    assert poly_gcd(x ** 2 - 1, x - 1) == x - 1


def test_gcd_disjoint_roots():
    assert poly_gcd(x ** 2 + 1, x ** 2 - 1) == Poly((1,))


def test_gcd_squarefree_quartic():
    p = x ** 4 - 45 * x ** 2 + 324
    # roots +-3, +-6 are distinct
    assert p == (x - 3) * (x + 3) * (x - 6) * (x + 6)
    assert poly_gcd(p, p.derivative()) == Poly((1,))
    assert p.derivative() == 4 * x ** 3 - 90 * x


def test_gcd_undefined():
    with pytest.raises(ValueError, match="gcd undefined"):
        poly_gcd(Poly(), Poly())


def test_gcd_is_monic():
    assert poly_gcd(2 * x - 2, Poly()) == x - 1


@pytest.mark.parametrize("m, expected", [
    (1, [-1, 1]),
    (2, [1, 1]),
    (4, [1, 0, 1]),
    (6, [1, -1, 1]),
])
def test_cyclotomic_small(m, expected):
    assert cyclotomic_polynomial(m) == Poly(expected)


def _phi_from_complex_roots(m):
    coeffs = [1 + 0j]
    for k in range(m):
        if math.gcd(k, m) != 1:
            continue
        r = cmath.exp(2j * cmath.pi * k / m)
        coeffs = [(coeffs[i - 1] if i else 0) - r * (coeffs[i] if i < len(coeffs) else 0)
                  for i in range(len(coeffs) + 1)]
    return Poly([round(c.real) for c in coeffs])


@pytest.mark.parametrize("m", range(1, 25))
def test_cyclotomic_matches_complex_roots(m):
    assert cyclotomic_polynomial(m) == _phi_from_complex_roots(m)


@pytest.mark.parametrize("m", range(1, 25))
def test_cyclotomic_product_over_divisors(m):
    prod = Poly((1,))
    for d in range(1, m + 1):
        if m % d == 0:
            prod = prod * cyclotomic_polynomial(d)
    assert prod == Poly.monomial(m) - 1


def test_cyclo_inv_examples():
    xi = CycloElement.xi(4)
    assert cyclo_inv(xi) == -xi
    assert cyclo_inv(1 + xi) == (1 - xi) * Fraction(1, 2)
    assert (1 + xi) * ((1 - xi) * Fraction(1, 2)) == 1
    for m in (1, 2, 3, 7, 12):
        one = CycloElement.rational(m, 1)
        assert cyclo_inv(one) == 1


def test_cyclo_inv_zero():
    with pytest.raises(ZeroDivisionError, match="division by zero in cyclotomic field"):
        cyclo_inv(CycloElement(5))


def test_cyclo_relations():
    for m in (2, 3, 4, 6, 8, 12):
        xi = CycloElement.xi(m)
        assert xi ** m == 1
        assert cyclotomic_polynomial(m)(xi) == 0
        assert xi ** -1 * xi == 1


def test_order_mixing_rejected():
    with pytest.raises(ValueError):
        CycloElement.xi(4) + CycloElement.xi(6)


def test_rational_serialization():
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(5) == "5"
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_rational("7") == 7
    for bad in ("1.5", "", "3/-4", "a/b", 3):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_cyclo_json_roundtrip():
    a = CycloElement(6, (Fraction(1, 2), -3))
    data = a.to_json()
    assert data == {"m": 6, "coeffs": ["1/2", "-3"]}
    assert CycloElement.from_json(data) == a


cyclo12 = st.lists(small_fractions, min_size=0, max_size=6).map(lambda cs: CycloElement(12, cs))


@given(small_fractions, small_fractions, small_fractions)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * (1 / a) == 1


@settings(max_examples=60)
@given(cyclo12, cyclo12, cyclo12)
def test_cyclo_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    if a:
        assert a * cyclo_inv(a) == 1
    assert a.residue.degree < 4


polys = st.lists(st.integers(-6, 6), max_size=6).map(Poly)


@given(polys, polys)
def test_gcd_divides_both(p, q):
    if not p and not q:
        return
    g = poly_gcd(p, q)
    assert not p % g
    assert not q % g


@given(polys, polys)
def test_divmod_identity(p, q):
    if not q:
        return
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree
