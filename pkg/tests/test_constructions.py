import json
from fractions import Fraction

import pytest

from spgen.constructions import (
    GeneratorPair,
    example1_pair,
    example2_diagonal,
    lemma3_T,
    lemma3_eigenvector,
    lemma3_pair,
    negative_simple_sum,
    prop3_condition_check,
    prop3_pair,
    regular_nilpotent,
    verify_lemma3_conjugation,
)
from spgen.exactnum import CycloElement
from spgen.genverify import bracket_closure, consistent_check, generates_sp
from spgen.linalg import Mat, commutator
from spgen.sp_lie import is_member, is_nilpotent, make_context


def E(size, i, j):
    return Mat.unit(size, i - 1, j - 1)


def test_T_small():
    assert lemma3_T(1) == Mat([[0, 1], [1, 0]])
    assert lemma3_T(1) @ lemma3_T(1) == Mat.identity(2)
    t2 = lemma3_T(2)
    assert t2 == E(4, 1, 2) + E(4, 2, 4) - E(4, 3, 1) - E(4, 4, 3)
    assert t2 ** 4 == Mat.identity(4)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_T_entries(n):
    s = 2 * n
    expected = [[0] * s for _ in range(s)]
    for i in range(1, n):
        expected[i - 1][i] = 1
        expected[n + i][n + i - 1] = -1
    expected[n - 1][2 * n - 1] = 1
    expected[n][0] = (-1) ** (n - 1)
    t = lemma3_T(n)
    assert t == Mat(expected)
    assert t ** s == Mat.identity(s)
    assert is_member(make_context(n), t) and not is_nilpotent(t)


def test_pair_small():
    p = lemma3_pair(1)
    assert (p.x, p.y) == (E(2, 2, 1), E(2, 1, 2))
    p = lemma3_pair(2)
    assert p.x == E(4, 3, 1)
    assert p.y == E(4, 1, 2) - E(4, 4, 3) + E(4, 2, 4)
    assert example1_pair(2).x == p.x and example1_pair(2).y == p.y
    assert example1_pair(2).tag == "example1"


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lemma3_pair_properties(n):
    ctx = make_context(n)
    p = lemma3_pair(n)
    for v in (p.x, p.y):
        assert is_member(ctx, v) and is_nilpotent(v)
    assert p.y == p.t + p.x * (-1) ** n
    assert generates_sp(ctx, [p.x, p.y])[0]
    assert consistent_check(ctx, lemma3_T(n))


def test_example1_n3_dimension():
    p = example1_pair(3)
    assert bracket_closure([p.x, p.y]).dimension == 21
    assert generates_sp(make_context(3), [p.x, p.y])[0]


def test_prop3_examples():
    p = prop3_pair(2)
    assert p.y == (E(4, 2, 1) - E(4, 3, 4)) * 3 + E(4, 4, 2) * 9
    assert commutator(p.x, p.y) == Mat.diag([3, 6, -3, -6])
    p1 = prop3_pair(1)
    assert (p1.x, p1.y) == (E(2, 1, 2), E(2, 2, 1) * 3)
    assert generates_sp(make_context(1), [p1.x, p1.y])[0]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_prop3_bracket_formula(n):
    p = prop3_pair(n)
    a = [3 ** i for i in range(1, n + 1)]
    top = [a[0]] + [a[i] - a[i - 1] for i in range(1, n)]
    assert commutator(p.x, p.y) == Mat.diag(top + [-v for v in top])
    assert example2_diagonal(a) == top + [-v for v in top]
    ctx = make_context(n)
    assert is_nilpotent(p.x) and is_nilpotent(p.y) and is_member(ctx, p.y)


def test_prop3_condition_examples():
    ctx = make_context(2)
    N = regular_nilpotent(2)
    assert prop3_condition_check(ctx, N, negative_simple_sum(2, [3, 9]))
    M1 = negative_simple_sum(2, [1, 1])
    assert commutator(N, M1) == Mat.diag([1, 0, -1, 0])
    assert not prop3_condition_check(ctx, N, M1)
    assert prop3_condition_check(make_context(1), E(2, 1, 2), E(2, 2, 1) * 3)


def test_prop3_condition_structural_errors():
    ctx = make_context(2)
    N = regular_nilpotent(2)
    with pytest.raises(ValueError):
        prop3_condition_check(ctx, N, negative_simple_sum(2, [0, 1]))
    with pytest.raises(ValueError):
        prop3_condition_check(ctx, E(4, 3, 1), negative_simple_sum(2, [3, 9]))


def test_prop3_custom_weights():
    p = prop3_pair(3, weights=[1, 5, Fraction(1, 2)])
    assert generates_sp(make_context(3), [p.x, p.y])[0]
    with pytest.raises(ValueError):
        prop3_pair(2, weights=[1, 1])


def test_conjugation_n1():
    rep = verify_lemma3_conjugation(1)
    assert rep.ok
    col0 = lemma3_eigenvector(1, 0)
    col1 = lemma3_eigenvector(1, 1)
    assert col0 == [1, 1] and col1 == [1, -1]
    assert rep.diagonal == Mat.diag([1, -1]) * CycloElement.rational(2, 1)


def test_eigenvector_n2():
    xi = CycloElement.xi(4)
    v = lemma3_eigenvector(2, 1)
    assert v == [1, xi, xi, -1]
    T = lemma3_T(2)
    col = Mat([[c] for c in v])
    assert T @ col == col * xi


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_eigenvectors_all_powers(n):
    T = lemma3_T(n)
    for k in range(2 * n):
        lam = CycloElement.xi(2 * n, k)
        col = Mat([[c] for c in lemma3_eigenvector(n, k)])
        assert T @ col == col * lam


@pytest.mark.parametrize("n", [1, 2, 3])
def test_conjugation_report(n):
    rep = verify_lemma3_conjugation(n)
    assert rep.invertible and rep.diagonalizes and rep.off_diagonal_nonzero
    for d in rep.diagonal.diagonal():
        assert d ** (2 * n) == 1


def test_pair_json_roundtrip():
    p = prop3_pair(2)
    data = json.loads(json.dumps(p.to_json()))
    assert data["tag"] == "prop3"
    assert GeneratorPair.from_json(data) == p
    q = lemma3_pair(2)
    assert GeneratorPair.from_json(q.to_json()) == q
    with pytest.raises(ValueError, match=r"\$\.y"):
        GeneratorPair.from_json({"n": 2, "x": q.x.to_json(), "y": {"rows": 1}})
