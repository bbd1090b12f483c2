"""Exit criteria.  Each test records one PASS/FAIL line in the terminal summary."""
import json
import random
import time

import pytest

from spgen.completion import complete_nilpotent
from spgen.constructions import (
    example1_pair,
    example2_diagonal,
    example2_weights,
    lemma3_T,
    prop3_pair,
    verify_lemma3_conjugation,
)
from spgen.exactnum import Poly
from spgen.genverify import (
    Certificate,
    bracket_closure,
    consistent_check,
    generates_sp,
    vandermonde_closure,
    verify_certificate,
)
from spgen.linalg import Mat, charpoly, commutator, poly_at_matrix
from spgen.sp_lie import (
    conjugate,
    is_member,
    is_nilpotent,
    make_context,
    random_symplectic,
)

from conftest import random_fraction, record_acceptance


def test_criterion_1_lowest_weight_pair_generates():
    start = time.perf_counter()
    dims = {}
    ok = True
    for n, expected in [(1, 3), (2, 10), (3, 21), (4, 36)]:
        p = example1_pair(n)
        gen, cert = generates_sp(make_context(n), [p.x, p.y])
        dims[n] = len(cert.words) if gen else cert.dimension
        ok = ok and gen and dims[n] == expected
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60
    record_acceptance(1, "lowest-weight pair generates sp_2n, n=1..4", ok,
                      f"dims {dims}, {elapsed:.2f}s (< 60s)")
    assert ok


def test_criterion_2_prop3_pair():
    details, ok = [], True
    for n in range(1, 5):
        p = prop3_pair(n)
        gen, _ = generates_sp(make_context(n), [p.x, p.y])
        a = [3 ** i for i in range(1, n + 1)]
        top = [a[0]] + [a[i] - a[i - 1] for i in range(1, n)]
        diag_ok = commutator(p.x, p.y) == Mat.diag(top + [-v for v in top])
        ok = ok and gen and diag_ok
        details.append(f"n={n}: generates={gen} [N,M]={'ok' if diag_ok else 'MISMATCH'}")
    record_acceptance(2, "Example 2 pair generates; [N,M] matches diagonal", ok,
                      ", ".join(details))
    assert ok


def test_criterion_3_consistency():
    x = Poly.x()
    details, ok = [], True
    for n in range(1, 5):
        cons = consistent_check(make_context(n), lemma3_T(n))
        cp = charpoly(lemma3_T(n)) == x ** (2 * n) - 1
        ok = ok and cons and cp
        details.append(f"n={n}: consistent={cons} charpoly=x^{2 * n}-1:{cp}")
    record_acceptance(3, "T is consistent and charpoly(T) = x^2n - 1", ok, ", ".join(details))
    assert ok


def test_criterion_4_cyclotomic_conjugation():
    details, ok = [], True
    for n in (1, 2, 3):
        start = time.perf_counter()
        rep = verify_lemma3_conjugation(n)
        elapsed = time.perf_counter() - start
        good = rep.ok and (n != 3 or elapsed < 30)
        ok = ok and good
        details.append(f"n={n}: {'ok' if rep.ok else 'FAILED'} ({elapsed:.2f}s)")
    record_acceptance(4, "C^-1 T C diagonal, C^-1 E_(n+1,1) C off-diagonal nonzero", ok,
                      ", ".join(details))
    assert ok


@pytest.mark.parametrize("n", [1, 2, 3])
def test_criterion_5_vandermonde(n):
    ctx = make_context(n)
    t = Mat.diag(example2_diagonal(example2_weights(n)))
    x = Mat.zeros(ctx.size)
    for v in ctx.root_vectors():
        x = x + v
    if not consistent_check(ctx, t):
        record_acceptance(5, "Vandermonde iterates independent, n=1..3", False,
                          f"n={n}: Example-2 diagonal is not consistent "
                          f"(repeated root values), iterates cannot be independent")
        pytest.fail(f"n={n}: Example-2 diagonal {t.diagonal()} is not consistent")
    iterates, independent = vandermonde_closure(ctx, t, x)
    record_acceptance(5, "Vandermonde iterates independent, n=1..3", independent,
                      f"n={n}: {len(iterates)} iterates independent={independent}")
    assert independent and len(iterates) == 2 * n * n


def test_criterion_6_proper_subalgebra_of_sl():
    details, ok = [], True
    for n in (2, 3):
        p = example1_pair(n)
        d = bracket_closure([p.x, p.y], 2 * n).dimension
        good = d == n * (2 * n + 1) < 4 * n * n - 1
        ok = ok and good
        details.append(f"n={n}: closure {d} vs sl dim {4 * n * n - 1}")
    record_acceptance(6, "pair closes to sp_2n, a proper subalgebra of sl_2n", ok,
                      ", ".join(details))
    assert ok


def _random_root_nilpotent(ctx, rng):
    """A conjugated root vector, or a conjugated sum of two positive root vectors."""
    if rng.random() < 0.5:
        roots = ctx.root_vectors()
        x = roots[rng.randrange(len(roots))]
    else:
        pos = ctx.roots.positive
        x = pos[rng.randrange(len(pos))] + pos[rng.randrange(len(pos))] * rng.randint(1, 3)
        if x.is_zero():
            x = pos[0]
    return conjugate(random_symplectic(ctx, rng, 4, 2), x)


def test_criterion_7_randomized_completion():
    start = time.perf_counter()
    details, ok = [], True
    for n, seed in ((2, 2024), (3, 3036)):
        ctx = make_context(n)
        rng = random.Random(seed)
        trials = []
        for _ in range(20):
            x = _random_root_nilpotent(ctx, rng)
            assert is_member(ctx, x) and is_nilpotent(x) and not x.is_zero()
            res = complete_nilpotent(ctx, x, rng.getrandbits(32), 200)
            good = (verify_certificate(res.certificate) and is_nilpotent(res.y)
                    and res.certificate.generators[0] == x)
            ok = ok and good
            trials.append(res.trial)
        details.append(f"sp_{2 * n}: 20/20 solved, max trial {max(trials)}")
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 600
    details.append(f"{elapsed:.1f}s (< 600s)")
    record_acceptance(7, "random nilpotents completed within 200 trials", ok, ", ".join(details))
    assert ok


def test_criterion_8_verifier_soundness():
    rng = random.Random(8)
    jacobi = 0
    for _ in range(100):
        s = rng.randint(1, 5)
        a, b, c = (Mat([[random_fraction(rng) for _ in range(s)] for _ in range(s)])
                   for _ in range(3))
        total = (commutator(a, commutator(b, c)) + commutator(b, commutator(c, a))
                 + commutator(c, commutator(a, b)))
        jacobi += total.is_zero()
    cayley = 0
    for k in range(50):
        s = 1 + k % 8
        a = Mat([[random_fraction(rng) for _ in range(s)] for _ in range(s)])
        cayley += poly_at_matrix(charpoly(a), a).is_zero()
    roundtrips = deletions = certs = 0
    for n in range(1, 5):
        for p in (example1_pair(n), prop3_pair(n)):
            _, cert = generates_sp(make_context(n), [p.x, p.y])
            certs += 1
            back = Certificate.from_json(json.loads(json.dumps(cert.to_json())))
            roundtrips += verify_certificate(cert) and verify_certificate(back)
            deletions += all(
                not verify_certificate(Certificate(cert.n, cert.generators,
                                                   cert.words[:i] + cert.words[i + 1:],
                                                   cert.dimension))
                for i in range(len(cert.words)))
    ok = jacobi == 100 and cayley == 50 and roundtrips == certs and deletions == certs
    record_acceptance(8, "verifier soundness", ok,
                      f"Jacobi {jacobi}/100, Cayley-Hamilton {cayley}/50, "
                      f"round-trips {roundtrips}/{certs}, word deletions caught {deletions}/{certs}")
    assert ok
