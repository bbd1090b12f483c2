"""Complete a nonzero nilpotent of sp_2n to a generating nilpotent pair.

The partner is a random symplectic conjugate of the regular nilpotent.
Pairs that fail to generate form a proper Zariski-closed set, so random
integer conjugators succeed generically.  Every returned answer carries a
certificate that has already been re-verified.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from spgen.constructions import GeneratorPair, regular_nilpotent
from spgen.genverify import Certificate, generates_sp, verify_certificate
from spgen.linalg import Mat
from spgen.sp_lie import (
    SpContext,
    conjugate,
    is_member,
    is_nilpotent,
    random_symplectic,
)


class CompletionFailed(RuntimeError):
    def __init__(self, trials: int):
        super().__init__(f"no generating partner found in {trials} trials")
        self.trials = trials


@dataclass
class CompletionResult:
    y: Mat
    certificate: Certificate
    trial: int
    conjugator: Mat

    def pair(self, n: int) -> GeneratorPair:
        return GeneratorPair(n=n, x=self.certificate.generators[0], y=self.y,
                             tag="completion")


def trial_schedule(j: int) -> tuple[int, int]:
    """(number of exponential factors, coefficient bound) for trial ``j >= 1``."""
    step = j // 10
    return 4 + step, 2 * (1 + step)


def complete_nilpotent(ctx: SpContext, x: Mat, rng, max_trials: int = 200) -> CompletionResult:
    """Find nilpotent ``y`` such that ``x`` and ``y`` generate sp_2n.

    ``rng`` is a :class:`random.Random` or an integer seed.  Trial 0 tries
    the regular nilpotent itself; trial ``j`` draws its conjugator from an
    independent stream seeded from ``rng``, so the result only depends on
    the seed.
    """
    if max_trials < 1:
        raise ValueError("max_trials must be >= 1")
    if not is_member(ctx, x):
        raise ValueError("x is not in sp_2n")
    if x.is_zero():
        raise ValueError("x must be nonzero")
    if not is_nilpotent(x):
        raise ValueError("x is not nilpotent")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)

    y0 = regular_nilpotent(ctx.n)
    for j in range(max_trials):
        stream = random.Random(rng.getrandbits(64))
        if j == 0:
            g = Mat.identity(ctx.size)
        else:
            k, bound = trial_schedule(j)
            g = random_symplectic(ctx, stream, k, bound)
        y = conjugate(g, y0)
        ok, cert = generates_sp(ctx, [x, y])
        if ok and is_nilpotent(y) and verify_certificate(cert):
            return CompletionResult(y=y, certificate=cert, trial=j, conjugator=g)
    raise CompletionFailed(max_trials)
