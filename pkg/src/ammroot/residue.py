"""r-th residue testing and r-th nonresidue sampling."""

from __future__ import annotations

import math
import random
from typing import Optional

from .counters import Counters
from .errors import RDoesNotDivide, RNotPrime, TrialBudgetExceeded, ZeroElement
from .field import FieldCtx, FieldElement
from .ntcore import is_probable_prime, legendre

TRIAL_BUDGET_FACTOR = 64


def _check_divides(ctx: FieldCtx, r: int) -> None:
    if r < 2 or ctx.q_minus_1 % r:
        raise RDoesNotDivide(f"r = {r} does not divide q - 1 = {ctx.q_minus_1}")


def is_rth_residue(ctx: FieldCtx, delta: FieldElement, r: int) -> bool:
    """Generalized Euler criterion: ``delta**((q-1)/r) == 1``."""
    _check_divides(ctx, r)
    if not delta:
        raise ZeroElement("residuosity is defined on F_q^* only")
    return ctx.pow(delta, ctx.q_minus_1 // r).is_one()


def trial_budget(ctx: FieldCtx) -> int:
    return math.ceil(TRIAL_BUDGET_FACTOR * math.log2(ctx.q))


def sample_nonresidue(
    ctx: FieldCtx,
    r: int,
    rng: random.Random,
    counters: Optional[Counters] = None,
    max_trials: Optional[int] = None,
) -> FieldElement:
    """Draw uniform elements of F_q^* until one is not an r-th residue.

    For r = 2 over a prime field the candidates are screened with the
    Legendre symbol; otherwise by exponentiation to (q-1)/r.
    """
    _check_divides(ctx, r)
    if not is_probable_prime(r):
        raise RNotPrime(f"r = {r} is not prime")
    budget = trial_budget(ctx) if max_trials is None else max_trials
    use_legendre = ctx.m == 1 and r == 2
    cofactor = ctx.q_minus_1 // r
    for _ in range(budget):
        rho = ctx.random_nonzero(rng)
        if counters is not None:
            counters.nonresidue_trials += 1
        if use_legendre:
            if legendre(rho.coeffs[0], ctx.p) == -1:
                return rho
        elif not ctx.pow(rho, cofactor).is_one():
            return rho
    raise TrialBudgetExceeded(f"no {r}-th nonresidue found in {budget} trials over {ctx}")
