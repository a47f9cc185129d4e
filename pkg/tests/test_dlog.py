import pytest

from ammroot.counters import Counters
from ammroot.dlog import subgroup_dlog
from ammroot.errors import InvalidInput, NotInSubgroup
from ammroot.field import make_prime_field
from ammroot.ntcore import prime_factors

F19 = make_prime_field(19)


def test_examples():
    a = F19.element(7)
    assert subgroup_dlog(F19, a, F19.element(11), 3) == 2
    assert subgroup_dlog(F19, a, F19.one(), 3) == 0
    with pytest.raises(NotInSubgroup):
        subgroup_dlog(F19, a, F19.element(2), 3)


def test_generator_one_rejected():
    with pytest.raises(InvalidInput):
        subgroup_dlog(F19, F19.one(), F19.one(), 3)


def order_r_generators(ctx, r):
    return [x for x in ctx.elements() if x and not x.is_one() and ctx.pow(x, r).is_one()]


@pytest.mark.parametrize("strategy", ["brute", "bsgs"])
def test_roundtrip_and_work_bound(fields, strategy):
    for ctx in fields:
        for r in prime_factors(ctx.q_minus_1):
            for a in order_r_generators(ctx, r)[:3]:
                for e in range(r):
                    c = Counters()
                    assert subgroup_dlog(ctx, a, ctx.pow(a, e), r, c, strategy) == e
                    if strategy == "brute":
                        assert c.dlog_multiplications == e <= r - 1


def test_bsgs_not_in_subgroup():
    with pytest.raises(NotInSubgroup):
        subgroup_dlog(F19, F19.element(7), F19.element(2), 3, strategy="bsgs")


def test_unknown_strategy():
    with pytest.raises(ValueError):
        subgroup_dlog(F19, F19.element(7), F19.one(), 3, strategy="rho")


def test_mean_work_matches_uniform_digit_model():
    # each of the t - 1 digits is uniform on [0, r): mean walk length (r - 1) / 2
    import random

    from ammroot.amm import rth_root

    p = 16590142881612301  # t = 2 for every r below
    ctx = make_prime_field(p)
    rng = random.Random(99)
    for r in (5, 11, 23):
        work = []
        for _ in range(300):
            delta = ctx.pow(ctx.random_nonzero(rng), r)
            work.append(rth_root(ctx, delta, r, rng).counters.dlog_multiplications)
        mean = sum(work) / len(work)
        assert abs(mean - (r - 1) / 2) <= 0.25 * (r - 1) / 2
