import random

import pytest
from hypothesis import given, settings, strategies as st

from ammroot.counters import Counters, counting
from ammroot.errors import (
    BadCoefficients,
    CharTooSmall,
    CtxMismatch,
    EvenCharacteristic,
    NotIrreducible,
    NotMonic,
    TrialBudgetExceeded,
    ZeroInverse,
)
from ammroot.field import (
    FieldElement,
    find_irreducible,
    format_element,
    is_irreducible,
    make_ext_field,
    make_field,
    make_prime_field,
    parse_element,
)

from conftest import small_fields

F7 = make_prime_field(7)
F9 = make_ext_field(3, [1, 0, 1])
X9 = F9.element([0, 1])


def has_root(p, f):
    return any(sum(c * x**i for i, c in enumerate(f)) % p == 0 for x in range(p))


def test_make_prime_field():
    assert make_prime_field(7).q == 7
    ctx = make_prime_field(13)
    assert (ctx.q, ctx.q_minus_1, ctx.m) == (13, 12, 1)
    with pytest.raises(EvenCharacteristic):
        make_prime_field(2)
    with pytest.raises(CharTooSmall):
        make_prime_field(1)


def test_make_ext_field():
    assert F9.q == 9 and F9.m == 2
    with pytest.raises(NotIrreducible):
        make_ext_field(5, [1, 0, 1])
    with pytest.raises(NotMonic):
        make_ext_field(3, [1, 0, 2])
    with pytest.raises(EvenCharacteristic):
        make_ext_field(2, [1, 1, 1])
    with pytest.raises(BadCoefficients):
        make_ext_field(3, [1, 0, 3, 1])


def test_make_field_dispatch():
    assert make_field(7) == F7
    assert make_field(7, [0, 1]) == F7
    assert make_field(3, [1, 0, 1]) == F9


@pytest.mark.parametrize(
    "p, f, expected",
    [
        (3, [1, 0, 1], True),
        (5, [1, 0, 1], False),
        # values at 0, 1, 2 are 2, 1, 2: no root, degree 2
        (3, [2, 1, 1], True),
    ],
)
def test_is_irreducible_examples(p, f, expected):
    assert is_irreducible(p, f) is expected


def test_is_irreducible_not_monic():
    with pytest.raises(NotMonic):
        is_irreducible(3, [1, 0, 2])


@pytest.mark.parametrize("p", [3, 5, 7])
def test_is_irreducible_low_degree_matches_root_search(p):
    # degrees 2 and 3: irreducible iff no root in F_p
    for m in (2, 3):
        count = 0
        for idx in range(p**m):
            f = [(idx // p**i) % p for i in range(m)] + [1]
            assert is_irreducible(p, f) == (not has_root(p, f))
            count += not has_root(p, f)
        # Gauss count of monic irreducibles
        expected = (p * p - p) // 2 if m == 2 else (p**3 - p) // 3
        assert count == expected


def test_is_irreducible_degree_four_count():
    # monic irreducible quartics over F_3: (3^4 - 3^2) / 4 = 18
    count = sum(
        is_irreducible(3, [(i // 3**k) % 3 for k in range(4)] + [1]) for i in range(81)
    )
    assert count == 18


@pytest.mark.parametrize("p, m", [(3, 2), (5, 3), (7, 4), (101, 2)])
def test_find_irreducible(p, m):
    f = find_irreducible(p, m, random.Random(1))
    assert len(f) == m + 1 and f[-1] == 1
    assert is_irreducible(p, f)


def test_find_irreducible_budget():
    with pytest.raises(TrialBudgetExceeded):
        find_irreducible(3, 2, random.Random(0), max_trials=0)

    class ZeroRng:
        def randrange(self, n):
            return 0

    # X^2 is never irreducible
    with pytest.raises(TrialBudgetExceeded):
        find_irreducible(3, 2, ZeroRng())


def test_arithmetic_examples():
    assert F7.mul(F7.element(3), F7.element(5)) == F7.element(1)
    assert X9 * X9 == F9.element([2, 0])
    a = F7.element(4)
    assert F7.zero() + a == a
    assert F7.inv(F7.element(3)) == F7.element(5)
    assert F9.inv(X9) == F9.element([0, 2])
    with pytest.raises(ZeroInverse):
        F7.inv(F7.zero())


def test_pow_examples():
    F13 = make_prime_field(13)
    assert F13.pow(F13.element(2), 12).is_one()
    assert F9.pow(X9, 8).is_one()
    assert F13.pow(F13.element(6), 0).is_one()
    assert F13.pow(F13.zero(), 0).is_one()


def test_ctx_mismatch():
    with pytest.raises(CtxMismatch):
        F7.add(F7.one(), make_prime_field(11).one())
    with pytest.raises(CtxMismatch):
        F9.mul(X9, F7.one())


def test_element_validation():
    with pytest.raises(BadCoefficients):
        F9.element([1])
    with pytest.raises(BadCoefficients):
        F9.element([3, 0])
    assert F7.element(-1) == F7.element(6)


def test_text_encoding_roundtrip():
    x = parse_element(F9, "2,1")
    assert x.coeffs == (2, 1)
    assert format_element(x) == "2,1"
    with pytest.raises(BadCoefficients):
        parse_element(F9, "2")
    with pytest.raises(BadCoefficients):
        parse_element(F9, "a,b")


def test_random_nonzero():
    # first draw of randrange(7) under seed 2024 is 3
    assert F7.random_nonzero(random.Random(2024)) == F7.element(3)
    F3 = make_prime_field(3)
    rng = random.Random(5)
    assert {int(F3.random_nonzero(rng)) for _ in range(200)} == {1, 2}
    rng = random.Random(5)
    draws = [F9.random_nonzero(rng) for _ in range(2000)]
    assert all(draws)
    assert len(set(draws)) == 8


def test_pow_counts_multiplications():
    c = Counters()
    with counting(c):
        F7.pow(F7.element(3), 13)  # 0b1101: 3 squarings + 2 multiplies
    assert c.field_multiplications == 5


@pytest.mark.parametrize("ctx", small_fields(), ids=str)
def test_group_order_and_inverse(ctx):
    qm1 = ctx.q_minus_1
    for x in ctx.elements():
        if not x:
            continue
        assert ctx.pow(x, qm1).is_one()
        inv = ctx.inv(x)
        assert ctx.pow(x, ctx.q - 2) == inv
        assert (x * inv).is_one()


def _canonical(ctx, x):
    return (
        isinstance(x, FieldElement)
        and len(x.coeffs) == ctx.m
        and all(isinstance(c, int) and 0 <= c < ctx.p for c in x.coeffs)
    )


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_field_axioms(data):
    ctx = data.draw(st.sampled_from(small_fields()))
    coeff = st.lists(st.integers(0, ctx.p - 1), min_size=ctx.m, max_size=ctx.m)
    x, y, z = (ctx.element(data.draw(coeff)) for _ in range(3))
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == ctx.zero() and x + (-x) == ctx.zero()
    assert x * ctx.one() == x
    for v in (x + y, x - y, x * y, -x, ctx.pow(x, 5)):
        assert _canonical(ctx, v)
    if x:
        assert _canonical(ctx, ctx.inv(x))
