"""Prime fields F_p and extensions F_p[X]/(f).

Every element is a length-``m`` coefficient tuple in the monomial basis
(constant term first), so prime-field elements are 1-tuples and the root
extraction code runs unchanged over both kinds of field.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Union

from . import counters as _counters
from . import poly
from .errors import (
    BadCoefficients,
    CharTooSmall,
    CtxMismatch,
    EvenCharacteristic,
    NotIrreducible,
    NotMonic,
    TrialBudgetExceeded,
    ZeroInverse,
)
from .ntcore import mod_inverse, prime_factors


@dataclass(frozen=True)
class FieldCtx:
    """Immutable description of F_q with q = p**m.

    Build one with :func:`make_prime_field` or :func:`make_ext_field`;
    the constructors validate, this class does not.
    """

    p: int
    m: int
    modulus: tuple
    q: int = field(init=False, repr=False, compare=False)
    q_minus_1: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.m)
        object.__setattr__(self, "q_minus_1", self.p**self.m - 1)

    def __str__(self) -> str:
        if self.m == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.m}[{format_coeffs(self.modulus)}]"

    # -- construction ------------------------------------------------------

    def element(self, value: Union[int, Sequence[int]]) -> "FieldElement":
        """Build an element from an int (embedded as a constant) or coefficients."""
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.m - 1))
        coeffs = tuple(int(c) for c in value)
        if len(coeffs) != self.m:
            raise BadCoefficients(f"expected {self.m} coefficients, got {len(coeffs)}")
        if any(not 0 <= c < self.p for c in coeffs):
            raise BadCoefficients(f"coefficients must lie in [0, {self.p})")
        return FieldElement(self, coeffs)

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.m)

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.m - 1))

    def elements(self) -> Iterator["FieldElement"]:
        for coeffs in itertools.product(range(self.p), repeat=self.m):
            yield FieldElement(self, coeffs)

    def random_nonzero(self, rng: random.Random) -> "FieldElement":
        """Uniform draw from F_q^*: uniform coefficients, all-zero rejected."""
        while True:
            coeffs = tuple(rng.randrange(self.p) for _ in range(self.m))
            if any(coeffs):
                return FieldElement(self, coeffs)

    # -- arithmetic --------------------------------------------------------

    def _check(self, *xs: "FieldElement") -> None:
        for x in xs:
            if x.ctx is not self and x.ctx != self:
                raise CtxMismatch(f"element of {x.ctx} used in {self}")

    def add(self, x: "FieldElement", y: "FieldElement") -> "FieldElement":
        self._check(x, y)
        p = self.p
        return FieldElement(self, tuple((a + b) % p for a, b in zip(x.coeffs, y.coeffs)))

    def sub(self, x: "FieldElement", y: "FieldElement") -> "FieldElement":
        self._check(x, y)
        p = self.p
        return FieldElement(self, tuple((a - b) % p for a, b in zip(x.coeffs, y.coeffs)))

    def neg(self, x: "FieldElement") -> "FieldElement":
        self._check(x)
        p = self.p
        return FieldElement(self, tuple(-a % p for a in x.coeffs))

    def mul(self, x: "FieldElement", y: "FieldElement") -> "FieldElement":
        self._check(x, y)
        sink = _counters.current()
        if sink is not None:
            sink.field_multiplications += 1
        return FieldElement(self, self._mul_coeffs(x.coeffs, y.coeffs))

    def _mul_coeffs(self, a: tuple, b: tuple) -> tuple:
        p, m = self.p, self.m
        if m == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        # X^m = -(f_0 + f_1 X + ... + f_{m-1} X^{m-1})
        tail = self.modulus
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k] % p
            if c:
                base = k - m
                for i in range(m):
                    if tail[i]:
                        prod[base + i] -= c * tail[i]
        return tuple(c % p for c in prod[:m])

    def inv(self, x: "FieldElement") -> "FieldElement":
        self._check(x)
        if not any(x.coeffs):
            raise ZeroInverse("zero has no inverse")
        if self.m == 1:
            return FieldElement(self, (mod_inverse(x.coeffs[0], self.p),))
        d, u, _ = poly.xgcd(list(x.coeffs), list(self.modulus), self.p)
        if d != [1]:
            # only reachable with a reducible modulus
            raise ZeroInverse(f"{format_element(x)} is a zero divisor")
        u = poly.mod(u, list(self.modulus), self.p)
        return FieldElement(self, tuple(u) + (0,) * (self.m - len(u)))

    def pow(self, x: "FieldElement", e: int) -> "FieldElement":
        """``x**e`` by left-to-right repeated squaring; ``0**0 == 1``."""
        self._check(x)
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        if e == 0:
            return self.one()
        result = x
        for bit in bin(e)[3:]:
            result = self.mul(result, result)
            if bit == "1":
                result = self.mul(result, x)
        return result


class FieldElement:
    """Value-type element of a :class:`FieldCtx`. Operators delegate to the ctx."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: tuple):
        self.ctx = ctx
        self.coeffs = coeffs

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.coeffs == other.coeffs and (
            self.ctx is other.ctx or self.ctx == other.ctx
        )

    def __hash__(self):
        return hash((self.coeffs, self.ctx.p, self.ctx.modulus))

    def __lt__(self, other: "FieldElement") -> bool:
        return self.coeffs < other.coeffs

    def __repr__(self):
        return f"FieldElement({format_element(self)!r}, {self.ctx})"

    def __str__(self):
        return format_element(self)

    def __int__(self):
        if self.ctx.m != 1 and any(self.coeffs[1:]):
            raise TypeError("only constant elements convert to int")
        return self.coeffs[0]

    def __bool__(self):
        return any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def __add__(self, other):
        return self.ctx.add(self, other)

    def __sub__(self, other):
        return self.ctx.sub(self, other)

    def __neg__(self):
        return self.ctx.neg(self)

    def __mul__(self, other):
        return self.ctx.mul(self, other)

    def __pow__(self, e: int):
        return self.ctx.pow(self, e)

    def inverse(self) -> "FieldElement":
        return self.ctx.inv(self)


# -- construction and irreducibility ------------------------------------------


def _check_characteristic(p: int) -> None:
    if p % 2 == 0:
        raise EvenCharacteristic(f"characteristic must be odd, got {p}")
    if p < 3:
        raise CharTooSmall(f"characteristic must be >= 3, got {p}")


def make_prime_field(p: int) -> FieldCtx:
    """F_p for an odd prime ``p`` (primality is the caller's responsibility)."""
    _check_characteristic(p)
    return FieldCtx(p, 1, (0, 1))


def make_ext_field(p: int, modulus: Sequence[int]) -> FieldCtx:
    """F_p[X]/(f) for a monic irreducible ``f`` of degree at least 2."""
    _check_characteristic(p)
    f = tuple(int(c) for c in modulus)
    if len(f) < 3:
        raise BadCoefficients("extension modulus must have degree >= 2")
    if any(not 0 <= c < p for c in f):
        raise BadCoefficients(f"modulus coefficients must lie in [0, {p})")
    if f[-1] != 1:
        raise NotMonic(f"modulus {format_coeffs(f)} is not monic")
    if not is_irreducible(p, f):
        raise NotIrreducible(f"modulus {format_coeffs(f)} is reducible over F_{p}")
    return FieldCtx(p, len(f) - 1, f)


def make_field(p: int, modulus: Optional[Sequence[int]] = None) -> FieldCtx:
    if modulus is None or len(modulus) == 2:
        if modulus is not None and tuple(modulus) != (0, 1):
            raise BadCoefficients("degree-1 modulus must be X, i.e. '0,1'")
        return make_prime_field(p)
    return make_ext_field(p, modulus)


def is_irreducible(p: int, f: Sequence[int]) -> bool:
    """Rabin's test: X^(p^m) = X mod f and gcd(X^(p^(m/l)) - X, f) = 1 for primes l | m."""
    f = list(f)
    if not f or f[-1] != 1:
        raise NotMonic("irreducibility test needs a monic polynomial")
    m = len(f) - 1
    if m < 1:
        raise BadCoefficients("polynomial must have degree >= 1")
    if m == 1:
        return True
    x = [0, 1]
    frob = [x]
    h = x
    for _ in range(m):
        h = poly.powmod(h, p, f, p)
        frob.append(h)
    if frob[m] != x:
        return False
    for ell in prime_factors(m):
        if poly.gcd(poly.sub(frob[m // ell], x, p), f, p) != [1]:
            return False
    return True


def find_irreducible(
    p: int, m: int, rng: random.Random, max_trials: Optional[int] = None
) -> list[int]:
    """Random monic irreducible polynomial of degree ``m`` over F_p."""
    if m < 2:
        raise ValueError(f"degree must be >= 2, got {m}")
    budget = 64 * m if max_trials is None else max_trials
    for _ in range(budget):
        f = [rng.randrange(p) for _ in range(m)] + [1]
        if is_irreducible(p, f):
            return f
    raise TrialBudgetExceeded(f"no irreducible degree-{m} polynomial in {budget} trials")


# -- text encoding -------------------------------------------------------------


def format_coeffs(coeffs: Iterable[int]) -> str:
    return ",".join(str(c) for c in coeffs)


def parse_coeffs(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise BadCoefficients(f"cannot parse coefficient list {text!r}") from None


def format_element(x: FieldElement) -> str:
    return format_coeffs(x.coeffs)


def parse_element(ctx: FieldCtx, text: str) -> FieldElement:
    return ctx.element(parse_coeffs(text))
