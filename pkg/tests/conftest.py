import functools
import random

import pytest

from ammroot.field import find_irreducible, make_ext_field, make_prime_field
from ammroot.ntcore import is_probable_prime

QMAX = 343
MODULUS_SEED = 7


@functools.lru_cache(maxsize=None)
def ext_field(p, m, seed=MODULUS_SEED):
    return make_ext_field(p, find_irreducible(p, m, random.Random(seed * 1000 + p * 10 + m)))


@functools.lru_cache(maxsize=None)
def small_fields(qmax=QMAX):
    """Every odd prime field and one extension per prime power, q <= qmax."""
    out = []
    for p in range(3, qmax + 1, 2):
        if not is_probable_prime(p):
            continue
        out.append(make_prime_field(p))
        m = 2
        while p**m <= qmax:
            out.append(ext_field(p, m))
            m += 1
    return tuple(sorted(out, key=lambda c: c.q))


@pytest.fixture(scope="session")
def fields():
    return small_fields()


_acceptance_lines = []


@pytest.fixture
def report_criterion(request):
    """Record a one-line acceptance verdict; printed in the terminal summary."""

    def record(name, passed, detail=""):
        _acceptance_lines.append(f"{name}: {'PASS' if passed else 'FAIL'}  {detail}".rstrip())
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
