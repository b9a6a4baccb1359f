import numpy as np
import pytest

from qtfa.phase_space import FiniteLattice
from qtfa.testkit import seeded_random


def divisors(L):
    return [d for d in range(1, L + 1) if L % d == 0]


def divisor_lattices(L):
    return [FiniteLattice(L, a, b) for a in divisors(L) for b in divisors(L)]


def rand_signal(seed, L, normalize=True):
    return seeded_random("signal", seed, L, normalize=normalize)


def rand_op(seed, L):
    return seeded_random("operator", seed, (L, L))


def close(x, y, tol):
    return float(np.abs(np.asarray(x) - np.asarray(y)).max(initial=0.0)) <= tol


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# One line per acceptance criterion, echoed in the terminal summary so the
# results survive output capture.
ACCEPTANCE_LINES = []


def record_criterion(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title} -- {detail}"
    ACCEPTANCE_LINES.append((number, line))
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
