import itertools

import numpy as np
import pytest

from tribcirc.recurrence import RecurrenceParams
from tribcirc.roots import solve_characteristic

GRID = [RecurrenceParams(*t) for t in itertools.product(range(-2, 4), repeat=3)]
DISTINCT_GRID = [p for p in GRID if solve_characteristic(p).distinct]


def power_iteration_norm(a: np.ndarray, iters: int = 5000, tol: float = 1e-15) -> float:
    """Largest singular value by power iteration on A^T A (dense, no eigensolver)."""
    ata = a.T @ a
    v = np.cos(np.arange(1, ata.shape[0] + 1))  # fixed start, not orthogonal to anything special
    v /= np.linalg.norm(v)
    lam = 0.0
    for _ in range(iters):
        w = ata @ v
        norm = np.linalg.norm(w)
        if norm == 0:
            return 0.0
        v = w / norm
        if abs(norm - lam) <= tol * norm:
            break
        lam = norm
    return float(np.sqrt(v @ ata @ v))


def rel_err(a, b) -> float:
    return abs(complex(a) - complex(b)) / max(1.0, abs(complex(b)))


@pytest.fixture(scope="session")
def grid():
    return GRID


@pytest.fixture(scope="session")
def distinct_grid():
    return DISTINCT_GRID


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
