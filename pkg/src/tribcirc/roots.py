"""Roots of the characteristic cubic x^3 - P x^2 - Q x - R and the Binet formulas."""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import RepeatedRoots, ZeroRootNegativePower
from .recurrence import RecurrenceParams, _as_params

# relative gap below which two floating roots are treated as one
DISTINCT_RTOL = 1e-8
# digits used when Binet sums cancel far below the size of their terms
BINET_DPS = 40


@dataclass(frozen=True)
class CharRoots:
    alpha: complex
    beta: complex
    gamma: complex
    discriminant: int
    distinct: bool
    separation: float

    def __iter__(self):
        return iter((self.alpha, self.beta, self.gamma))


def cubic_discriminant(params) -> int:
    """Exact discriminant of x^3 - P x^2 - Q x - R; zero iff a root repeats."""
    p, q, r = _as_params(params).as_tuple
    a, b, c = -p, -q, -r
    return 18 * a * b * c - 4 * a**3 * c + a * a * b * b - 4 * b**3 - 27 * c * c


def solve_characteristic(params) -> CharRoots:
    """Roots of the characteristic cubic as companion-matrix eigenvalues.

    Roots come back sorted by (real, imag) descending.  ``distinct`` is
    decided by the exact integer discriminant and must also clear the
    floating separation threshold.
    """
    params = _as_params(params)
    p, q, r = params.as_tuple
    companion = np.array(
        [[p, q, r], [1, 0, 0], [0, 1, 0]],
        dtype=float,
    )
    found = [complex(z) for z in np.linalg.eigvals(companion)]
    found.sort(key=lambda z: (z.real, z.imag), reverse=True)

    scale = max(1.0, max(abs(z) for z in found))
    separation = min(
        abs(found[0] - found[1]), abs(found[0] - found[2]), abs(found[1] - found[2])
    )
    disc = cubic_discriminant(params)
    distinct = disc != 0 and separation > DISTINCT_RTOL * scale
    return CharRoots(*found, discriminant=disc, distinct=distinct, separation=separation)


def vieta_residuals(params, roots: CharRoots) -> tuple[float, float, float]:
    """Relative residuals of the three Vieta relations (sum, pair sum, product)."""
    p, q, r = _as_params(params).as_tuple
    a, b, c = roots
    return (
        abs(a + b + c - p) / max(1, abs(p)),
        abs(a * b + b * c + a * c + q) / max(1, abs(q)),
        abs(a * b * c - r) / max(1, abs(r)),
    )


def polished_roots(params, roots: CharRoots, dps: int = BINET_DPS) -> list:
    """Newton-refine the floating roots to ``dps`` digits (mpmath complex).

    Only meaningful for simple roots; the caller checks ``roots.distinct``.
    """
    p, q, r = _as_params(params).as_tuple
    out = []
    with mpmath.workdps(dps):
        eps = mpmath.mpf(10) ** (-dps)
        for z0 in roots:
            z = mpmath.mpc(z0)
            for _ in range(50):
                f = ((z - p) * z - q) * z - r
                df = (3 * z - 2 * p) * z - q
                if df == 0:
                    break
                step = f / df
                z -= step
                if abs(step) <= eps * max(1, abs(z)):
                    break
            out.append(z)
    return out


def binet_g(params, n: int, roots: CharRoots | None = None, dps: int = BINET_DPS) -> complex:
    """G_n from the three-term partial fraction form (distinct roots only)."""
    if roots is None:
        roots = solve_characteristic(params)
    if not roots.distinct:
        raise RepeatedRoots(f"roots of {_as_params(params).as_tuple} are not distinct")
    a, b, c = polished_roots(params, roots, dps)
    with mpmath.workdps(dps):
        value = (
            a**n / ((a - b) * (a - c))
            + b**n / ((b - a) * (b - c))
            + c**n / ((c - a) * (c - b))
        )
    return complex(value)


def binet_s(params, n: int, roots: CharRoots | None = None, dps: int = BINET_DPS) -> complex:
    """S_n as the power sum alpha^(n-1) + beta^(n-1) + gamma^(n-1)."""
    if roots is None:
        roots = solve_characteristic(params)
    k = n - 1
    if k < 0 and any(z == 0 for z in roots):
        raise ZeroRootNegativePower(f"S_{n} needs a negative power of a zero root")
    if roots.distinct:
        zs = polished_roots(params, roots, dps)
    else:
        # Newton stalls at multiple roots; power sums stay well conditioned
        zs = [mpmath.mpc(z) for z in roots]
    with mpmath.workdps(dps):
        value = mpmath.fsum(z**k for z in zs)
    return complex(value)


def root_sym2(params, roots: CharRoots, n: int, dps: int = BINET_DPS) -> complex:
    """alpha^n beta^n + beta^n gamma^n + alpha^n gamma^n from the roots."""
    zs = polished_roots(params, roots, dps) if roots.distinct else [mpmath.mpc(z) for z in roots]
    with mpmath.workdps(dps):
        a, b, c = (z**n for z in zs)
        value = a * b + b * c + a * c
    return complex(value)


__all__ = [
    "CharRoots",
    "RecurrenceParams",
    "binet_g",
    "binet_s",
    "cubic_discriminant",
    "polished_roots",
    "root_sym2",
    "solve_characteristic",
    "vieta_residuals",
]
