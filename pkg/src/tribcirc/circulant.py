"""Circulant matrices with exact first rows, and closed-form-free oracles.

Nothing here uses a sequence identity: eigenvalues come from the DFT of the
first row, the determinant either from their product or from exact
fraction-free elimination.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .errors import OrderCapExceeded
from .recurrence import gen_g, gen_s

DEFAULT_ORDER_CAP = 64


@dataclass(frozen=True)
class CirculantMatrix:
    """Order-n circulant, row i is the first row cyclically shifted right by i."""

    first_row: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.first_row:
            raise ValueError("a circulant needs at least one entry")
        object.__setattr__(self, "first_row", tuple(Fraction(c) for c in self.first_row))

    @property
    def order(self) -> int:
        return len(self.first_row)

    def entry(self, i: int, j: int) -> Fraction:
        """Entry at 1-based position (i, j)."""
        n = self.order
        return self.first_row[j - i] if j >= i else self.first_row[n + j - i]

    def rows(self) -> list[list[Fraction]]:
        n = self.order
        c = self.first_row
        return [[c[(j - i) % n] for j in range(n)] for i in range(n)]

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.rows()])


@dataclass(frozen=True)
class Spectrum:
    """values[j] = sum_k c_k w^(-jk), w = exp(2 pi i / n)."""

    values: np.ndarray

    def __len__(self):
        return len(self.values)

    def __getitem__(self, j):
        return complex(self.values[j])


def circ(*entries) -> CirculantMatrix:
    return CirculantMatrix(tuple(entries))


def build_g_circulant(params, n: int) -> CirculantMatrix:
    """C_n(G) with first row G_1, ..., G_n."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return CirculantMatrix(tuple(gen_g(params, n + 1)[1:]))


def build_s_circulant(params, n: int) -> CirculantMatrix:
    """C_n(S) with first row S_1, ..., S_n (S_0 is never used)."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return CirculantMatrix(tuple(gen_s(params, n + 1)[1:]))


def dft_eigenvalues(m: CirculantMatrix, dps: int | None = None) -> Spectrum:
    """Eigenvalues of a circulant from the DFT of its first row.

    With ``dps=None`` this is a double precision FFT (numpy uses the same
    ``exp(-2 pi i jk / n)`` kernel).  An integer ``dps`` switches to direct
    summation in mpmath at that many digits, rounded to complex at the end.
    """
    if dps is None:
        row = np.array([float(c) for c in m.first_row])
        return Spectrum(np.fft.fft(row))
    n = m.order
    values = []
    with mpmath.workdps(dps):
        row = [mpmath.mpf(c.numerator) / c.denominator for c in m.first_row]
        for j in range(n):
            total = mpmath.fsum(
                row[k] * mpmath.expjpi(mpmath.mpf(-2 * ((j * k) % n)) / n) for k in range(n)
            )
            values.append(complex(total))
    return Spectrum(np.array(values, dtype=complex))


def dft_direct(m: CirculantMatrix) -> np.ndarray:
    """Plain O(n^2) double precision evaluation of the DFT sum."""
    n = m.order
    row = [float(c) for c in m.first_row]
    return np.array(
        [sum(row[k] * cmath.exp(-2j * cmath.pi * ((j * k) % n) / n) for k in range(n)) for j in range(n)]
    )


def spectral_norm_oracle(m: CirculantMatrix) -> float:
    """Largest eigenvalue modulus over all j; the 2-norm since circulants are normal."""
    return float(np.max(np.abs(dft_eigenvalues(m).values)))


def det_oracle_spectral(m: CirculantMatrix) -> mpmath.mpc:
    """Product of the DFT eigenvalues.

    Accumulated in mpmath (53-bit mantissa, unbounded exponent) so large
    orders do not overflow.
    """
    values = dft_eigenvalues(m).values
    with mpmath.workprec(53):
        total = mpmath.mpc(1)
        for v in values:
            total *= mpmath.mpc(complex(v))
    return total


def det_oracle_exact(m: CirculantMatrix, cap: int = DEFAULT_ORDER_CAP) -> Fraction:
    """Exact determinant by Bareiss fraction-free elimination."""
    n = m.order
    if n > cap:
        raise OrderCapExceeded(f"order {n} exceeds the exact-determinant cap {cap}")
    rows = m.rows()
    if all(v.denominator == 1 for v in m.first_row):
        a = [[v.numerator for v in row] for row in rows]
        return Fraction(bareiss_det(a))
    return bareiss_det(rows)


def bareiss_det(a):
    """Determinant of a square matrix of ints or Fractions, exactly.

    ``a`` is consumed.  Every division in the Bareiss recurrence is exact,
    so integer input stays integral.
    """
    n = len(a)
    if n == 0:
        return 1
    exact_int = all(isinstance(v, int) for row in a for v in row)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0 * a[0][0]
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = num // prev if exact_int else num / prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def is_normal(m) -> bool:
    """Exact check that M M^T == M^T M.

    Accepts a :class:`CirculantMatrix` (materialized here) or a list of rows.
    """
    rows = m.rows() if isinstance(m, CirculantMatrix) else [list(r) for r in m]
    n = len(rows)
    cols = [[rows[i][j] for i in range(n)] for j in range(n)]
    mmt = [[sum(x * y for x, y in zip(rows[i], rows[j])) for j in range(n)] for i in range(n)]
    mtm = [[sum(x * y for x, y in zip(cols[i], cols[j])) for j in range(n)] for i in range(n)]
    return mmt == mtm
