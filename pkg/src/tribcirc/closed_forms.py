"""Closed-form eigenvalues, spectral norms and determinants of C_n(G) and C_n(S).

Both matrices share the eigenvalue shape

    lambda_j = (x + b t + z t^2) / (P t + Q t^2 + R t^3 - 1),   t = w^(-j)

with (x, b, z) built from three consecutive sequence terms.  The
determinant factors the numerator product as x^n (1 - K^n)(1 - L^n), where
K and L are the roots of x u^2 - y u + z with y = -b, and the denominator
product as (-1)^n (1 - p_n - R^n + M), where p_n is the n-th power sum of
the characteristic roots and M their second elementary symmetric function
of n-th powers.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import classical
from .errors import (
    DegenerateCharacter,
    DegenerateDenominator,
    IndexUnderflow,
    NegativeEntriesUnsupported,
    RepeatedRoots,
    SingularParameterSum,
    ZeroLeadingTerm,
    ZeroRCoefficient,
)
from .recurrence import (
    PresetName,
    SequenceKind,
    SequencePreset,
    _as_params,
    gen_g,
    gen_s,
    power_sums,
    resolve_preset,
)
from .roots import CharRoots, solve_characteristic

DEGENERATE_ATOL = 1e-12
DET_DPS = 30


def _character(n: int, j: int) -> complex:
    j %= n
    if j == 0:
        return 1 + 0j
    return cmath.exp(-2j * cmath.pi * j / n)


def _eigen_denominator(params, t: complex) -> complex:
    p, q, r = params.as_tuple
    return p * t + q * t * t + r * t * t * t - 1


def _eig(params, n, j, x, b, z) -> complex:
    if not 0 <= j < n:
        raise ValueError(f"j must lie in [0, {n - 1}], got {j}")
    t = _character(n, j)
    den = _eigen_denominator(params, t)
    if abs(den) <= DEGENERATE_ATOL:
        raise DegenerateCharacter(f"eigenvalue denominator vanishes at n={n}, j={j}")
    return (float(x) + float(b) * t + float(z) * t * t) / den


def _check_order(n):
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")


def _g_terms(params, n):
    g = gen_g(params, n + 3)
    return g[n], g[n + 1], g[n + 2]


def _s_terms(params, n):
    s = gen_s(params, n + 3)
    return s[n], s[n + 1], s[n + 2]


def eig_g_closed(params, n: int, j: int) -> complex:
    """lambda_j(C_n(G)) from G_n, G_{n+1}, G_{n+2}."""
    params = _as_params(params)
    _check_order(n)
    g0, g1, g2 = _g_terms(params, n)
    return _eig(params, n, j, g1, g2 - params.p * g1 - 1, params.r * g0)


def eig_s_closed(params, n: int, j: int) -> complex:
    """lambda_j(C_n(S)) from S_n, S_{n+1}, S_{n+2}."""
    params = _as_params(params)
    _check_order(n)
    if params.r == 0:
        raise ZeroRCoefficient("S is undefined for R = 0")
    s0, s1, s2 = _s_terms(params, n)
    p, q, r = params.as_tuple
    return _eig(params, n, j, s1 - 3, s2 - p * s1 + 2 * p, r * s0 + q)


def perron_guard(first_row) -> bool:
    """True when every entry is >= 0.

    Then lambda_0 is the row sum and dominates every |lambda_j| by the
    triangle inequality.  The all-zero row is admitted (its norm is 0).
    """
    return all(c >= 0 for c in first_row)


def _norm(params, row, numerator, guard):
    p, q, r = params.as_tuple
    if p + q + r == 1:
        raise SingularParameterSum("P + Q + R - 1 = 0")
    if guard and not perron_guard(row):
        raise NegativeEntriesUnsupported("first row has a negative entry")
    return float(Fraction(numerator) / (p + q + r - 1))


def norm_g_closed(params, n: int, guard: bool = True) -> float:
    """||C_n(G)||_2 as (G_{n+2} + (1-P) G_{n+1} + R G_n - 1) / (P+Q+R-1).

    The value is lambda_0, which is the norm only when lambda_0 has maximal
    modulus; ``guard=True`` refuses rows where that is not guaranteed.
    """
    params = _as_params(params)
    _check_order(n)
    g = gen_g(params, n + 3)
    p, _, r = params.as_tuple
    numerator = g[n + 2] + (1 - p) * g[n + 1] + r * g[n] - 1
    return _norm(params, g[1 : n + 1], numerator, guard)


def norm_s_closed(params, n: int, guard: bool = True) -> float:
    """||C_n(S)||_2 as (S_{n+2} + (1-P) S_{n+1} + R S_n + 2P + Q - 3) / (P+Q+R-1)."""
    params = _as_params(params)
    _check_order(n)
    if params.r == 0:
        raise ZeroRCoefficient("S is undefined for R = 0")
    s = gen_s(params, n + 3)
    p, q, r = params.as_tuple
    numerator = s[n + 2] + (1 - p) * s[n + 1] + r * s[n] + 2 * p + q - 3
    return _norm(params, s[1 : n + 1], numerator, guard)


@dataclass(frozen=True)
class DetFactors:
    """Pieces of the determinant closed form.

    The eigenvalue numerator is x - y t + z t^2 = x (1 - K t)(1 - L t),
    so K + L = y / x and K L = z / x.  ``sym2`` is the exact
    alpha^n beta^n + beta^n gamma^n + alpha^n gamma^n.
    """

    x: Fraction
    y: Fraction
    z: Fraction
    k_root: complex
    l_root: complex
    sym2: Fraction


def sym2_exact(params, n: int) -> Fraction:
    """e2(alpha^n, beta^n, gamma^n) = (p_n^2 - p_2n) / 2 via power sums."""
    ps = power_sums(params, 2 * n + 1)
    return (ps[n] ** 2 - ps[2 * n]) / 2


def _quadratic_roots(x, y, z, dps):
    """Roots (K, L) of x u^2 - y u + z, K taking the minus sign of the principal root."""
    with mpmath.workdps(dps):
        xm, ym, zm = (mpmath.mpf(v.numerator) / v.denominator for v in (x, y, z))
        disc = ym * ym - 4 * xm * zm
        root = mpmath.sqrt(mpmath.mpc(disc))
        minus, plus = ym - root, ym + root
        # the smaller-modulus root comes from Vieta to dodge cancellation
        if abs(plus) >= abs(minus):
            l_root = plus / (2 * xm)
            k_root = (2 * zm) / plus if plus != 0 else mpmath.mpc(0)
        else:
            k_root = minus / (2 * xm)
            l_root = (2 * zm) / minus
    return k_root, l_root


def _factors(params, n, x, y, z, dps) -> tuple[DetFactors, mpmath.mpc, mpmath.mpc]:
    if x == 0:
        raise ZeroLeadingTerm(f"leading coefficient vanishes at n={n}")
    k_root, l_root = _quadratic_roots(x, y, z, dps)
    factors = DetFactors(x, y, z, complex(k_root), complex(l_root), sym2_exact(params, n))
    return factors, k_root, l_root


def det_factors_g(params, n: int, dps: int = DET_DPS) -> DetFactors:
    params = _as_params(params)
    _check_order(n)
    g0, g1, g2 = _g_terms(params, n)
    return _factors(params, n, g1, params.p * g1 - g2 + 1, params.r * g0, dps)[0]


def det_factors_s(params, n: int, dps: int = DET_DPS) -> DetFactors:
    params = _as_params(params)
    _check_order(n)
    if params.r == 0:
        raise ZeroRCoefficient("S is undefined for R = 0")
    s0, s1, s2 = _s_terms(params, n)
    p, q, r = params.as_tuple
    return _factors(params, n, s1 - 3, -(s2 - p * s1 + 2 * p), r * s0 + q, dps)[0]


def det_denominator(params, n: int) -> Fraction:
    """(-1)^n (1 - p_n - R^n + M); exact product of the eigenvalue denominators."""
    params = _as_params(params)
    ps = power_sums(params, n + 1)
    return (-1) ** n * (1 - ps[n] - Fraction(params.r) ** n + sym2_exact(params, n))


def _det(params, n, x, y, z, roots, dps, strict) -> mpmath.mpc:
    if roots is None:
        roots = solve_characteristic(params)
    if not roots.distinct:
        raise RepeatedRoots(f"roots of {params.as_tuple} are not distinct")
    den = det_denominator(params, n)
    if den == 0:
        raise DegenerateDenominator(f"a characteristic root is an {n}-th root of unity")
    if x == 0:
        if strict:
            raise ZeroLeadingTerm(f"leading coefficient vanishes at n={n}")
        # x -> 0 limit: K -> z/y and x L -> y, so x^n (1-K^n)(1-L^n) -> z^n - y^n
        value = (z**n - y**n) / den
        with mpmath.workdps(dps):
            return mpmath.mpc(mpmath.mpf(value.numerator) / value.denominator)
    _, k_root, l_root = _factors(params, n, x, y, z, dps)
    with mpmath.workdps(dps):
        xm = mpmath.mpf(x.numerator) / x.denominator
        num = xm**n * (1 - k_root**n) * (1 - l_root**n)
        return num / (mpmath.mpf(den.numerator) / den.denominator)


def det_g_closed(params, n: int, roots: CharRoots | None = None, dps: int = DET_DPS,
                 strict: bool = False) -> mpmath.mpc:
    """det C_n(G) = G_{n+1}^n (1 - K^n)(1 - L^n) / ((-1)^n (1 - p_n - R^n + M)).

    Returned as an mpmath complex so large orders do not overflow.  When
    G_{n+1} = 0 the quotient is taken at its limit unless ``strict``, which
    raises :class:`ZeroLeadingTerm` instead.
    """
    params = _as_params(params)
    _check_order(n)
    g0, g1, g2 = _g_terms(params, n)
    return _det(params, n, g1, params.p * g1 - g2 + 1, params.r * g0, roots, dps, strict)


def det_s_closed(params, n: int, roots: CharRoots | None = None, dps: int = DET_DPS,
                 strict: bool = False) -> mpmath.mpc:
    """det C_n(S) with leading term S_{n+1} - 3 and the quadratic roots of the S numerator."""
    params = _as_params(params)
    _check_order(n)
    if params.r == 0:
        raise ZeroRCoefficient("S is undefined for R = 0")
    s0, s1, s2 = _s_terms(params, n)
    p, q, r = params.as_tuple
    return _det(params, n, s1 - 3, -(s2 - p * s1 + 2 * p), r * s0 + q, roots, dps, strict)


def _need(n, *indices):
    if min(indices) < 0:
        raise IndexUnderflow(f"n={n} references a negative classical index")
    return max(indices) + 1


def special_norm_identity(preset: SequencePreset, n: int) -> Fraction:
    """Right-hand side of the named-sequence norm identity, from classical sequences."""
    name = preset.name
    resolve_preset(preset)
    if name is PresetName.TRIBONACCI:
        t = classical.tribonacci(_need(n, n + 1, n - 1))
        return Fraction(t[n + 1] + t[n - 1] - 1, 2)
    if name is PresetName.PADOVAN:
        a = classical.padovan(_need(n, n + 1))
        return Fraction(a[n + 1] - 1)
    if name is PresetName.FIBONACCI:
        f = classical.fibonacci(_need(n, n + 1))
        return Fraction(f[n + 1] - 1)
    if name is PresetName.K_FIBONACCI:
        k = preset.k
        f = classical.k_fibonacci(k, _need(n, n, n - 1))
        return Fraction(f[n] + f[n - 1] - 1, k)
    if name is PresetName.PELL:
        b = classical.pell(_need(n, n + 1, n))
        return Fraction(b[n + 1] - b[n] - 1, 2)
    if name is PresetName.JACOBSTHAL:
        jac = classical.jacobsthal(_need(n, n + 1))
        return Fraction(jac[n + 1] - 1, 2)
    if name is PresetName.TRIBONACCI_LUCAS:
        y = classical.tribonacci_lucas(_need(n, n + 1, n - 1))
        return Fraction(y[n + 1] + y[n - 1], 2)
    if name is PresetName.PERRIN:
        zs = classical.perrin(_need(n, n + 4))
        return Fraction(zs[n + 4] - 2)
    raise AssertionError(name)


def preset_closed_norm(preset: SequencePreset, n: int, guard: bool = True) -> float:
    params, kind = resolve_preset(preset)
    if kind is SequenceKind.S:
        return norm_s_closed(params, n, guard)
    return norm_g_closed(params, n, guard)


def linear_product_identity(x: complex, y: complex, n: int) -> complex:
    """prod_k (x - y w^-k) over the n-th roots of unity, in closed form."""
    return x**n - y**n


def quadratic_product_identity(x: complex, y: complex, z: complex, n: int) -> complex:
    """prod_k (x - y w^-k + z w^-2k) as x^n (1 - K^n - L^n + K^n L^n).

    K and L are (y -/+ sqrt(y^2 - 4xz)) / 2x with the principal root.
    """
    root = cmath.sqrt(y * y - 4 * x * z)
    k_root = (y - root) / (2 * x)
    l_root = (y + root) / (2 * x)
    kn, ln = k_root**n, l_root**n
    return x**n * (1 - kn - ln + kn * ln)


def roots_of_unity_product(coeffs, n: int) -> complex:
    """Brute-force prod_k sum_i coeffs[i] w^(-ik) with w = exp(2 pi i / n)."""
    total = 1 + 0j
    for k in range(n):
        t = cmath.exp(-2j * cmath.pi * k / n)
        total *= sum(c * t**i for i, c in enumerate(coeffs))
    return total
