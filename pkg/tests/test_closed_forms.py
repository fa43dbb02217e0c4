import cmath
import random
from fractions import Fraction

import pytest

from tribcirc import closed_forms as cf
from tribcirc.circulant import (
    build_g_circulant,
    build_s_circulant,
    det_oracle_exact,
    dft_eigenvalues,
    spectral_norm_oracle,
)
from tribcirc.errors import (
    DegenerateCharacter,
    DegenerateDenominator,
    IndexUnderflow,
    NegativeEntriesUnsupported,
    SingularParameterSum,
    ZeroLeadingTerm,
    ZeroRCoefficient,
)
from tribcirc.recurrence import SequencePreset, all_presets, resolve_preset
from tribcirc.roots import root_sym2, solve_characteristic

from conftest import DISTINCT_GRID, rel_err


class TestEigenvalues:
    def test_g_order_two(self):
        assert cf.eig_g_closed((1, 1, 1), 2, 0) == pytest.approx(1)
        assert cf.eig_g_closed((1, 1, 1), 2, 1) == pytest.approx(-1)

    def test_g_order_one(self):
        assert cf.eig_g_closed((1, 1, 1), 1, 0) == pytest.approx(0)

    def test_s_examples(self):
        assert cf.eig_s_closed((0, 1, 1), 2, 0) == pytest.approx(3)
        assert cf.eig_s_closed((0, 1, 1), 2, 1) == pytest.approx(3)
        assert cf.eig_s_closed((1, 1, 1), 1, 0) == pytest.approx(3)

    def test_s_needs_r(self):
        with pytest.raises(ZeroRCoefficient):
            cf.eig_s_closed((1, 1, 0), 3, 0)

    def test_degenerate_character(self):
        # P + Q + R = 1 makes t = 1 a root of the denominator
        with pytest.raises(DegenerateCharacter):
            cf.eig_g_closed((1, 1, -1), 4, 0)

    def test_j_range(self):
        with pytest.raises(ValueError):
            cf.eig_g_closed((1, 1, 1), 3, 3)

    @pytest.mark.parametrize("params", DISTINCT_GRID[::4], ids=str)
    def test_match_dft(self, params):
        for n in range(1, 9):
            spectrum = dft_eigenvalues(build_g_circulant(params, n))
            for j in range(n):
                try:
                    value = cf.eig_g_closed(params, n, j)
                except DegenerateCharacter:
                    continue
                assert rel_err(value, spectrum[j]) <= 1e-8


class TestNorms:
    def test_g_examples(self):
        assert cf.norm_g_closed((1, 1, 1), 2) == 1
        assert cf.norm_g_closed((1, 1, 1), 1) == 0
        assert cf.norm_g_closed((1, 1, 0), 3) == 2

    def test_s_examples(self):
        assert cf.norm_s_closed((0, 1, 1), 2) == 3
        assert cf.norm_s_closed((1, 1, 1), 1) == 3
        # (Y_4 + Y_2) / 2 with Y = 3, 1, 3, 7, 11
        assert cf.norm_s_closed((1, 1, 1), 3) == 7
        assert spectral_norm_oracle(build_s_circulant((1, 1, 1), 3)) == pytest.approx(7)

    def test_singular_sum(self):
        with pytest.raises(SingularParameterSum):
            cf.norm_g_closed((2, 0, -1), 3)

    def test_guard(self):
        # G_4 = -2 for (-2, 0, 0)
        with pytest.raises(NegativeEntriesUnsupported):
            cf.norm_g_closed((-2, 0, 0), 3)
        # unguarded value is still lambda_0, i.e. the row sum 0 + 1 - 2
        assert cf.norm_g_closed((-2, 0, 0), 3, guard=False) == -1

    def test_guard_admits_zero_row(self):
        assert cf.perron_guard([0])
        assert not cf.perron_guard([1, -1])


class TestDeterminants:
    def test_g_order_two(self):
        assert complex(cf.det_g_closed((1, 1, 1), 2)) == pytest.approx(-1)

    def test_g_order_one(self):
        assert complex(cf.det_g_closed((1, 1, 1), 1)) == pytest.approx(0, abs=1e-25)

    def test_g_padovan_order_three(self):
        # C_3(G) for Padovan params is circ(0, 1, 0), a 3-cycle permutation
        exact = det_oracle_exact(build_g_circulant((0, 1, 1), 3))
        assert exact == 1
        assert complex(cf.det_g_closed((0, 1, 1), 3)) == pytest.approx(1)

    def test_s_examples(self):
        assert complex(cf.det_s_closed((0, 1, 1), 2)) == pytest.approx(9)
        assert complex(cf.det_s_closed((1, 1, 1), 2)) == pytest.approx(8)
        assert complex(cf.det_s_closed((1, 1, 1), 1)) == pytest.approx(3)

    def test_s_odd_orders_match_oracle(self):
        # the sign of the quadratic roots matters only for odd n
        for n in (1, 3, 5, 7):
            exact = det_oracle_exact(build_s_circulant((1, 1, 1), n))
            assert rel_err(cf.det_s_closed((1, 1, 1), n), exact) <= 1e-12

    def test_zero_leading_term(self):
        # S_3 - 3 = 0 for Tribonacci-Lucas
        with pytest.raises(ZeroLeadingTerm):
            cf.det_factors_s((1, 1, 1), 2)
        with pytest.raises(ZeroLeadingTerm):
            cf.det_s_closed((1, 1, 1), 2, strict=True)

    def test_zero_leading_term_limit_matches_oracle(self):
        hits = 0
        for params in DISTINCT_GRID:
            for n in range(1, 11):
                for build, closed, factors in (
                    (build_g_circulant, cf.det_g_closed, cf.det_factors_g),
                    (build_s_circulant, cf.det_s_closed, cf.det_factors_s),
                ):
                    try:
                        factors(params, n)
                        continue
                    except ZeroLeadingTerm:
                        pass
                    except ZeroRCoefficient:
                        continue
                    try:
                        value = closed(params, n)
                    except DegenerateDenominator:
                        continue
                    hits += 1
                    exact = det_oracle_exact(build(params, n))
                    assert rel_err(value, exact) <= 1e-12
        assert hits > 50

    def test_factor_vieta(self):
        for params in DISTINCT_GRID[::5]:
            for n in range(1, 10):
                for build in (cf.det_factors_g, cf.det_factors_s):
                    try:
                        f = build(params, n)
                    except (ZeroLeadingTerm, ZeroRCoefficient):
                        continue
                    total = f.k_root + f.l_root
                    prod = f.k_root * f.l_root
                    assert rel_err(total, f.y / f.x) <= 1e-9
                    assert rel_err(prod, f.z / f.x) <= 1e-9

    def test_sym2_is_exact_and_matches_roots(self):
        for params in DISTINCT_GRID[::5]:
            roots = solve_characteristic(params)
            for n in range(1, 13):
                exact = cf.sym2_exact(params, n)
                assert exact.denominator == 1
                assert rel_err(root_sym2(params, roots, n), exact) <= 1e-8

    def test_kl_swap_symmetry(self):
        for params in DISTINCT_GRID[::6]:
            for n in range(1, 8):
                try:
                    f = cf.det_factors_g(params, n)
                except ZeroLeadingTerm:
                    continue
                k, l = f.k_root, f.l_root
                a = 1 - k**n - l**n + k**n * l**n
                b = 1 - l**n - k**n + l**n * k**n
                assert rel_err(a, b) <= 1e-12
                # principal-branch K, L from the raw formula give the same value
                root = cmath.sqrt(float(f.y) ** 2 - 4 * float(f.x) * float(f.z))
                k2 = (float(f.y) - root) / (2 * float(f.x))
                l2 = (float(f.y) + root) / (2 * float(f.x))
                assert rel_err(
                    (1 - k2**n) * (1 - l2**n), (1 - k**n) * (1 - l**n)
                ) <= 1e-9

    def test_denominator_is_product_of_char_denominators(self):
        for params in DISTINCT_GRID[::7]:
            for n in range(1, 9):
                brute = 1 + 0j
                for j in range(n):
                    t = cmath.exp(-2j * cmath.pi * j / n)
                    brute *= params.p * t + params.q * t**2 + params.r * t**3 - 1
                exact = cf.det_denominator(params, n)
                assert rel_err(brute, exact) <= 1e-9


class TestProductIdentities:
    def test_random_triples(self):
        rng = random.Random(2024)
        for n in range(1, 17):
            for _ in range(20):
                x, y, z = (complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(3))
                brute = cf.roots_of_unity_product([x, -y], n)
                assert rel_err(cf.linear_product_identity(x, y, n), brute) <= 1e-9
                brute = cf.roots_of_unity_product([x, -y, z], n)
                assert rel_err(cf.quadratic_product_identity(x, y, z, n), brute) <= 1e-9


class TestSpecialIdentities:
    def test_perrin(self):
        assert cf.special_norm_identity(SequencePreset("perrin"), 2) == 3

    def test_fibonacci(self):
        assert cf.special_norm_identity(SequencePreset("fibonacci"), 3) == 2

    def test_jacobsthal(self):
        assert cf.special_norm_identity(SequencePreset("jacobsthal"), 3) == 2
        assert spectral_norm_oracle(build_g_circulant((1, 2, 0), 3)) == pytest.approx(2)

    def test_index_underflow(self):
        with pytest.raises(IndexUnderflow):
            cf.special_norm_identity(SequencePreset("tribonacci"), 0)
        with pytest.raises(IndexUnderflow):
            cf.special_norm_identity(SequencePreset("tribonacci_lucas"), 0)

    @pytest.mark.parametrize("preset", all_presets(), ids=lambda p: p.label)
    def test_matches_general_closed_form(self, preset):
        params, _ = resolve_preset(preset)
        for n in range(1, 16):
            identity = cf.special_norm_identity(preset, n)
            assert isinstance(identity, Fraction)
            assert cf.preset_closed_norm(preset, n) == float(identity)
