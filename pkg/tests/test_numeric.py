import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pullback_lvalues.bernoulli import dirichlet_L_exact_negative
from pullback_lvalues.qseries import QSeries, eigenform, theta_qexp
from pullback_lvalues.siegel import HalfIntegralIndex
from pullback_lvalues.special_values import alpha_direct, zeta_exact_even
from pullback_lvalues.numeric import (
    ConvergenceError,
    InsufficientPrecisionError,
    LValueResult,
    NumericConfig,
    completed_lambda_num,
    dirichlet_L_num,
    dirichlet_L_num_negative,
    klingen_coef_num,
    modular_L_num,
    petersson_norm_num,
    rankin_L_num,
    sym2_L_num,
    theorem_check_num,
    zeta_factor_value,
    zeta_num,
)


def within(res: LValueResult, truth: float) -> bool:
    return abs(res.value - truth) <= res.abs_error_bound


def monte_carlo_petersson(f, k, samples=200_000, y_max=4.0, seed=1):
    """Plain Monte Carlo over the box [-1/2, 1/2] x [sqrt(3)/2, y_max] masked to the domain."""
    rng = np.random.default_rng(seed)
    x = rng.uniform(-0.5, 0.5, samples)
    y = rng.uniform(math.sqrt(3) / 2, y_max, samples)
    inside = x * x + y * y >= 1
    a = np.array([float(c) for c in f.coeffs[:30]])
    n = np.arange(1, 30)
    vals = np.exp(2j * np.pi * np.outer(x, n) - 2 * np.pi * np.outer(y, n)) @ a[1:]
    g = np.where(inside, np.abs(vals) ** 2 * y ** (k - 2), 0.0)
    area = y_max - math.sqrt(3) / 2
    return area * g.mean(), area * g.std() / math.sqrt(samples)


# -- zeta -----------------------------------------------------------------------


def test_zeta_values():
    assert abs(zeta_num(2).value - math.pi**2 / 6) < 1e-10
    assert abs(zeta_num(12).value - float(zeta_exact_even(6))) < 1e-10
    assert zeta_num(0).value == -0.5
    assert abs(zeta_num(80).value - 1) < 1e-20


@given(st.floats(1.05, 60))
def test_zeta_bound_is_honest(s):
    res = zeta_num(s)
    assert within(res, float(mpmath.zeta(s)))


def test_zeta_pole():
    with pytest.raises(ValueError):
        zeta_num(1)


# -- Dirichlet L ----------------------------------------------------------------


def test_leibniz():
    res = dirichlet_L_num(1, -4)
    assert within(res, math.pi / 4)
    direct = dirichlet_L_num(1, -4, n_terms=20000, method="direct-sum")
    assert within(direct, math.pi / 4)


@given(st.floats(1.5, 30), st.sampled_from([-3, -4, -7, 5, 8]))
def test_two_summation_routes(s, D):
    a = dirichlet_L_num(s, D, method="direct-sum")
    b = dirichlet_L_num(s, D, method="hurwitz")
    assert abs(a.value - b.value) <= a.abs_error_bound + b.abs_error_bound


def test_large_s_limit():
    assert abs(dirichlet_L_num(60, -4).value - 1) < 1e-15


@pytest.mark.parametrize("r", range(1, 22))
@pytest.mark.parametrize("D", [-3, -4])
def test_functional_equation_against_exact(r, D):
    exact = float(dirichlet_L_exact_negative(r, D))
    res = dirichlet_L_num_negative(r, D)
    assert within(res, exact) or abs(res.value - exact) <= 1e-12 * abs(exact)
    if exact:
        assert abs(res.value - exact) / abs(exact) < 1e-8


def test_cohen_lemma_examples():
    assert abs(dirichlet_L_num_negative(11, -4).value - (-50521 / 2)) < 1e-8 * 50521 / 2
    assert abs(dirichlet_L_num_negative(11, -3).value - (-3694 / 3)) < 1e-8 * 3694 / 3
    assert abs(dirichlet_L_num_negative(1, -4).value - 0.5) < 1e-10


# -- L(s, f) ----------------------------------------------------------------------


def test_modular_L_cutoffs(delta_long):
    a = modular_L_num(delta_long, 12, 11, n_terms=1000)
    b = modular_L_num(delta_long, 12, 11, n_terms=2000)
    assert abs(a.value - b.value) <= a.abs_error_bound + b.abs_error_bound
    assert abs(modular_L_num(delta_long, 12, 80).value - 1) < 1e-15


def test_modular_L_rejects_critical_strip(delta_long):
    with pytest.raises(ConvergenceError):
        modular_L_num(delta_long, 12, 7)


@pytest.mark.parametrize("mode", ["sqrt", "linear"])
def test_lambda_route_matches_direct_sum(delta_long, mode):
    s = 11
    lam = completed_lambda_num(delta_long, 12, s, tail_bound=mode)
    direct = modular_L_num(delta_long, 12, s, tail_bound=mode)
    scale = (2 * math.pi) ** s / math.gamma(s)
    assert abs(lam.value * scale - direct.value) <= lam.abs_error_bound * scale + direct.abs_error_bound


def test_lambda_against_mpmath_integral(delta_long):
    # Lambda(s) = int_0^inf Delta(iy) y^(s-1) dy, folded onto [1, inf)
    a = [float(c) for c in delta_long.coeffs[:40]]
    f = lambda y: sum(a[n] * mpmath.exp(-2 * mpmath.pi * n * y) for n in range(1, 40))
    s = 7
    ref = mpmath.quad(lambda y: f(y) * (y ** (s - 1) + y ** (12 - s - 1)), [1, 2, 4, mpmath.inf])
    assert within(completed_lambda_num(delta_long, 12, s), float(ref)) or abs(
        completed_lambda_num(delta_long, 12, s).value - float(ref)
    ) < 1e-15


@pytest.mark.parametrize("split", [0.8, 1.1, 1.3])
def test_lambda_independent_of_split(delta_long, split):
    a = completed_lambda_num(delta_long, 12, 8)
    b = completed_lambda_num(delta_long, 12, 8, split=split)
    assert abs(a.value - b.value) <= a.abs_error_bound + b.abs_error_bound + 1e-18


@pytest.mark.parametrize("s", [6, 7, 8, 9, 10])
def test_lambda_functional_equation(delta_long, s):
    a = completed_lambda_num(delta_long, 12, s, split=1.1)
    b = completed_lambda_num(delta_long, 12, 12 - s, split=1.1)
    assert abs(a.value - b.value) < 1e-6


def test_lambda_functional_equation_weight_18():
    f = eigenform(18, 60)
    for s in (10, 12):
        a = completed_lambda_num(f, 18, s, split=1.2)
        b = completed_lambda_num(f, 18, 18 - s, split=1.2)
        # (-1)^(18/2) = -1
        assert abs(a.value + b.value) < 1e-12


# -- Rankin and symmetric square -----------------------------------------------------


@pytest.mark.parametrize("which,r1", [(1, 4), (2, 6)])
def test_rankin_leading_term(delta_long, which, r1):
    assert abs(rankin_L_num(delta_long, 12, which, 80).value - r1) < 1e-12


@pytest.mark.parametrize("which", [1, 2])
def test_rankin_cutoffs(delta_long, which):
    a = rankin_L_num(delta_long, 12, which, 11, n_terms=2000)
    b = rankin_L_num(delta_long, 12, which, 11, n_terms=4000)
    assert abs(a.value - b.value) <= a.abs_error_bound + b.abs_error_bound


def test_rankin_zeta_factor(delta_long):
    off = rankin_L_num(delta_long, 12, 1, 12.5)
    on = rankin_L_num(delta_long, 12, 1, 12.5, zeta_factor=True)
    assert on.value == off.value * zeta_factor_value(12.5, 12).value
    assert zeta_factor_value(12.5, 12).value == zeta_num(3).value


def test_rankin_brute_force(delta_long):
    r = theta_qexp(1, 301)
    expected = math.fsum(float(delta_long[n]) * int(r[n]) * n**-14.0 for n in range(1, 301))
    res = rankin_L_num(delta_long, 12, 1, 14, n_terms=300)
    assert abs(res.value - expected) < 1e-13
    full = rankin_L_num(delta_long, 12, 1, 14)
    assert abs(full.value - expected) <= full.abs_error_bound + res.abs_error_bound


def test_sym2(delta_long):
    assert abs(sym2_L_num(delta_long, 12, s=80, zeta_factor=False).value - 1) < 1e-15
    a = sym2_L_num(delta_long, 12, n_terms=25)
    b = sym2_L_num(delta_long, 12, n_terms=50)
    assert abs(a.value - b.value) <= a.abs_error_bound + b.abs_error_bound
    bare = sym2_L_num(delta_long, 12, zeta_factor=False)
    full = sym2_L_num(delta_long, 12)
    assert full.value == bare.value * zeta_num(22).value


def test_sym2_euler_product(delta_long):
    # L(s, Sym^2 f) = prod_p [(1 - a p^-s)(1 - b p^-s)(1 - ab... )]^-1 with alpha beta = p^(k-1)
    s = 22
    tau = delta_long
    prod = 1.0
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]:
        t, q = float(tau[p]), float(p) ** 11
        # roots alpha^2, alpha beta, beta^2 of the local factor
        c1 = t * t - q  # alpha^2 + alpha beta + beta^2
        c2 = q * (t * t - q)  # alpha^3 beta + alpha^2 beta^2 + alpha beta^3
        c3 = q**3
        x = p ** (-s)
        prod /= 1 - c1 * x + c2 * x * x - c3 * x**3
    assert abs(prod - sym2_L_num(delta_long, 12).value) < 1e-12


# -- Petersson -------------------------------------------------------------------------


def test_petersson_delta(delta_long):
    res = petersson_norm_num(delta_long, 12)
    assert abs(res.value - 1.0354e-6) / 1.0354e-6 < 1e-4
    assert abs(res.value - 1.035362056804321e-06) < 1e-18


def test_petersson_monte_carlo(delta_long):
    mc, se = monte_carlo_petersson(delta_long, 12)
    res = petersson_norm_num(delta_long, 12)
    tail = petersson_norm_num(delta_long, 12, NumericConfig(y_max=4.0)).value
    assert abs(mc - tail) < 5 * se
    assert abs(res.value - tail) / res.value < 1e-8


@given(st.fractions(min_value=Fraction(1, 10), max_value=10, max_denominator=20))
def test_petersson_scaling(c):
    f = eigenform(12, 60)
    a = petersson_norm_num(f, 12)
    b = petersson_norm_num(f.scale(c), 12, NumericConfig(rel_tol=1e-6))
    assert math.isclose(b.value, float(c) ** 2 * a.value, rel_tol=1e-12)


@pytest.mark.parametrize("nodes", [12, 16, 24])
def test_petersson_depth_doubling(delta_long, nodes):
    a = petersson_norm_num(delta_long, 12, NumericConfig(quad_nodes=nodes))
    b = petersson_norm_num(delta_long, 12, NumericConfig(quad_nodes=2 * nodes))
    assert abs(a.value - b.value) <= a.abs_error_bound + b.abs_error_bound


def test_petersson_needs_coefficients(delta_long):
    with pytest.raises(InsufficientPrecisionError):
        petersson_norm_num(delta_long.truncate(4), 12)
    with pytest.raises(ValueError):
        petersson_norm_num(eigenform(12, 40) + QSeries.one(40), 12)


# -- Klingen and the end-to-end check ------------------------------------------------------


def test_klingen_rank_one(delta_long):
    for T in (HalfIntegralIndex(1, 0, 0), HalfIntegralIndex(1, 2, 1), HalfIntegralIndex(0, 0, 1)):
        res = klingen_coef_num(12, T, delta_long)
        assert res.value == 1.0 and res.abs_error_bound == 0


def test_klingen_symmetric_in_b(delta_long):
    a = klingen_coef_num(12, HalfIntegralIndex(1, 1, 1), delta_long)
    b = klingen_coef_num(12, HalfIntegralIndex(1, -1, 1), delta_long)
    assert a == b


def test_klingen_rejects_other_indices(delta_long):
    with pytest.raises(ValueError):
        klingen_coef_num(12, HalfIntegralIndex(1, 0, 2), delta_long)
    with pytest.raises(ValueError):
        klingen_coef_num(12, HalfIntegralIndex(2, 0, 0), delta_long)


def test_klingen_values_are_rational(delta_long):
    # with the default normalizations the two Klingen coefficients come out as 1242/7 and 92/7
    x1 = klingen_coef_num(12, HalfIntegralIndex(1, 0, 1), delta_long)
    x2 = klingen_coef_num(12, HalfIntegralIndex(1, 1, 1), delta_long)
    assert abs(x1.value - 1242 / 7) <= x1.abs_error_bound + 1e-9
    assert abs(x2.value - 92 / 7) <= x2.abs_error_bound + 1e-9


def test_theorem_check_weight14():
    rep = theorem_check_num(14)
    assert rep.lhs == 0 and rep.rhs == 0 and rep.rel_err == 0


def test_theorem_check_report_shape():
    rep = theorem_check_num(12).to_json()
    assert set(rep) >= {"k", "lhs", "rhs", "rel_err", "flags", "sub_values"}
    assert math.isclose(rep["rhs"], float(alpha_direct(12).value), rel_tol=1e-15)
    assert len(rep["by_flags"]) == 4
    for sub in rep["sub_values"].values():
        assert sub["abs_error_bound"] >= 0


def test_spectral_identity_at_weight_12():
    rep = theorem_check_num(12)
    assert rep.spectral_identity["rel_err"] < 1e-10
    assert {"rankin_zeta": False, "sym2_zeta": True} in rep.spectral_identity["flags_within_tol"]


def test_spectral_identity_at_weight_16():
    rep = theorem_check_num(16)
    assert rep.spectral_identity["rel_err"] < 1e-10


def test_theorem_check_deterministic():
    a, b = theorem_check_num(12).to_json(), theorem_check_num(12).to_json()
    assert a == b
