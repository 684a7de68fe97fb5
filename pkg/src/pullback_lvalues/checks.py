"""Verification suites behind ``pullback-lvalues verify``.

Each check yields a :class:`Check` carrying the measured and expected values,
so a failing line says what went wrong without rerunning anything.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator

from sympy import primerange

from .bernoulli import bernoulli_number, cohen_H, dirichlet_L_exact_negative
from .exact import format_rational
from .qseries import delta_qexp, eisenstein_qexp, sigma_power
from .siegel import HalfIntegralIndex, e1e2_q1q2q3_coef, e3_q1q2q3_coef, siegel_A2k
from .special_values import (
    PUBLISHED_TABLE1,
    PUBLISHED_TABLE2,
    alpha_direct,
    alpha_from_pieces,
    published_alpha,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    measured: str
    expected: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}: measured {self.measured}; expected {self.expected}"


def _bernoulli_checks(upto: int = 60) -> Iterator[Check]:
    bad = [
        n
        for n in range(1, upto + 1)
        if sum((comb(n + 1, j) * bernoulli_number(j) for j in range(n + 1)), Fraction(0)) != 0
    ]
    yield Check(
        f"bernoulli recurrence n<={upto}",
        not bad,
        f"violations at n={bad[:5]}" if bad else "none",
        "none",
    )
    # von Staudt-Clausen: B_2n + sum_{(p-1) | 2n} 1/p is an integer
    bad = []
    for n in range(2, upto + 1, 2):
        s = bernoulli_number(n) + sum(Fraction(1, p) for p in primerange(2, n + 2) if n % (p - 1) == 0)
        if s.denominator != 1:
            bad.append(n)
    yield Check(
        f"von Staudt-Clausen 2n<={upto}",
        not bad,
        f"violations at 2n={bad[:5]}" if bad else "none",
        "none",
    )


def _table1_checks() -> Iterator[Check]:
    for k, (h3, h4) in PUBLISHED_TABLE1.items():
        got = (cohen_H(k - 1, 3), cohen_H(k - 1, 4))
        yield Check(
            f"table1 k={k}",
            got == (h3, h4),
            ", ".join(map(format_rational, got)),
            ", ".join(map(format_rational, (h3, h4))),
        )
        alt = (dirichlet_L_exact_negative(k - 1, -3), dirichlet_L_exact_negative(k - 1, -4))
        yield Check(
            f"class number = L(2-k, chi) k={k}",
            alt == got,
            ", ".join(map(format_rational, alt)),
            ", ".join(map(format_rational, got)),
        )


def _alpha_checks() -> Iterator[Check]:
    for k in range(12, 41, 2):
        d, p = alpha_direct(k).value, alpha_from_pieces(k).value
        yield Check(f"alpha pieces = direct k={k}", d == p, str(p), str(d))
    z = alpha_direct(14).value
    yield Check("alpha_14 vanishes", z.is_zero, str(z), "0")


def _table2_offset_checks() -> Iterator[Check]:
    # The published constants are k/(k-1) times the derived ones; the k = 18 row
    # additionally misprints the prime 43867 as 43687.
    for k, entry in PUBLISHED_TABLE2.items():
        if entry is None:
            continue
        ratio = published_alpha(k).coeff / alpha_direct(k).value.coeff
        if k == 18:
            ratio *= Fraction(43687, 43867)
        yield Check(
            f"table2 published/derived k={k}",
            ratio == Fraction(k, k - 1),
            format_rational(ratio),
            f"{k}/{k - 1}" + (" after 43687 -> 43867" if k == 18 else ""),
        )


def _siegel_checks() -> Iterator[Check]:
    bad = []
    for k in range(12, 23, 2):
        c = 2 / (-bernoulli_number(k) / k)
        for n in range(1, 21):
            if siegel_A2k(k, HalfIntegralIndex(n, 0, 0)) != c * sigma_power(k - 1, n):
                bad.append((k, n))
    yield Check("Siegel Phi-compatibility n<=20", not bad, f"mismatches {bad[:5]}" if bad else "none", "none")
    for k in range(12, 23, 2):
        a, b = e1e2_q1q2q3_coef(k, "formula"), e1e2_q1q2q3_coef(k, "product")
        yield Check(f"E1*E2 q1q2q3 two routes k={k}", a == b, format_rational(a), format_rational(b))
    a, b = e3_q1q2q3_coef(14), e1e2_q1q2q3_coef(14)
    yield Check("E3 = E1*E2 at q1q2q3 for k=14", a == b, format_rational(a), format_rational(b))


def _qseries_checks() -> Iterator[Check]:
    N = 50
    e4, e6, e8 = eisenstein_qexp(4, N), eisenstein_qexp(6, N), eisenstein_qexp(8, N)
    delta = delta_qexp(N)
    yield Check("E4^3 - E6^2 = 1728 Delta", e4**3 - e6**2 == delta.scale(1728), "50 coefficients", "equal")
    yield Check("E4^2 = E8", e4 * e4 == e8, "50 coefficients", "equal")
    tau = delta_qexp(2001)
    bad = [n for n in range(1, 2001) if (tau[n] - sigma_power(11, n)) % 691]
    yield Check("tau(n) = sigma_11(n) mod 691, n<=2000", not bad, f"violations {bad[:5]}" if bad else "none", "none")


def guarded(group: str, checks: Iterator[Check]) -> Iterator[Check]:
    # a corrupted input can make a computation raise; report it as a failure
    try:
        yield from checks
    except (ArithmeticError, ValueError) as exc:
        yield Check(f"{group} (aborted)", False, f"{type(exc).__name__}: {exc}", "no error")


def exact_suite() -> Iterator[Check]:
    yield from guarded("bernoulli", _bernoulli_checks())
    yield from guarded("table1", _table1_checks())
    yield from guarded("alpha", _alpha_checks())
    yield from guarded("table2", _table2_offset_checks())
    yield from guarded("siegel", _siegel_checks())
    yield from guarded("qseries", _qseries_checks())


def _within(name: str, got: float, want: float, tol: float, relative: bool = True) -> Check:
    err = abs(got - want) / (abs(want) if relative and want else 1.0)
    kind = "rel" if relative else "abs"
    return Check(name, err < tol, f"{got:.15g} ({kind} err {err:.3g})", f"{want:.15g} within {tol:g}")


def _doubling(name: str, fn, n: int) -> Check:
    a, b = fn(n), fn(2 * n)
    diff = abs(a.value - b.value)
    budget = a.abs_error_bound + b.abs_error_bound
    return Check(name, diff <= budget, f"|change| {diff:.3g}", f"<= {budget:.3g}")


def numeric_suite(k: int = 12) -> Iterator[Check]:
    from .numeric import (
        NumericConfig,
        completed_lambda_num,
        dirichlet_L_num,
        dirichlet_L_num_negative,
        modular_L_num,
        petersson_norm_num,
        rankin_L_num,
        sym2_L_num,
        theorem_check_num,
    )
    from .qseries import eigenform

    for r in range(11, 22, 2):
        for D, n in ((-3, 3), (-4, 4)):
            exact = cohen_H(r, n)
            yield _within(f"L(1-r, chi_{D}) = H(r,{n}) r={r}", dirichlet_L_num_negative(r, D).value, float(exact), 1e-8)

    f = eigenform(k, 4001)
    if f is not None:
        for s in range(k // 2, k - 1):
            a = completed_lambda_num(f, k, s, split=1.1).value
            b = completed_lambda_num(f, k, k - s, split=1.1).value
            yield _within(f"Lambda({s}) = Lambda({k - s})", a, (-1) ** (k // 2) * b, 1e-6, relative=False)
        lam = completed_lambda_num(f, k, k - 1)
        direct = modular_L_num(f, k, k - 1)
        via_lambda = lam.value * (2 * math.pi) ** (k - 1) / math.gamma(k - 1)
        scale = (2 * math.pi) ** (k - 1) / math.gamma(k - 1)
        budget = direct.abs_error_bound + lam.abs_error_bound * scale
        yield Check(
            f"L({k - 1}, f) direct = incomplete gamma",
            abs(direct.value - via_lambda) <= budget,
            f"{direct.value:.15g} vs {via_lambda:.15g}",
            f"difference <= {budget:.3g}",
        )
        yield _doubling(f"L({k - 1}, f) cutoff doubling", lambda n: modular_L_num(f, k, k - 1, n), 1000)
        for which in (1, 2):
            yield _doubling(
                f"L({k - 1}, f, theta{which}) cutoff doubling",
                lambda n, w=which: rankin_L_num(f, k, w, k - 1, n_terms=n),
                2000,
            )
        yield _doubling(f"L({2 * k - 2}, Sym^2 f) cutoff doubling", lambda n: sym2_L_num(f, k, n_terms=n), 25)
        yield _doubling(
            "Petersson quadrature depth doubling",
            lambda n: petersson_norm_num(f, k, NumericConfig(quad_nodes=n)),
            16,
        )
    for D in (-3, -4):
        yield _doubling(f"L({k - 1}, chi_{D}) cutoff doubling", lambda n: dirichlet_L_num(k - 1, D, n), 500)

    report = theorem_check_num(k)
    yield _within(
        "spectral identity L(2k-2,Sym^2 f)/<f,f> (2 + X) = alpha_k",
        report.spectral_identity["value"] if f is not None else report.lhs,
        report.rhs,
        1e-8,
    )
    target = report.rhs_published if report.rhs_published is not None else report.rhs
    yield Check(
        f"theorem as stated: L(k-1,f)/<f,f> A_k(f) = published alpha_{k}",
        target == report.lhs == 0 or (target != 0 and abs(report.lhs - target) / abs(target) < 1e-3),
        f"{report.lhs:.10g} (rel err {report.rel_err_published if report.rel_err_published is not None else report.rel_err:.3g})",
        f"{target:.10g} within 1e-3",
    )
