"""Exact zeta values and the weighted-average constant alpha_k.

alpha_k is computed two ways:

* :func:`alpha_from_pieces` assembles it from the q1 q2 q3 coefficients of
  E_{3,k} and E_{1,k} E_{2,k} and the inner-product constant of the
  spectral decomposition, using exact even zeta values.  The odd value
  zeta(k-1) cancels and is never evaluated.
* :func:`alpha_direct` is the same quantity written as a closed form in
  B_k, B_{2k-2} and the class numbers H(k-1, n).

:func:`theorem_rhs_as_printed` keeps the published closed form verbatim for
comparison; it does not vanish at k = 14 and is not used elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .bernoulli import bernoulli_number, cohen_H
from .exact import PiMonomial, format_rational
from .siegel import e1e2_q1q2q3_coef, e3_q1q2q3_coef


def zeta_exact_negative_odd(m: int) -> Fraction:
    """zeta(m) for a negative odd integer m, as -B_{1-m} / (1-m)."""
    if m >= 0 or m % 2 == 0:
        raise ValueError(f"expected a negative odd integer, got {m}")
    n = -m
    return -bernoulli_number(n + 1) / (n + 1)


def zeta_exact_even(n: int) -> PiMonomial:
    """zeta(2n) = (-1)^(n+1) (2 pi)^(2n) B_{2n} / (2 (2n)!)."""
    if n < 1:
        raise ValueError("zeta(2n) needs n >= 1")
    coeff = (-1) ** (n + 1) * 2 ** (2 * n) * bernoulli_number(2 * n) / (2 * factorial(2 * n))
    return PiMonomial(coeff, 2 * n)


@dataclass(frozen=True)
class AlphaResult:
    k: int
    value: PiMonomial
    route: str

    def __post_init__(self):
        if not self.value.is_zero and self.value.pi_exp != 3 * self.k - 3:
            raise ValueError(
                f"alpha_{self.k} has pi exponent {self.value.pi_exp}, expected {3 * self.k - 3}"
            )

    def to_json(self) -> dict:
        return {"k": self.k, "route": self.route, "value": self.value.to_json()}


def _check_k(k: int) -> None:
    if k < 12 or k % 2:
        raise ValueError(f"alpha_k is defined here for even k >= 12, got {k}")


def _hsum(k: int) -> Fraction:
    return sum((cohen_H(k - 1, 4 - b * b) for b in range(-2, 3)), Fraction(0))


def _power_tail(k: int) -> int:
    return 2 ** (2 * k - 4) + 2 * 3 ** (k - 1) + 2 ** (k + 2) - 23


def alpha_direct(k: int) -> AlphaResult:
    """Closed form for alpha_k.

    alpha_k = 2^(4k-5) pi^(3k-3) / ((k-1)! (2k-3)!) * [ B_{2k-2}
              + (k-1) (2^(2k-4) + 2 3^(k-1) + 2^(k+2) - 23 - 8 H(k-1,3) - 3 H(k-1,4))
              - k (k-1) / B_k * sum_{b=-2}^{2} H(k-1, 4-b^2) ]
    """
    _check_k(k)
    bk = bernoulli_number(k)
    b2 = bernoulli_number(2 * k - 2)
    h3, h4 = cohen_H(k - 1, 3), cohen_H(k - 1, 4)
    bracket = (
        b2
        + (k - 1) * (_power_tail(k) - 8 * h3 - 3 * h4)
        - Fraction(k * (k - 1)) / bk * _hsum(k)
    )
    pref = Fraction(2 ** (4 * k - 5), factorial(k - 1) * factorial(2 * k - 3))
    return AlphaResult(k, PiMonomial(pref * bracket, 3 * k - 3).require_nonnegative(), "direct")


def alpha_from_pieces(k: int) -> AlphaResult:
    """(e3 - e1e2) (k-1) zeta(k) zeta(2k-2) (-1)^(k/2) 2^(k-3) / pi."""
    _check_k(k)
    diff = e3_q1q2q3_coef(k) - e1e2_q1q2q3_coef(k)
    value = (
        zeta_exact_even(k // 2)
        * zeta_exact_even(k - 1)
        * ((k - 1) * (-1) ** (k // 2) * 2 ** (k - 3) * diff)
        / PiMonomial(Fraction(1), 1)
    )
    return AlphaResult(k, value.require_nonnegative(), "pieces")


def theorem_rhs_as_printed(k: int) -> PiMonomial:
    """The published closed form, transcribed literally (nonzero at k = 14)."""
    _check_k(k)
    bk = bernoulli_number(k)
    b2 = bernoulli_number(2 * k - 2)
    h3, h4 = cohen_H(k - 1, 3), cohen_H(k - 1, 4)
    bracket = Fraction(k) / (2 * bk) * _hsum(k) + b2 + (k - 1) * (_power_tail(k) - 8 * h3 - 3 * h4)
    pref = Fraction(2 ** (4 * k - 4), factorial(k - 1) * factorial(2 * k - 3))
    return PiMonomial(pref * bracket, 3 * k - 3)


# Published class numbers (H(k-1, 3), H(k-1, 4)), used as golden values.
PUBLISHED_TABLE1: dict[int, tuple[Fraction, Fraction]] = {
    12: (Fraction(-3694, 3), Fraction(-50521, 2)),
    14: (Fraction(111202, 3), Fraction(2702765, 2)),
    16: (Fraction(-13842922, 9), Fraction(-199360981, 2)),
    18: (Fraction(252470402, 3), Fraction(19391512145, 2)),
    20: (Fraction(-17612343854, 3), Fraction(-2404879675441, 2)),
    22: (Fraction(4577258092006, 9), Fraction(370371188237525, 2)),
}

# The published table of alpha_k as (numerator primes, denominator primes),
# transcribed digit for digit.  The k = 18 entry lists the prime 43687; the
# numerator of B_18 is 43867.
PUBLISHED_TABLE2: dict[int, tuple[dict[int, int], dict[int, int]] | None] = {
    12: ({2: 31}, {3: 6, 5: 3, 7: 3, 11: 2, 13: 1, 17: 1, 19: 1, 23: 1, 691: 1}),
    14: None,
    16: ({2: 40}, {3: 13, 5: 6, 7: 3, 11: 2, 13: 2, 17: 1, 19: 1, 23: 1, 29: 1, 31: 1, 3617: 1}),
    18: ({2: 37}, {3: 12, 5: 5, 7: 5, 11: 3, 13: 2, 17: 2, 19: 1, 23: 1, 29: 1, 31: 1, 43687: 1}),
    20: ({2: 39}, {3: 17, 5: 7, 7: 3, 11: 2, 13: 2, 17: 2, 19: 2, 29: 1, 31: 1, 37: 1, 283: 1, 617: 1}),
    22: (
        {2: 42, 4409: 1},
        {3: 21, 5: 8, 7: 5, 11: 3, 13: 2, 17: 2, 19: 2, 23: 1, 29: 1, 31: 1, 37: 1, 41: 1, 131: 1, 593: 1},
    ),
}


def _from_factors(f: dict[int, int]) -> int:
    out = 1
    for p, e in f.items():
        out *= p**e
    return out


def published_alpha(k: int) -> PiMonomial:
    entry = PUBLISHED_TABLE2[k]
    if entry is None:
        return PiMonomial(Fraction(0))
    num, den = entry
    return PiMonomial(Fraction(_from_factors(num), _from_factors(den)), 3 * k - 3)


def factor_rational(x: Fraction) -> tuple[int, dict[int, int], dict[int, int]]:
    """(sign, numerator factorization, denominator factorization)."""
    from sympy.ntheory import factorint

    sign = -1 if x < 0 else 1
    x = abs(x)
    num = factorint(x.numerator) if x.numerator > 1 else {}
    den = factorint(x.denominator) if x.denominator > 1 else {}
    return sign, dict(sorted(num.items())), dict(sorted(den.items()))


def _render_factors(f: dict[int, int], extra: str | None = None) -> str:
    parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in f.items()]
    if extra:
        parts.append(extra)
    return " * ".join(parts) if parts else "1"


def render_pi_monomial(value: PiMonomial) -> str:
    """Render as (factored numerator * pi^e)/(factored denominator), or 0."""
    if value.is_zero:
        return "0"
    sign, num, den = factor_rational(value.coeff)
    pi_part = f"pi^{value.pi_exp}" if value.pi_exp else None
    text = f"({_render_factors(num, pi_part)})"
    if den:
        text += f"/({_render_factors(den)})"
    return ("-" if sign < 0 else "") + text


def emit_table1(k_list) -> list[dict]:
    rows = []
    for k in k_list:
        _check_k(k)
        rows.append({"k": k, "n=3": cohen_H(k - 1, 3), "n=4": cohen_H(k - 1, 4)})
    return rows


def emit_table2(k_list, route: str = "direct") -> list[dict]:
    fn = {"direct": alpha_direct, "pieces": alpha_from_pieces}[route]
    rows = []
    for k in k_list:
        res = fn(k)
        rows.append({"k": k, "alpha": res, "display": render_pi_monomial(res.value)})
    return rows


def table1_cells(row: dict) -> list[str]:
    return [str(row["k"]), format_rational(row["n=3"]), format_rational(row["n=4"])]
