"""Fourier coefficients of Siegel Eisenstein series of degree 2 and 3.

Degree 2 coefficients use the Eichler-Zagier divisor sum over Cohen class
numbers.  The only degree 3 coefficient needed is the one at
diag(1,1,1) restricted to the three diagonal variables, i.e. the q1 q2 q3
coefficient of E_{3,k}(z1, z2, z3).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .bernoulli import bernoulli_number, cohen_H
from .qseries import eisenstein_qexp

# A^2_{1,k}(T; f) for T unimodularly equivalent to diag(1, 0): the first coefficient of f.
KLINGEN_RANK_ONE_COEF = Fraction(1)


class IndefiniteIndexError(ValueError):
    pass


@dataclass(frozen=True)
class HalfIntegralIndex:
    """T = [[a, b/2], [b/2, c]] with integers a, b, c."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a < 0 or self.c < 0 or self.disc < 0:
            raise IndefiniteIndexError(f"{self} is not positive semidefinite")

    @property
    def disc(self) -> int:
        """4ac - b^2 = det(2T)."""
        return 4 * self.a * self.c - self.b * self.b

    @property
    def content(self) -> int:
        return gcd(gcd(self.a, self.b), self.c)

    @property
    def is_zero(self) -> bool:
        return self.a == self.b == self.c == 0


def _zeta_neg(n: int) -> Fraction:
    # zeta(-n) = -B_{n+1} / (n+1)
    return -bernoulli_number(n + 1) / (n + 1)


def siegel_A2k(k: int, T: HalfIntegralIndex) -> Fraction:
    """Fourier coefficient A_{2,k}(T) of the degree-2 Siegel Eisenstein series."""
    if k < 4 or k % 2:
        raise ValueError(f"need even k >= 4, got {k}")
    if T.is_zero:
        return Fraction(1)
    g = T.content
    s = Fraction(0)
    for d in range(1, g + 1):
        if g % d == 0:
            s += d ** (k - 1) * cohen_H(k - 1, T.disc // (d * d))
    return 2 * s / (_zeta_neg(2 * k - 3) * _zeta_neg(k - 1))


def e2_restricted_coef(k: int, n2: int, n3: int) -> Fraction:
    """q2^n2 q3^n3 coefficient of E_{2,k}(z2, z3), summing A_{2,k} over b^2 <= 4 n2 n3."""
    bmax = isqrt(4 * n2 * n3)
    return sum(
        (siegel_A2k(k, HalfIntegralIndex(n2, b, n3)) for b in range(-bmax, bmax + 1)),
        Fraction(0),
    )


def e3_q1q2q3_coef(k: int) -> Fraction:
    """q1 q2 q3 coefficient of the degree-3 Siegel Eisenstein series on h x h x h."""
    if k < 12 or k % 2:
        raise ValueError(f"need even k >= 12, got {k}")
    bk = bernoulli_number(k)
    b2 = bernoulli_number(2 * k - 2)
    h3, h4 = cohen_H(k - 1, 3), cohen_H(k - 1, 4)
    tail = 2 ** (2 * k - 4) + 2 * 3 ** (k - 1) + 2 ** (k + 2) - 23
    return (
        Fraction(-8 * k) / bk
        + Fraction(8 * k * (k - 1)) / (bk * b2) * (8 * h3 + 3 * h4)
        + (-1) ** (k // 2) * Fraction(8 * k * (k - 1)) / abs(bk * b2) * tail
    )


def e1e2_q1q2q3_coef(k: int, route: str = "formula") -> Fraction:
    """q1 q2 q3 coefficient of E_{1,k}(z1) E_{2,k}(z2, z3).

    ``route="formula"`` evaluates 4 / (zeta(3-2k) zeta(1-k)^2) sum_b H(k-1, 4-b^2);
    ``route="product"`` multiplies the q1 coefficient of E_{1,k} by the
    restricted degree-2 coefficient.
    """
    if k < 12 or k % 2:
        raise ValueError(f"need even k >= 12, got {k}")
    if route == "formula":
        hsum = sum((cohen_H(k - 1, 4 - b * b) for b in range(-2, 3)), Fraction(0))
        return 4 * hsum / (_zeta_neg(2 * k - 3) * _zeta_neg(k - 1) ** 2)
    if route == "product":
        return eisenstein_qexp(k, 2)[1] * e2_restricted_coef(k, 1, 1)
    raise ValueError(f"unknown route {route!r}")


def klingen_q2q3_exact_part() -> Fraction:
    """Contribution of the rank-one indices b = +-2 to the Klingen q2 q3 coefficient."""
    return 2 * KLINGEN_RANK_ONE_COEF
