"""Bernoulli numbers, quadratic characters and Cohen's class numbers H(r, N).

Conventions
-----------
``B_1 = -1/2``.  With this choice the Bernoulli polynomial
``B_r(x) = sum_k C(r, k) B_k x^(r-k)`` satisfies ``B_1(x) = x - 1/2``, which is
what the generalized Bernoulli numbers below are built from.

``H(r, 0) = zeta(1 - 2r)`` (Cohen's convention).  For ``N > 0`` only indices with
``(-1)^r N`` a fundamental discriminant are supported.

The generalized Bernoulli sum runs over ``j = 0 .. |D|`` inclusive.  For
``|D| > 1`` both endpoints have ``chi_D(j) = 0``, so this agrees with the more
common range ``1 .. |D|``.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, gcd
from pathlib import Path

from sympy.external.gmpy import jacobi


class NotFundamentalError(ValueError):
    """Raised for a discriminant or class-number index outside the supported cases."""


_bern_lock = threading.Lock()
_bern: list[Fraction] = [Fraction(1)]


def bernoulli_number(n: int) -> Fraction:
    """B_n from the recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0, memoized."""
    if n < 0:
        raise ValueError("Bernoulli index must be non-negative")
    if n < len(_bern):
        return _bern[n]
    with _bern_lock:
        for m in range(len(_bern), n + 1):
            if m > 1 and m % 2 == 1:
                _bern.append(Fraction(0))
                continue
            s = sum(comb(m + 1, j) * _bern[j] for j in range(m))
            _bern.append(-s / (m + 1))
    return _bern[n]


def reset_bernoulli_cache() -> None:
    with _bern_lock:
        del _bern[1:]


def load_bernoulli_cache(path: str | Path) -> int:
    """Seed the memo table from a JSON file ``{"n": "p/q", ...}``.

    Entries are trusted as given; the exact verification suite is what catches
    a corrupted file.  Returns the number of entries loaded.
    """
    data = json.loads(Path(path).read_text())
    table = {int(k): Fraction(v) for k, v in data.items()}
    with _bern_lock:
        del _bern[1:]
        n = 1
        while n in table:
            _bern.append(table[n])
            n += 1
    return len(_bern) - 1


def save_bernoulli_cache(path: str | Path, upto: int | None = None) -> None:
    if upto is not None:
        bernoulli_number(upto)
    data = {str(n): str(b) for n, b in enumerate(_bern)}
    Path(path).write_text(json.dumps(data, indent=0))


def bernoulli_polynomial(r: int, x: Fraction | int) -> Fraction:
    x = Fraction(x)
    return sum(
        (comb(r, k) * bernoulli_number(k) * x ** (r - k) for k in range(r + 1)),
        Fraction(0),
    )


def _squarefree(m: int) -> bool:
    m = abs(m)
    if m == 0:
        return False
    p = 2
    while p * p <= m:
        if m % (p * p) == 0:
            return False
        p += 1
    return True


def is_fundamental_discriminant(D: int) -> bool:
    if D == 1:
        return True
    if D % 4 == 1:
        return _squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def _kronecker(D: int, n: int) -> int:
    if n == 0:
        return 1 if abs(D) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if D < 0:
            result = -result
    while n % 2 == 0:
        n //= 2
        if D % 2 == 0:
            return 0
        if D % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    if gcd(D, n) != 1:
        return 0
    return result * jacobi(D % n, n)


def kronecker_chi(D: int, j: int) -> int:
    """The quadratic character chi_D(j) = (D / j) for fundamental D."""
    if not is_fundamental_discriminant(D):
        raise NotFundamentalError(f"{D} is not a fundamental discriminant")
    return _kronecker(D, j)


@dataclass(frozen=True)
class DiscriminantCharacter:
    """chi_D for a fundamental discriminant D, with its table of values mod |D|."""

    D: int
    values: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if not is_fundamental_discriminant(self.D):
            raise NotFundamentalError(f"{self.D} is not a fundamental discriminant")
        object.__setattr__(
            self, "values", tuple(_kronecker(self.D, j) for j in range(self.modulus))
        )

    @property
    def modulus(self) -> int:
        return abs(self.D)

    @property
    def is_odd(self) -> bool:
        return self.D < 0

    def __call__(self, j: int) -> int:
        return self.values[j % self.modulus]


def generalized_bernoulli(r: int, D: int) -> Fraction:
    """B_{r, chi_D} = |D|^(r-1) sum_{j=0}^{|D|} chi_D(j) B_r(j / |D|)."""
    chi = DiscriminantCharacter(D)
    m = chi.modulus
    s = sum(
        (chi(j) * bernoulli_polynomial(r, Fraction(j, m)) for j in range(m + 1) if chi(j)),
        Fraction(0),
    )
    return Fraction(m) ** (r - 1) * s


def cohen_H(r: int, n: int) -> Fraction:
    """Cohen's generalized class number H(r, n) for n = 0 or fundamental (-1)^r n."""
    if r < 1:
        raise ValueError("r must be positive")
    if n == 0:
        # zeta(1 - 2r) = -B_{2r} / (2r)
        return -bernoulli_number(2 * r) / (2 * r)
    D = (-1) ** r * n
    if n < 0 or not is_fundamental_discriminant(D):
        raise NotFundamentalError(
            f"H({r}, {n}) needs (-1)^r n = {D} to be a fundamental discriminant"
        )
    return -generalized_bernoulli(r, D) / r


def _exp_series(a: int, n: int) -> list[Fraction]:
    # e^(a t) = sum a^i t^i / i!
    out = [Fraction(1)]
    for i in range(1, n):
        out.append(out[-1] * a / i)
    return out


def dirichlet_L_exact_negative(r: int, D: int) -> Fraction:
    """L(1 - r, chi_D) = -B_{r,chi} / r, with B_{r,chi} read off a generating function.

    Uses sum_{a=1}^{f} chi(a) t e^{a t} / (e^{f t} - 1) = sum_n B_{n,chi} t^n / n!
    expanded by formal power series division, so no Bernoulli numbers are
    involved; this is an independent route to :func:`cohen_H`.
    """
    if r < 1:
        raise ValueError("r must be positive")
    chi = DiscriminantCharacter(D)
    f = chi.modulus
    n = r + 2
    # t cancels: quo = (sum_a chi(a) e^{a t}) / ((e^{f t} - 1) / t)
    num = [Fraction(0)] * n
    for a in range(1, f + 1):
        if chi(a):
            for i, c in enumerate(_exp_series(a, n)):
                num[i] += chi(a) * c
    den = _exp_series(f, n + 1)[1:]
    quo = [Fraction(0)] * n
    for i in range(n):
        acc = num[i] - sum(quo[j] * den[i - j] for j in range(i))
        quo[i] = acc / den[0]
    # quo = sum B_{m,chi} t^m / m!
    return -quo[r] * factorial(r) / r
