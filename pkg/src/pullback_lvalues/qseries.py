"""Truncated q-expansions with exact rational coefficients.

A :class:`QSeries` stores the coefficients of q^0 .. q^(N-1).  Products are
truncated to the smaller precision of the two factors.  Multiplication is
schoolbook on integers after clearing denominators; precisions used here are
at most a few thousand, so nothing asymptotically faster is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .bernoulli import bernoulli_number
from .exact import format_rational

DEFAULT_PRECISION = 64


class EigenformError(ValueError):
    """Raised when an eigenform would need coefficients outside Q."""


@dataclass(frozen=True, eq=True)
class QSeries:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Fraction | int]):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))
        if not self.coeffs:
            raise ValueError("a QSeries needs at least one coefficient")

    @classmethod
    def one(cls, precision: int) -> QSeries:
        return cls([1] + [0] * (precision - 1))

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, precision: int) -> QSeries:
        if precision > self.precision:
            raise ValueError(f"cannot extend a series known to O(q^{self.precision})")
        return QSeries(self.coeffs[:precision])

    def __add__(self, other: QSeries) -> QSeries:
        n = min(self.precision, other.precision)
        return QSeries(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    def __neg__(self) -> QSeries:
        return QSeries(-a for a in self.coeffs)

    def __sub__(self, other: QSeries) -> QSeries:
        return self + (-other)

    def scale(self, c: Fraction | int) -> QSeries:
        return QSeries(c * a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return qs_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int) -> QSeries:
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = QSeries.one(self.precision)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def is_cusp_form(self) -> bool:
        return self.coeffs[0] == 0

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.precision

    def to_json(self) -> dict:
        return {"precision": self.precision, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> QSeries:
        coeffs = [Fraction(c) for c in obj["coeffs"]]
        if len(coeffs) != obj["precision"]:
            raise ValueError("precision does not match the number of coefficients")
        return cls(coeffs)


def _int_convolve(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * n
    for i, ai in enumerate(a[:n]):
        if not ai:
            continue
        for j, bj in enumerate(b[: n - i]):
            if bj:
                out[i + j] += ai * bj
    return out


def _clear_denominators(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    d = reduce(math.lcm, (c.denominator for c in coeffs), 1)
    return [c.numerator * (d // c.denominator) for c in coeffs], d


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product truncated at min(precision(a), precision(b))."""
    n = min(a.precision, b.precision)
    ia, da = _clear_denominators(a.coeffs[:n])
    ib, db = _clear_denominators(b.coeffs[:n])
    d = da * db
    return QSeries(Fraction(c, d) for c in _int_convolve(ia, ib, n))


def sigma_power(e: int, n: int) -> int:
    """sum_{d | n} d^e."""
    if n < 1:
        raise ValueError("sigma is defined for n >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**e
            if d * d != n:
                total += (n // d) ** e
        d += 1
    return total


def _sigma_table(e: int, N: int) -> list[int]:
    # sieve: sigma_e(n) for 0 <= n < N, entry 0 unused
    table = [0] * N
    for d in range(1, N):
        de = d**e
        for m in range(d, N, d):
            table[m] += de
    return table


def eisenstein_qexp(k: int, N: int = DEFAULT_PRECISION) -> QSeries:
    """E_k = 1 + (2 / zeta(1-k)) sum sigma_{k-1}(n) q^n, normalized with constant term 1."""
    if k < 4 or k % 2:
        raise ValueError(f"Eisenstein series needs even weight k >= 4, got {k}")
    zeta_1mk = -bernoulli_number(k) / k
    c = 2 / zeta_1mk
    sig = _sigma_table(k - 1, N)
    return QSeries([Fraction(1)] + [c * sig[n] for n in range(1, N)])


def _euler_cube(N: int) -> list[int]:
    # prod (1 - q^n)^3 = sum_m (-1)^m (2m+1) q^{m(m+1)/2}
    out = [0] * N
    m = 0
    while m * (m + 1) // 2 < N:
        out[m * (m + 1) // 2] = (-1) ** m * (2 * m + 1)
        m += 1
    return out


def delta_qexp(N: int = DEFAULT_PRECISION) -> QSeries:
    """Delta = q prod (1 - q^n)^24, as q * (prod (1 - q^n)^3)^8."""
    if N < 2:
        raise ValueError("Delta needs precision at least 2")
    cube = _euler_cube(N - 1)
    sparse = [(i, c) for i, c in enumerate(cube) if c]
    acc = cube
    for _ in range(7):
        nxt = [0] * (N - 1)
        for i, c in sparse:
            for j in range(N - 1 - i):
                if acc[j]:
                    nxt[i + j] += c * acc[j]
        acc = nxt
    return QSeries([0] + acc)


def dim_cusp_forms(k: int) -> int:
    """dim S_k(SL_2(Z)) for even k."""
    if k % 2 or k < 0:
        return 0
    if k < 12:
        return 0
    return k // 12 - 1 if k % 12 == 2 else k // 12


# weight k mod 12 -> (a, b) with 4a + 6b = the weight of E_4^a E_6^b filling the remainder
_FILL = {0: (0, 0), 2: (2, 1), 4: (1, 0), 6: (0, 1), 8: (2, 0), 10: (1, 1)}


def miller_basis(k: int, N: int = DEFAULT_PRECISION) -> list[QSeries]:
    """Echelonized basis of S_k: element i is q^(i+1) + O(q^(d+1)) with integer coefficients."""
    if k % 2 or k < 12:
        raise ValueError(f"Miller basis needs even k >= 12, got {k}")
    d = dim_cusp_forms(k)
    if d == 0:
        return []
    if N <= d:
        raise ValueError(f"precision {N} too small for dim S_{k} = {d}")
    a, b = _FILL[k % 12]
    delta = delta_qexp(N)
    e4 = eisenstein_qexp(4, N)
    e6 = eisenstein_qexp(6, N)
    gens = []
    for j in range(1, d + 1):
        g = delta**j
        e6_exp = 2 * (d - j) + b
        if e6_exp:
            g = g * e6**e6_exp
        if a:
            g = g * e4**a
        gens.append(g)
    # gens[j-1] = q^j + O(q^(j+1)); clear the entries above the diagonal
    for i in range(d - 1, -1, -1):
        for j in range(i):
            c = gens[j][i + 1]
            if c:
                gens[j] = gens[j] - gens[i].scale(c)
    return gens


def eigenform(k: int, N: int = DEFAULT_PRECISION) -> QSeries | None:
    """The normalized Hecke eigenform of weight k, when dim S_k <= 1."""
    d = dim_cusp_forms(k)
    if d == 0:
        return None
    if d > 1:
        raise EigenformError(
            f"dim S_{k} = {d}: eigenforms have coefficients in a number field of degree > 1"
        )
    if k == 12:
        return delta_qexp(N)
    return miller_basis(k, N)[0]


def theta_qexp(which: int, N: int = DEFAULT_PRECISION) -> QSeries:
    """Representation numbers of m^2 + n^2 (which=1) or m^2 + mn + n^2 (which=2)."""
    if which == 1:
        form = lambda m, n: m * m + n * n
    elif which == 2:
        form = lambda m, n: m * m + m * n + n * n
    else:
        raise ValueError(f"theta series selector must be 1 or 2, got {which}")
    # m^2 + mn + n^2 >= (m^2 + n^2) / 2
    bound = math.isqrt(2 * N) + 1
    counts = [0] * N
    for m in range(-bound, bound + 1):
        for n in range(-bound, bound + 1):
            v = form(m, n)
            if v < N:
                counts[v] += 1
    return QSeries(counts)

