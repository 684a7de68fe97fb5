"""Exact scalars: rationals and rational multiples of powers of pi.

Rationals are plain :class:`fractions.Fraction` values, which are always kept
in lowest terms with a positive denominator.  :class:`PiMonomial` carries a
value ``coeff * pi**pi_exp`` and refuses to add monomials of different
exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]


# pi to 80 decimals; float conversion of coeff * pi^e through this is exact to
# far below double precision for any exponent used here
_PI = Fraction(
    "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899"
)


class PiExponentMismatch(ArithmeticError):
    """Raised when adding PiMonomials with different powers of pi."""


def rational(x: RationalLike | str) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def rational_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    """Apply ``op`` in {"add", "sub", "mul", "div"} to two rationals.

    Division by zero raises :class:`ZeroDivisionError`.
    """
    a, b = rational(a), rational(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ZeroDivisionError("rational division by zero")
        return a / b
    raise ValueError(f"unknown rational operation {op!r}")


def format_rational(x: RationalLike) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class PiMonomial:
    """The exact real number ``coeff * pi**pi_exp``.

    ``pi_exp`` may be negative while a value is being assembled; exported
    results are checked with :meth:`require_nonnegative`.
    """

    coeff: Fraction
    pi_exp: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", rational(self.coeff))
        if self.coeff == 0:
            object.__setattr__(self, "pi_exp", 0)

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def __mul__(self, other: PiMonomial | RationalLike) -> PiMonomial:
        if isinstance(other, PiMonomial):
            return PiMonomial(self.coeff * other.coeff, self.pi_exp + other.pi_exp)
        return PiMonomial(self.coeff * rational(other), self.pi_exp)

    __rmul__ = __mul__

    def __truediv__(self, other: PiMonomial | RationalLike) -> PiMonomial:
        if isinstance(other, PiMonomial):
            if other.is_zero:
                raise ZeroDivisionError("division by a zero PiMonomial")
            return PiMonomial(self.coeff / other.coeff, self.pi_exp - other.pi_exp)
        return PiMonomial(self.coeff / rational(other), self.pi_exp)

    def __add__(self, other: PiMonomial) -> PiMonomial:
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.pi_exp != other.pi_exp:
            raise PiExponentMismatch(
                f"cannot add pi^{self.pi_exp} and pi^{other.pi_exp} monomials"
            )
        return PiMonomial(self.coeff + other.coeff, self.pi_exp)

    def __neg__(self) -> PiMonomial:
        return PiMonomial(-self.coeff, self.pi_exp)

    def __sub__(self, other: PiMonomial) -> PiMonomial:
        return self + (-other)

    def __pow__(self, n: int) -> PiMonomial:
        return PiMonomial(self.coeff**n, self.pi_exp * n)

    def __float__(self) -> float:
        return float(self.coeff * _PI**self.pi_exp)

    def require_nonnegative(self) -> PiMonomial:
        if self.pi_exp < 0:
            raise ValueError(f"exported PiMonomial has negative pi exponent {self.pi_exp}")
        return self

    def to_json(self) -> dict:
        return {"coeff": format_rational(self.coeff), "pi_exp": self.pi_exp}

    @classmethod
    def from_json(cls, obj: dict) -> PiMonomial:
        return cls(parse_rational(obj["coeff"]), int(obj["pi_exp"]))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.pi_exp == 0:
            return format_rational(self.coeff)
        return f"{format_rational(self.coeff)}*pi^{self.pi_exp}"


def pim_mul(x: PiMonomial, y: PiMonomial) -> PiMonomial:
    return x * y


def pim_add(x: PiMonomial, y: PiMonomial) -> PiMonomial:
    return x + y
