"""Exact coefficient fields for chain computations.

Two fields are supported: the rationals (default) and Z/p for a prime p.
Rank computations never touch floating point.  When gmpy2 is installed its
``mpq`` type is used for rational scalars; otherwise ``fractions.Fraction``
is the (slower, pure stdlib) fallback.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _rational = Fraction


class RationalField:
    """The field of rational numbers with exact arithmetic."""

    name = "Q"
    characteristic = 0

    def from_int(self, value: int):
        return _rational(value)

    def from_fraction(self, value):
        fr = Fraction(value)
        return _rational(fr.numerator) / _rational(fr.denominator)

    @property
    def zero(self):
        return _rational(0)

    @property
    def one(self):
        return _rational(1)

    def __repr__(self):
        return "QQ"


class ModP:
    """Residue class modulo a prime; supports field arithmetic."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def __add__(self, other):
        return ModP(self.value + other.value, self.p)

    def __sub__(self, other):
        return ModP(self.value - other.value, self.p)

    def __mul__(self, other):
        return ModP(self.value * other.value, self.p)

    def __truediv__(self, other):
        if not other.value:
            raise ZeroDivisionError("division by zero in Z/p")
        return ModP(self.value * pow(other.value, self.p - 2, self.p), self.p)

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        return (
            isinstance(other, ModP) and self.p == other.p and self.value == other.value
        )

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The finite field Z/p for a prime p."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"Z{p}"
        self.characteristic = p

    def from_int(self, value: int):
        return ModP(value, self.p)

    def from_fraction(self, value):
        fr = Fraction(value)
        return ModP(fr.numerator, self.p) / ModP(fr.denominator, self.p)

    @property
    def zero(self):
        return ModP(0, self.p)

    @property
    def one(self):
        return ModP(1, self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


QQ = RationalField()


def field_by_name(name: str):
    """Resolve "Q" or a prime written in decimal to a field object."""
    text = str(name).strip()
    if text.upper() == "Q":
        return QQ
    try:
        p = int(text)
    except ValueError as exc:
        raise ValueError(f"unknown field {name!r}; expected 'Q' or a prime") from exc
    return PrimeField(p)
