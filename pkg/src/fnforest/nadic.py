"""Exact rationals of the form k / n**p."""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering


@total_ordering
class NAdicRational:
    """The number ``k / n**p``, kept with ``p`` minimal (``n`` does not divide ``k`` unless ``p == 0``).

    Only values sharing the same base combine.  ``p`` may be negative only
    transiently; the constructor folds any negative exponent into ``k``.
    """

    __slots__ = ("n", "k", "p")

    def __init__(self, n: int, k: int, p: int = 0):
        if n < 2:
            raise ValueError(f"base must be at least 2, got {n}")
        if p < 0:
            k *= n**-p
            p = 0
        while p and k % n == 0:
            k //= n
            p -= 1
        self.n = n
        self.k = k
        self.p = p

    # construction ---------------------------------------------------------

    @classmethod
    def integer(cls, n: int, value: int) -> NAdicRational:
        return cls(n, value, 0)

    @classmethod
    def from_fraction(cls, n: int, value: Fraction | int) -> NAdicRational:
        value = Fraction(value)
        den = value.denominator
        p = 0
        while den % n == 0:
            den //= n
            p += 1
        if den != 1:
            raise ValueError(f"{value} is not an {n}-adic rational")
        return cls(n, value.numerator, p)

    def to_fraction(self) -> Fraction:
        return Fraction(self.k, self.n**self.p)

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> NAdicRational:
        if isinstance(other, NAdicRational):
            if other.n != self.n:
                raise ValueError(f"cannot mix base {self.n} and base {other.n}")
            return other
        if isinstance(other, int):
            return NAdicRational(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = max(self.p, other.p)
        n = self.n
        return NAdicRational(n, self.k * n ** (p - self.p) + other.k * n ** (p - other.p), p)

    __radd__ = __add__

    def __neg__(self):
        return NAdicRational(self.n, -self.k, self.p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NAdicRational(self.n, self.k * other.k, self.p + other.p)

    __rmul__ = __mul__

    def scale(self, t: int) -> NAdicRational:
        """Multiply by ``n**t`` (``t`` may be negative)."""
        return NAdicRational(self.n, self.k, self.p - t)

    # comparison -----------------------------------------------------------

    def _cmp_key(self, other: NAdicRational) -> tuple[int, int]:
        p = max(self.p, other.p)
        return self.k * self.n ** (p - self.p), other.k * self.n ** (p - other.p)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.p == 0 and self.k == other
        if not isinstance(other, NAdicRational):
            return NotImplemented
        return self.n == other.n and self.k == other.k and self.p == other.p

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._cmp_key(other)
        return a < b

    def __hash__(self):
        # integers hash like ints so that ``x == 3`` and hashing agree
        return hash(self.k) if self.p == 0 else hash((self.n, self.k, self.p))

    def is_integer(self) -> bool:
        return self.p == 0

    def __repr__(self) -> str:
        return f"NAdicRational({self.n}, {self.k}, {self.p})"

    def __str__(self) -> str:
        return f"{self.k}/{self.n}^{self.p}"
