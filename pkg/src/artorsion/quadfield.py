"""Exact arithmetic in quadratic fields Q(sqrt(d)).

An element is a + b*sqrt(d) with a, b rational and d a fixed squarefree
integer, d not in {0, 1}. Elements of different fields never mix; rational
values (int or Fraction) embed into any field on the fly, which is the only
cross-field arithmetic allowed.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import Rat, factorint, sqrt_rat


class FieldMismatchError(ValueError):
    """Arithmetic between elements of two different quadratic fields."""


_valid_d: set[int] = set()


def check_d(d: int) -> int:
    """Validate that d is a squarefree integer other than 0 and 1."""
    if d in _valid_d:
        return d
    if not isinstance(d, int) or d in (0, 1):
        raise ValueError(f"invalid quadratic field discriminant base {d!r}")
    if any(e > 1 for e in factorint(d).values()):
        raise ValueError(f"{d} is not squarefree")
    _valid_d.add(d)
    return d


class QuadFieldElement:
    __slots__ = ("d", "a", "b")

    def __init__(self, d: int, a, b=0):
        check_d(d)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QuadFieldElement is immutable")

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "QuadFieldElement":
        return QuadFieldElement(self.d, self.a, -self.b)

    def norm(self) -> Rat:
        """a^2 - d*b^2, the product with the conjugate."""
        return self.a * self.a - self.d * self.b * self.b

    def trace(self) -> Rat:
        return 2 * self.a

    def _lift(self, other) -> "QuadFieldElement | None":
        if isinstance(other, QuadFieldElement):
            if other.d != self.d:
                raise FieldMismatchError(
                    f"cannot mix Q(sqrt({self.d})) and Q(sqrt({other.d}))"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadFieldElement(self.d, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadFieldElement(self.d, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadFieldElement(self.d, -self.a, -self.b)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadFieldElement(self.d, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadFieldElement(
            self.d,
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadFieldElement":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadFieldElement(self.d, self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadFieldElement(self.d, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadFieldElement):
            if self.d != other.d:
                # equal only if both are the same rational number
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.d, self.a, self.b))

    def sqrt(self) -> "QuadFieldElement | None":
        """A square root inside the same field, or None.

        For B != 0 solve (u + v*sqrt(d))^2 = A + B*sqrt(d): the norm
        A^2 - d*B^2 must be a rational square n0, then u^2 = (A + n0)/2 or
        (A - n0)/2 and v = B/(2u).
        """
        A, B, d = self.a, self.b, self.d
        if B == 0:
            u = sqrt_rat(A)
            if u is not None:
                return QuadFieldElement(d, u)
            v2 = A / d
            v = sqrt_rat(v2)
            if v is not None:
                return QuadFieldElement(d, 0, v)
            return None
        n0 = sqrt_rat(A * A - d * B * B)
        if n0 is None:
            return None
        for half in ((A + n0) / 2, (A - n0) / 2):
            u = sqrt_rat(half)
            if u is not None and u != 0:
                v = B / (2 * u)
                cand = QuadFieldElement(d, u, v)
                if cand * cand == self:
                    return cand
        return None

    def __repr__(self):
        if self.b == 0:
            return f"QuadFieldElement({self.d}, {self.a})"
        return f"QuadFieldElement({self.d}, {self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        bs = "" if self.b == 1 else ("-" if self.b == -1 else f"{self.b}*")
        root = f"sqrt({self.d})"
        if self.a == 0:
            return f"{bs}{root}"
        sign = "+" if self.b > 0 else "-"
        mag = abs(self.b)
        ms = "" if mag == 1 else f"{mag}*"
        return f"{self.a} {sign} {ms}{root}"
