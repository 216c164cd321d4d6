"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored lowest degree first with no trailing zeros, so two
equal polynomials always have identical tuples. Division is exact over Q.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .arith import Rat


def _coerce(c) -> Rat:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"bad coefficient {c!r}")


class PolyQ:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "PolyQ":
        return cls((c,))

    @classmethod
    def x_power(cls, n: int, c=1) -> "PolyQ":
        return cls((0,) * n + (c,))

    @property
    def degree(self) -> int:
        """Degree, with degree(0) = -1 by convention."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Rat:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Rat:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyQ):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == PolyQ((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "PolyQ":
        return PolyQ(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "PolyQ":
        if isinstance(other, (int, Fraction)):
            other = PolyQ((other,))
        if not isinstance(other, PolyQ):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(out)

    __radd__ = __add__

    def __sub__(self, other) -> "PolyQ":
        return self + (-other if isinstance(other, PolyQ) else PolyQ((-_coerce(other),)))

    def __rsub__(self, other) -> "PolyQ":
        return (-self) + other

    def __mul__(self, other) -> "PolyQ":
        if isinstance(other, (int, Fraction)):
            return PolyQ(tuple(c * other for c in self.coeffs))
        if not isinstance(other, PolyQ):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return PolyQ()
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PolyQ":
        if n < 0:
            raise ValueError("negative power")
        result = PolyQ((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "PolyQ"):
        if not isinstance(other, PolyQ):
            other = PolyQ((other,))
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return PolyQ(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.leading
        ob = other.coeffs
        for i in range(dq, -1, -1):
            c = rem[i + len(ob) - 1] / lead
            quot[i] = c
            if c != 0:
                for j, oc in enumerate(ob):
                    rem[i + j] -= c * oc
        return PolyQ(quot), PolyQ(rem)

    def __floordiv__(self, other) -> "PolyQ":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "PolyQ":
        return divmod(self, other)[1]

    def exact_div(self, other: "PolyQ") -> "PolyQ":
        """Quotient, asserting the division leaves no remainder."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("division was not exact")
        return q

    def monic(self) -> "PolyQ":
        if self.is_zero:
            return self
        lead = self.leading
        if lead == 1:
            return self
        return PolyQ(tuple(c / lead for c in self.coeffs))

    def derivative(self) -> "PolyQ":
        return PolyQ(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def gcd(self, other: "PolyQ") -> "PolyQ":
        """Monic gcd over Q."""
        a, b = self, other
        while not b.is_zero:
            r = a % b
            a, b = b, r.monic()
        return a.monic()

    def squarefree_part(self) -> "PolyQ":
        """f / gcd(f, f'), monic."""
        if self.degree <= 0:
            return self.monic()
        return self.exact_div(self.gcd(self.derivative())).monic()

    def primitive_int(self) -> "PolyQ":
        """Integer-coefficient multiple of self with content 1 and positive lead."""
        if self.is_zero:
            return self
        lcm_den = 1
        for c in self.coeffs:
            lcm_den = lcm_den * c.denominator // math.gcd(lcm_den, c.denominator)
        ints = [int(c * lcm_den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        if ints[-1] < 0:
            g = -g
        return PolyQ(tuple(Fraction(c // g) for c in ints))

    def evaluate(self, v):
        """Horner evaluation; v may be an int, Fraction or any ring element
        supporting + and * with Fraction."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * v + c
        if acc is None:
            return Fraction(0)
        return acc

    def reduce_mod(self, q: int) -> list[int]:
        """Coefficients mod q, lowest first; denominators must be units mod q."""
        out = []
        for c in self.coeffs:
            den = c.denominator % q
            if den == 0:
                raise ValueError(f"denominator not invertible mod {q}")
            out.append(c.numerator * pow(den, -1, q) % q)
        while out and out[-1] == 0:
            out.pop()
        return out

    def __repr__(self):
        if self.is_zero:
            return "PolyQ(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            cs = "" if (c == 1 and xs) else ("-" if (c == -1 and xs) else str(c))
            terms.append(cs + ("*" if cs not in ("", "-") and xs else "") + xs)
        return "PolyQ(" + " + ".join(terms).replace("+ -", "- ") + ")"
