"""Elliptic curves over Q in long Weierstrass form, with exact group law,
global minimal models and reduction data.

Coordinates of points are Fractions or QuadFieldElements; the group law is
written generically over both. A curve computes its minimal model at
construction (Laska-Kraus-Connell), so reduction-type queries and point
counting always act on integral minimal data.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import NamedTuple

from .arith import Rat, factorint, is_prime, legendre, sqrt_rat, v_int
from .quadfield import FieldMismatchError, QuadFieldElement


class SingularCurveError(ValueError):
    """The given coefficients have vanishing discriminant."""


class ReductionKind(enum.Enum):
    GOOD = "good"
    MULTIPLICATIVE_SPLIT = "multiplicative_split"
    MULTIPLICATIVE_NONSPLIT = "multiplicative_nonsplit"
    ADDITIVE = "additive"


class BadPrime(NamedTuple):
    prime: int
    kind: ReductionKind
    valuation: int  # v_p of the minimal discriminant


def _kraus_ok(p: int, c4: int, c6: int) -> bool:
    """Whether (c4, c6) arise from an integral Weierstrass model at p in {2, 3}."""
    if p == 3:
        return c6 == 0 or v_int(3, c6) != 2
    if p == 2:
        if c6 % 4 == 3:
            return True
        v4 = 99 if c4 == 0 else v_int(2, c4)
        return v4 >= 4 and c6 % 32 in (0, 8)
    return True


def _coord(v):
    if isinstance(v, QuadFieldElement):
        if v.b == 0:
            return v.a
        return v
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    raise TypeError(f"bad coordinate {v!r}")


def _coord_d(v) -> int | None:
    return v.d if isinstance(v, QuadFieldElement) else None


def _coord_conj(v):
    return v.conjugate() if isinstance(v, QuadFieldElement) else v


def _coord_key(v):
    if isinstance(v, QuadFieldElement):
        return (v.d, v.a, v.b)
    return (0, v, Fraction(0))


class Curve:
    """y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6, nonsingular over Q."""

    __slots__ = (
        "a1", "a2", "a3", "a4", "a6",
        "b2", "b4", "b6", "b8", "c4", "c6", "disc",
        "minimal_coeffs", "minimal_c4", "minimal_c6", "minimal_disc",
        "transform", "bad_primes",
        "_minimal_cache",
    )

    def __init__(self, a1, a2, a3, a4, a6):
        a1, a2, a3, a4, a6 = (Fraction(v) for v in (a1, a2, a3, a4, a6))
        object.__setattr__(self, "a1", a1)
        object.__setattr__(self, "a2", a2)
        object.__setattr__(self, "a3", a3)
        object.__setattr__(self, "a4", a4)
        object.__setattr__(self, "a6", a6)
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        assert 4 * b8 == b2 * b6 - b4 * b4
        c4 = b2 * b2 - 24 * b4
        c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
        disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        if disc == 0:
            raise SingularCurveError(f"singular coefficients {(a1, a2, a3, a4, a6)}")
        assert c4**3 - c6**2 == 1728 * disc
        for name, val in (("b2", b2), ("b4", b4), ("b6", b6), ("b8", b8),
                          ("c4", c4), ("c6", c6), ("disc", disc)):
            object.__setattr__(self, name, val)
        self._compute_minimal()
        object.__setattr__(self, "_minimal_cache", None)

    def __setattr__(self, name, value):
        raise AttributeError("Curve is immutable")

    # -- minimal model ----------------------------------------------------

    def _compute_minimal(self):
        # scale so that all five coefficients become integral (then every
        # derived invariant is integral too), and reduce from there
        s = 1
        for a in (self.a1, self.a2, self.a3, self.a4, self.a6):
            s = s * a.denominator // math.gcd(s, a.denominator)
        C4 = int(self.c4 * s**4)
        C6 = int(self.c6 * s**6)
        D = self.disc * s**12
        assert D.denominator == 1
        D = int(D)

        u_total = Fraction(1, s)
        # divide out content: u_p = min(floor(v_p(c4)/4), floor(v_p(c6)/6)),
        # with Kraus conditions re-checked at 2 and 3
        if C4 != 0 and C6 != 0:
            support = set(factorint(math.gcd(abs(C4), abs(C6))))
        elif C4 == 0:
            support = set(factorint(abs(C6)))
        else:
            support = set(factorint(abs(C4)))
        for p in sorted(support):
            e4 = v_int(p, C4) if C4 else None
            e6 = v_int(p, C6) if C6 else None
            eD = v_int(p, D)
            cands = [eD // 12]
            if e4 is not None:
                cands.append(e4 // 4)
            if e6 is not None:
                cands.append(e6 // 6)
            up = min(cands)
            if p in (2, 3):
                while up > 0 and not _kraus_ok(p, C4 // p**(4 * up), C6 // p**(6 * up)):
                    up -= 1
            if up > 0:
                C4 //= p**(4 * up)
                C6 //= p**(6 * up)
                D //= p**(12 * up)
                u_total *= p**up

        # Connell's reconstruction of a reduced model from (c4, c6)
        b2 = -C6 % 12
        if b2 > 6:
            b2 -= 12
        b4, r4 = divmod(b2 * b2 - C4, 24)
        assert r4 == 0
        b6, r6 = divmod(-(b2**3) + 36 * b2 * b4 - C6, 216)
        assert r6 == 0
        a1 = b2 % 2
        a3 = b6 % 2
        a2, r2 = divmod(b2 - a1, 4)
        a4, ra4 = divmod(b4 - a1 * a3, 2)
        a6, ra6 = divmod(b6 - a3, 4)
        assert r2 == ra4 == ra6 == 0
        mc = (a1, a2, a3, a4, a6)
        object.__setattr__(self, "minimal_coeffs", mc)
        object.__setattr__(self, "minimal_c4", C4)
        object.__setattr__(self, "minimal_c6", C6)
        object.__setattr__(self, "minimal_disc", D)

        # transformation (u, r, s, t): x = u^2 x' + r, y = u^3 y' + s u^2 x' + t
        # maps minimal-model coordinates (x', y') to coordinates on self
        u = u_total
        st = (u * a1 - self.a1) / 2
        rr = (u * u * a2 - self.a2 + st * self.a1 + st * st) / 3
        tt = (u**3 * a3 - self.a3 - rr * self.a1) / 2
        assert u**4 * a4 == self.a4 - st * self.a3 + 2 * rr * self.a2 \
            - (tt + rr * st) * self.a1 + 3 * rr * rr - 2 * st * tt
        assert u**6 * a6 == self.a6 + rr * self.a4 + rr * rr * self.a2 + rr**3 \
            - tt * self.a3 - tt * tt - rr * tt * self.a1
        object.__setattr__(self, "transform", (u, rr, st, tt))

        bad = []
        for p in sorted(factorint(D)):
            vD = v_int(p, D)
            if C4 % p != 0:
                if p == 2:
                    split = (-C6) % 8 == 1
                else:
                    split = legendre(-C6, p) == 1
                kind = ReductionKind.MULTIPLICATIVE_SPLIT if split \
                    else ReductionKind.MULTIPLICATIVE_NONSPLIT
            else:
                kind = ReductionKind.ADDITIVE
            bad.append(BadPrime(p, kind, vD))
        object.__setattr__(self, "bad_primes", tuple(bad))

    @property
    def minimal_model(self) -> "Curve":
        cached = self._minimal_cache
        if cached is None:
            if self.minimal_coeffs == tuple(
                (self.a1, self.a2, self.a3, self.a4, self.a6)
            ):
                cached = self
            else:
                cached = Curve(*self.minimal_coeffs)
            object.__setattr__(self, "_minimal_cache", cached)
        return cached

    @property
    def is_minimal(self) -> bool:
        return tuple((self.a1, self.a2, self.a3, self.a4, self.a6)) == \
            tuple(Fraction(c) for c in self.minimal_coeffs)

    @property
    def j_invariant(self) -> Rat:
        return self.c4**3 / self.disc

    @property
    def is_semistable(self) -> bool:
        return all(bp.kind != ReductionKind.ADDITIVE for bp in self.bad_primes)

    def reduction_kind(self, p: int) -> ReductionKind:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        for bp in self.bad_primes:
            if bp.prime == p:
                return bp.kind
        return ReductionKind.GOOD

    def peu_ramifie_at(self, p: int) -> bool:
        """For semistable curves: whether the p-torsion is finite at p, i.e.
        good reduction or v_p(minimal discriminant) divisible by p."""
        kind = self.reduction_kind(p)
        if kind == ReductionKind.ADDITIVE:
            raise ValueError(f"additive reduction at {p}; query requires semistability")
        if kind == ReductionKind.GOOD:
            return True
        return v_int(p, self.minimal_disc) % p == 0

    # -- point counting ---------------------------------------------------

    def count_points_mod(self, q: int) -> int:
        """#E(F_q) for an odd good prime q <= 10^4, counted on the minimal
        model via the quadratic character of 4x^3 + b2 x^2 + 2 b4 x + b6."""
        if not is_prime(q) or q == 2:
            raise ValueError(f"{q} must be an odd prime")
        if q > 10**4:
            raise ValueError("prime exceeds the enumeration cap 10^4")
        if self.minimal_disc % q == 0:
            raise ValueError(f"bad reduction at {q}")
        a1, a2, a3, a4, a6 = self.minimal_coeffs
        b2 = (a1 * a1 + 4 * a2) % q
        b4 = (2 * a4 + a1 * a3) % q
        b6 = (a3 * a3 + 4 * a6) % q
        sq = bytearray(q)
        for t in range((q + 1) // 2):
            sq[t * t % q] = 1
        total = q + 1
        tb4 = 2 * b4 % q
        for x in range(q):
            v = (((4 * x + b2) * x + tb4) * x + b6) % q
            if v:
                total += 1 if sq[v] else -1
        a = q + 1 - total
        assert a * a <= 4 * q
        return total

    def count_points_sq(self, q: int) -> int:
        """#E(F_{q^2}) derived from the Frobenius trace over F_q."""
        a = q + 1 - self.count_points_mod(q)
        return (q + 1 - a) * (q + 1 + a)

    # -- points -----------------------------------------------------------

    def infinity(self) -> "CurvePoint":
        return CurvePoint(self, None, None, _checked=True)

    def point(self, x, y) -> "CurvePoint":
        return CurvePoint(self, x, y)

    def lift_x(self, x, d: int | None = None) -> "list[CurvePoint]":
        """Points on the curve with the given x coordinate.

        Search field: Q for a rational x with d omitted, otherwise the
        quadratic field Q(sqrt(d)) (taken from x itself when x is already
        quadratic). A rational x can carry quadratic y values, so pass d
        when working over a field.
        """
        x = _coord(x)
        xd = _coord_d(x)
        if d is not None and xd is not None and d != xd:
            raise FieldMismatchError(f"x lives in Q(sqrt({xd})), not Q(sqrt({d}))")
        field_d = xd if xd is not None else d
        rhs = ((x + self.a2) * x + self.a4) * x + self.a6
        lin = self.a1 * x + self.a3
        # y^2 + lin*y - rhs = 0; its discriminant is the 2-division cubic at x
        disc = lin * lin + 4 * rhs
        if isinstance(disc, QuadFieldElement):
            root = disc.sqrt()
        elif field_d is not None:
            root = QuadFieldElement(field_d, disc).sqrt()
        else:
            root = sqrt_rat(disc)
        if root is None:
            return []
        y1 = (-lin + root) / 2
        y2 = (-lin - root) / 2
        pts = [CurvePoint(self, x, y1)]
        if y2 != y1:
            pts.append(CurvePoint(self, x, y2))
        return pts

    def map_from_minimal(self, pt: "CurvePoint") -> "CurvePoint":
        """Carry a point on the minimal model back to this model."""
        if pt.curve != self.minimal_model:
            raise ValueError("point is not on the minimal model of this curve")
        if pt.is_infinity:
            return self.infinity()
        u, r, s, t = self.transform
        x = u * u * pt.x + r
        y = u**3 * pt.y + s * u * u * pt.x + t
        return CurvePoint(self, x, y)

    def map_to_minimal(self, pt: "CurvePoint") -> "CurvePoint":
        if pt.curve != self:
            raise ValueError("point is not on this curve")
        if pt.is_infinity:
            return self.minimal_model.infinity()
        u, r, s, t = self.transform
        xp = (pt.x - r) / (u * u)
        yp = (pt.y - s * (pt.x - r) - t) / u**3
        return CurvePoint(self.minimal_model, xp, yp)

    def a_invariants(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __eq__(self, other):
        if not isinstance(other, Curve):
            return NotImplemented
        return self.a_invariants() == other.a_invariants()

    def __hash__(self):
        return hash(self.a_invariants())

    def __repr__(self):
        short = tuple(
            int(c) if c.denominator == 1 else c for c in self.a_invariants()
        )
        return f"Curve{short}"


class CurvePoint:
    """A point on a Curve: infinity, or affine with exact coordinates.

    Coordinates live in Q or in one quadratic field Q(sqrt(d)); a coordinate
    whose sqrt(d) part is zero is stored as a plain Fraction, so equal points
    always compare and hash equal regardless of how they were produced.
    """

    __slots__ = ("curve", "x", "y")

    def __init__(self, curve: Curve, x, y, _checked: bool = False):
        object.__setattr__(self, "curve", curve)
        if x is None or y is None:
            if not (x is None and y is None):
                raise ValueError("both coordinates must be None for infinity")
            object.__setattr__(self, "x", None)
            object.__setattr__(self, "y", None)
            return
        x = _coord(x)
        y = _coord(y)
        dx, dy = _coord_d(x), _coord_d(y)
        if dx is not None and dy is not None and dx != dy:
            raise FieldMismatchError(f"coordinates in different fields: {dx}, {dy}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        if not _checked:
            lhs = y * y + curve.a1 * x * y + curve.a3 * y
            rhs = ((x + curve.a2) * x + curve.a4) * x + curve.a6
            if lhs != rhs:
                raise ValueError(f"({x}, {y}) does not satisfy the curve equation")

    def __setattr__(self, name, value):
        raise AttributeError("CurvePoint is immutable")

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @property
    def ambient_d(self) -> int | None:
        """The d of the quadratic field the coordinates genuinely need,
        or None for a rational (or infinite) point."""
        if self.is_infinity:
            return None
        dx = _coord_d(self.x)
        return dx if dx is not None else _coord_d(self.y)

    @property
    def is_rational(self) -> bool:
        return self.ambient_d is None

    def key(self):
        """Canonical sortable identity, independent of representation."""
        if self.is_infinity:
            return ((), ())
        return (_coord_key(self.x), _coord_key(self.y))

    def conjugate(self) -> "CurvePoint":
        """Image under the nontrivial automorphism of the ambient quadratic
        field; rational points are fixed."""
        if self.is_infinity or self.is_rational:
            return self
        return CurvePoint(
            self.curve, _coord_conj(self.x), _coord_conj(self.y), _checked=True
        )

    def __neg__(self) -> "CurvePoint":
        if self.is_infinity:
            return self
        E = self.curve
        return CurvePoint(
            E, self.x, -self.y - E.a1 * self.x - E.a3, _checked=True
        )

    def __add__(self, other: "CurvePoint") -> "CurvePoint":
        if not isinstance(other, CurvePoint):
            return NotImplemented
        if self.curve != other.curve:
            raise ValueError("points on different curves")
        d1, d2 = self.ambient_d, other.ambient_d
        if d1 is not None and d2 is not None and d1 != d2:
            raise FieldMismatchError(f"points in different fields: {d1}, {d2}")
        if self.is_infinity:
            return other
        if other.is_infinity:
            return self
        E = self.curve
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        if x1 == x2:
            if y2 == -y1 - E.a1 * x1 - E.a3:
                return E.infinity()
            # doubling; the tangent denominator vanishes only at 2-torsion,
            # which the branch above already returned
            num = (3 * x1 + 2 * E.a2) * x1 + E.a4 - E.a1 * y1
            den = 2 * y1 + E.a1 * x1 + E.a3
            lam = num / den
        else:
            lam = (y2 - y1) / (x2 - x1)
        x3 = lam * lam + E.a1 * lam - E.a2 - x1 - x2
        y3 = lam * (x1 - x3) - y1 - E.a1 * x3 - E.a3
        return CurvePoint(E, x3, y3, _checked=True)

    def __sub__(self, other: "CurvePoint") -> "CurvePoint":
        return self + (-other)

    def __rmul__(self, n: int) -> "CurvePoint":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (-n) * (-self)
        result = self.curve.infinity()
        base = self
        while n:
            if n & 1:
                result = result + base
            base = base + base
            n >>= 1
        return result

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        return self.curve == other.curve and self.key() == other.key()

    def __hash__(self):
        return hash((self.curve.a_invariants(), self.key()))

    def __repr__(self):
        if self.is_infinity:
            return "CurvePoint(O)"
        return f"CurvePoint({self.x}, {self.y})"
