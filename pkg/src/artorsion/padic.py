"""Root finding over Q and over quadratic fields via p-adic lifting.

The pipeline: pick an auxiliary prime q where the polynomial stays squarefree,
read off its roots mod q, Hensel-lift them to q^k for k large enough that
rational reconstruction at the requested height bound is essentially
noise-free, reconstruct, then verify every candidate exactly. Verification
makes the auxiliary prime choice a pure performance matter; completeness comes
from the squarefreeness of the reduction (all roots stay simple, so every
actual rational root lifts from its reduction).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import Rat, is_prime, legendre, next_prime, sqrt_mod_prime
from .poly import PolyQ
from .quadfield import QuadFieldElement

# Modulus slack beyond the reconstruction-uniqueness minimum 2*bound^2. Random
# residues then reconstruct with probability about 1/slack, so candidate lists
# stay clean even when thousands of residue pairs are tried.
_SLACK = 1 << 40

DEFAULT_HEIGHT_BOUND = 10**12


@dataclass(frozen=True)
class PadicContext:
    """An auxiliary prime q with working precision q^k.

    sqrt_d is a fixed square root of d mod q^k when the context serves a
    quadratic field, else None.
    """

    prime: int
    precision: int
    d: int | None = None
    sqrt_d: int | None = None

    @property
    def modulus(self) -> int:
        return self.prime**self.precision

    def __post_init__(self):
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        if self.precision < 1:
            raise ValueError("precision must be >= 1")


def _lift_sqrt(a: int, root: int, q: int, k: int) -> int:
    """Newton-lift root^2 = a from mod q to mod q^k (q odd, root a unit)."""
    m = q
    r = root
    while m < q**k:
        m = min(m * m, q**k)
        r = (r + (a - r * r) * pow(2 * r, -1, m)) % m
    return r % q**k


def context_for(
    d: int | None,
    avoid: set[int],
    precision_target: int,
    min_prime: int = 50,
) -> PadicContext:
    """Smallest usable auxiliary prime q > min_prime.

    Skips primes in `avoid` and, when d is given, primes where d is not a
    nonzero quadratic residue (so sqrt(d) exists mod q and lifts).
    """
    q = next_prime(min_prime)
    while True:
        if q not in avoid and (d is None or legendre(d, q) == 1):
            k = 1
            while q**k < precision_target:
                k += 1
            w = None
            if d is not None:
                w = _lift_sqrt(d % q**k, sqrt_mod_prime(d, q), q, k)
            return PadicContext(q, k, d, w)
        q = next_prime(q)


@dataclass(frozen=True)
class HenselRoots:
    """Roots of f mod q^k obtained by lifting the simple roots mod q.

    `unliftable` reports the residues mod q that were multiple roots of the
    reduction; callers needing completeness must pick a context where the
    reduction is squarefree, making this list empty.
    """

    lifted: tuple[int, ...]
    unliftable: tuple[int, ...]


def hensel_roots(f: PolyQ, ctx: PadicContext) -> HenselRoots:
    """All roots of f mod q lifted to q^precision by Newton iteration."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    q = ctx.prime
    fq = f.reduce_mod(q)
    if not fq:
        raise ValueError(f"f vanishes identically mod {q}")
    dfq = [i * c % q for i, c in enumerate(fq)][1:]

    def ev(cs, x, m):
        acc = 0
        for c in reversed(cs):
            acc = (acc * x + c) % m
        return acc

    simple = []
    multiple = []
    for r in range(q):
        if ev(fq, r, q) == 0:
            (simple if ev(dfq, r, q) != 0 else multiple).append(r)

    target = ctx.modulus
    cs_full = [c.numerator * pow(c.denominator, -1, target) % target for c in f.coeffs]
    dcs_full = [i * c % target for i, c in enumerate(cs_full)][1:]
    lifted = []
    for r0 in simple:
        m = q
        r = r0
        while m < target:
            m = min(m * m, target)
            fr = ev(cs_full, r, m)
            dfr = ev(dcs_full, r, m)
            r = (r - fr * pow(dfr, -1, m)) % m
        lifted.append(r % target)
    return HenselRoots(tuple(sorted(lifted)), tuple(sorted(multiple)))


def rational_reconstruct(residue: int, modulus: int, bound: int) -> Rat | None:
    """The unique n/m with |n| <= bound, 0 < m <= bound, gcd(m, modulus) = 1
    and n = m * residue mod modulus, or None if there is none.

    Requires 2 * bound^2 <= modulus, which makes the solution unique when it
    exists (two distinct solutions would differ by a multiple of the modulus
    inside a box of area 2 * bound^2).
    """
    if not 0 <= residue < modulus:
        raise ValueError("residue out of range")
    if 2 * bound * bound > modulus:
        raise ValueError("modulus too small for the requested bound")
    r0, t0 = modulus, 0
    r1, t1 = residue, 1
    while r1 > bound:
        quot = r0 // r1
        r0, r1 = r1, r0 - quot * r1
        t0, t1 = t1, t0 - quot * t1
    if t1 == 0 or abs(t1) > bound:
        return None
    if math.gcd(r1, abs(t1)) != 1 or math.gcd(abs(t1), modulus) != 1:
        return None
    n, m = (r1, t1) if t1 > 0 else (-r1, -t1)
    if (n - m * residue) % modulus != 0:
        return None
    return Fraction(n, m)


def _prepare(f: PolyQ) -> PolyQ:
    g = f.squarefree_part().primitive_int()
    if g.degree < 1:
        return g
    return g


def _squarefree_context(g: PolyQ, d: int | None, target: int, min_prime: int = 50):
    """First context q > min_prime where g mod q keeps degree and stays
    squarefree (all roots simple)."""
    lead_n = abs(int(g.leading))
    q_floor = min_prime
    while True:
        ctx = context_for(d, set(), target, q_floor)
        q = ctx.prime
        if lead_n % q != 0:
            gq = g.reduce_mod(q)
            if len(gq) - 1 == g.degree and _is_squarefree_mod(gq, q):
                return ctx
        q_floor = q
        if q_floor > 10**6:
            raise RuntimeError("no usable auxiliary prime found")


def _is_squarefree_mod(cs: list[int], q: int) -> bool:
    a = list(cs)
    b = [i * c % q for i, c in enumerate(cs)][1:]
    while b and any(b):
        a, b = b, _polymod_mod(a, b, q)
    b_nonzero = [c for c in b if c]
    return not b_nonzero and len(a) == 1


def _polymod_mod(a: list[int], b: list[int], q: int) -> list[int]:
    while b and b[-1] == 0:
        b = b[:-1]
    rem = list(a)
    inv_lead = pow(b[-1], -1, q)
    while len(rem) >= len(b):
        if rem[-1]:
            c = rem[-1] * inv_lead % q
            off = len(rem) - len(b)
            for j, bc in enumerate(b):
                rem[off + j] = (rem[off + j] - c * bc) % q
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def rational_roots(f: PolyQ, height_bound: int = DEFAULT_HEIGHT_BOUND) -> list[Rat]:
    """All rational roots of f (numerator and denominator up to height_bound),
    each verified exactly; sorted ascending."""
    g = _prepare(f)
    if g.degree < 1:
        if g.is_zero:
            raise ValueError("zero polynomial")
        return []
    target = 2 * height_bound * height_bound * _SLACK
    ctx = _squarefree_context(g, None, target)
    lifted = hensel_roots(g, ctx)
    out = []
    for r in lifted.lifted:
        cand = rational_reconstruct(r, ctx.modulus, height_bound)
        if cand is not None and g.evaluate(cand) == 0:
            out.append(cand)
    return sorted(set(out))


def quadratic_field_roots(
    f: PolyQ, d: int, height_bound: int = DEFAULT_HEIGHT_BOUND
) -> list[QuadFieldElement]:
    """All roots of f lying in Q(sqrt(d)), rational ones included.

    A root x = a + b*sqrt(d) reduces, under an auxiliary prime split in the
    field, to the pair a + b*w and a - b*w with w = sqrt(d) mod q^k. Running
    over ordered pairs (r1, r2) of lifted roots recovers a = (r1 + r2)/2 and
    b = (r1 - r2)/(2w); reconstruction plus a second-prime filter plus exact
    evaluation keeps exactly the true roots.
    """
    g = _prepare(f)
    if g.degree < 1:
        if g.is_zero:
            raise ValueError("zero polynomial")
        return []
    target = 2 * height_bound * height_bound * _SLACK
    ctx = _squarefree_context(g, d, target)
    ctx2 = _squarefree_context(g, d, ctx.prime + 1, min_prime=ctx.prime)
    lifted = hensel_roots(g, ctx)
    mod = ctx.modulus
    inv2 = pow(2, -1, mod)
    inv2w = pow(2 * ctx.sqrt_d, -1, mod)

    q2 = ctx2.prime
    g2 = g.reduce_mod(q2)
    w2 = ctx2.sqrt_d % q2

    def ev2(a2, b2):
        x = (a2 + b2 * w2) % q2
        acc = 0
        for c in reversed(g2):
            acc = (acc * x + c) % q2
        return acc

    found: dict[tuple, QuadFieldElement] = {}
    for r1 in lifted.lifted:
        for r2 in lifted.lifted:
            a_res = (r1 + r2) * inv2 % mod
            b_res = (r1 - r2) * inv2w % mod
            a = rational_reconstruct(a_res, mod, height_bound)
            if a is None:
                continue
            b = rational_reconstruct(b_res, mod, height_bound)
            if b is None:
                continue
            a2 = a.numerator * pow(a.denominator, -1, q2) % q2 if a.denominator % q2 else None
            b2 = b.numerator * pow(b.denominator, -1, q2) % q2 if b.denominator % q2 else None
            if a2 is not None and b2 is not None and ev2(a2, b2) != 0:
                continue
            key = (a, b)
            if key in found:
                continue
            cand = QuadFieldElement(d, a, b)
            if g.evaluate(cand) == 0:
                found[key] = cand
    return sorted(found.values(), key=lambda z: (z.a, z.b))
