"""Integer and rational arithmetic helpers.

Everything here is exact: deterministic primality, factoring by trial division
plus Pollard rho, modular square roots, p-adic valuations and exact square
roots of rationals. No floats anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rat = Fraction

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin.

    The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known to be
    exact for all n < 3.3 * 10^24, far beyond anything handled here.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = max(n + 1, 2)
    if k % 2 == 0 and k != 2:
        k += 1
    while not is_prime(k):
        k += 2 if k != 2 else 1
    return k


def primes_from(start: int):
    """Yield primes >= start in increasing order, indefinitely."""
    p = start if is_prime(start) else next_prime(start - 1)
    if p < start:
        p = next_prime(start)
    while True:
        yield p
        p = next_prime(p)


def _pollard_rho(n: int) -> int:
    # n odd composite, not a prime power of a small prime
    if n % 2 == 0:
        return 2
    x0 = 2
    c = 1
    while True:
        x = y = x0
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def factorint(n: int) -> dict[int, int]:
    """Factor |n| into {prime: exponent}; n must be nonzero. factorint(1) == {}."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # trial division up to a modest bound clears desk-scale numbers quickly
    p = 41
    while p * p <= n and p < 10000:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack.extend([root, root])
            continue
        d = _pollard_rho(m)
        stack.extend([d, m // d])
    return out


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of |n|, n nonzero."""
    ds = [1]
    for p, e in factorint(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def v_int(p: int, n: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def v_p(x: Rat, p: int) -> int:
    """p-adic valuation of a nonzero rational; requires p prime."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if x == 0:
        raise ValueError("valuation of 0 is undefined")
    return v_int(p, x.numerator) - v_int(p, x.denominator)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1}; p an odd prime."""
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def sqrt_mod_prime(a: int, p: int) -> int:
    """A square root of a mod p (p odd prime); raises if a is a non-residue."""
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        raise ValueError(f"{a} is not a quadratic residue mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m = s
    c = pow(z, q, p)
    t = pow(a, q, p)
    r = pow(a, (q + 1) // 2, p)
    while t != 1:
        i = 0
        t2 = t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m = i
        c = b * b % p
        t = t * c % p
        r = r * b % p
    return r


def crt(r1: int, m1: int, r2: int, m2: int) -> int:
    """Solve x = r1 mod m1, x = r2 mod m2 for coprime moduli; 0 <= x < m1*m2."""
    g = math.gcd(m1, m2)
    if g != 1:
        raise ValueError("moduli must be coprime")
    return (r1 + (r2 - r1) * pow(m1, -1, m2) % m2 * m1) % (m1 * m2)


def isqrt_exact(n: int) -> int | None:
    """Integer square root if n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def sqrt_rat(x: Rat) -> Rat | None:
    """Exact square root of a rational, or None if x is not a square in Q."""
    if x < 0:
        return None
    num = isqrt_exact(x.numerator)
    if num is None:
        return None
    den = isqrt_exact(x.denominator)
    if den is None:
        return None
    return Rat(num, den)


def square_divisors(n: int) -> list[int]:
    """All e >= 1 with e^2 dividing |n|, ascending. n nonzero."""
    out = [1]
    for p, k in factorint(n).items():
        out = [d * p**j for d in out for j in range(k // 2 + 1)]
    return sorted(out)
