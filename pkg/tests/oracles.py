"""Independent brute-force oracles.

Nothing here imports the package: these are slow, obvious implementations
used to check the real ones.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product
from math import isqrt, prod


def leibniz_det(rows):
    """Determinant as a sum over permutations."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = prod(rows[i][perm[i]] for i in range(n)) if n else 1
        total += -term if inversions % 2 else term
    return total


def continuant_by_fraction(qs):
    """[q1..qn] as the numerator of the continued fraction q1 + 1/(q2 + ...), for positive integers."""
    num, den = 1, 0
    for q in reversed(qs):
        num, den = q * num + den, num
    return num


def two_square_reps(n):
    """All (x, y) with x >= y >= 0 and x^2 + y^2 = n."""
    out = []
    for y in range(isqrt(n // 2) + 1):
        x2 = n - y * y
        x = isqrt(x2)
        if x * x == x2 and x >= y:
            out.append((x, y))
    return out


def four_square_reps(n):
    """All descending quadruples of nonnegative integers with squares summing to n."""
    out = []
    r = isqrt(n)
    for a in range(r + 1):
        for b in range(a + 1):
            for c in range(b + 1):
                d2 = n - a * a - b * b - c * c
                if d2 < 0:
                    continue
                d = isqrt(d2)
                if d * d == d2 and d <= c:
                    out.append((a, b, c, d))
    return out


def sqrt_minus_one_scan(p):
    """Smallest z in [2, p/2] with z^2 = -1 (mod p), or None."""
    for z in range(2, p // 2 + 1):
        if (z * z + 1) % p == 0:
            return z
    return None


def primes_below(n):
    sieve = bytearray([1]) * n
    sieve[:2] = b"\x00\x00"
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return [i for i in range(n) if sieve[i]]


# polynomials as coefficient lists (low to high) of Fractions


def pstrip(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(a, b):
    n = max(len(a), len(b))
    return pstrip([(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)])


def pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return pstrip(out)


def pscale(a, c):
    return pstrip([c * x for x in a])


def pdivmod(a, b):
    a = [Fraction(x) for x in pstrip(a)]
    b = pstrip(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = Fraction(a[-1]) / b[-1]
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] -= c * y
        a = pstrip(a)
    return pstrip(q), a


def cyclotomic(n):
    """Phi_n by dividing X^n - 1 by Phi_d for the proper divisors d of n."""
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            poly, r = pdivmod(poly, cyclotomic(d))
            assert not r
    return poly


def xpoly(*pairs):
    """Coefficient list from (coefficient, exponent) pairs."""
    top = max(k for _, k in pairs)
    out = [Fraction(0)] * (top + 1)
    for c, k in pairs:
        out[k] += Fraction(c)
    return pstrip(out)


# Gaussian / Eisenstein / Z[sqrt 3] as integer pairs


def gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def emul(a, b):
    # j^2 = -1 - j
    bd = a[1] * b[1]
    return (a[0] * b[0] - bd, a[0] * b[1] + a[1] * b[0] - bd)


def enorm(a, b):
    return a * a - a * b + b * b


def snorm(a, b):
    return a * a - 3 * b * b


def small_divisor_search(limit, predicate):
    """First pair (a, b) in a square window satisfying predicate, scanning rows outward."""
    for a, b in product(range(-limit, limit + 1), repeat=2):
        if predicate(a, b):
            return a, b
    return None
