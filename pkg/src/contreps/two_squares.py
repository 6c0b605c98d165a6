"""Sums of two squares over Z and over polynomial rings.

Over Z a prime p = 1 (mod 4) is handled two ways: the full Euclidean run on
(p, z) with z*z = -1 (mod p), which yields an even palindromic quotient
sequence, and the early-stopping run that reads x, y off the first remainders
below sqrt(p).  Over F[X] (char != 2, -1 not a square) the same continuant
construction is cross-checked against a gcd computed in F(i)[X].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .continuants import QuotientSeq, continuant, zigzag_rescale
from .errors import (
    BadField,
    DegreeError,
    DivisionByZero,
    NoSolution,
    NotADivisor,
    NotAUnit,
    NotCoprime,
    NotRepresentable,
    PalindromeViolation,
    PreconditionFailed,
    ReconstructionMismatch,
    UnitNotSumOfSquares,
)
from .euclid import below_sqrt, coprime, euclid_until, euclidean_algorithm, gcd, half_degree
from .ntheory import is_prime
from .rings import (
    QQ,
    ZI,
    ZZ,
    Elem,
    Integers,
    PolyRing,
    PrimeField,
    QuadExt,
    Rationals,
    Ring,
    coefficient,
    degree,
    leading_coefficient,
)


@dataclass(frozen=True)
class TwoSquaresRep:
    """``m = (x^2 + y^2) * unit``."""

    x: Elem
    y: Elem
    unit: Elem

    def value(self) -> Elem:
        return (self.x * self.x + self.y * self.y) * self.unit


def _check_prime_for_two_squares(p: int) -> None:
    if not is_prime(p):
        raise PreconditionFailed(f"{p} is not prime")
    if p % 4 == 3:
        raise NotRepresentable(f"not representable: {p} == 3 (mod 4)")


def sqrt_minus_one_mod_p(p: int) -> int:
    """``z`` with ``z^2 = -1 (mod p)`` and ``2 <= z <= p/2``.

    Tries a = 2, 3, ... until ``a^((p-1)/2) = -1``; then ``z = a^((p-1)/4)``.
    """
    if p % 4 != 1 or not is_prime(p):
        raise NoSolution(f"z^2 = -1 (mod {p}) has no solution unless p is a prime = 1 (mod 4)")
    a = 2
    while pow(a, (p - 1) // 2, p) != p - 1:
        a += 1
    z = pow(a, (p - 1) // 4, p)
    return min(z, p - z)


def brillhart_two_squares(p: int) -> TwoSquaresRep:
    if p == 2:
        return TwoSquaresRep(ZZ(1), ZZ(1), ZZ(1))
    _check_prime_for_two_squares(p)
    z = sqrt_minus_one_mod_p(p)
    trace = euclid_until(ZZ(p), ZZ(z), below_sqrt(p))
    x = trace.remainders[-1]
    y = trace.remainders[-2] % x
    if x * x + y * y != p or not y.as_int() < x.as_int():
        raise ReconstructionMismatch(f"early stop failed for p={p}")
    return TwoSquaresRep(x, y, ZZ(1))


def smith_two_squares(p: int) -> tuple[QuotientSeq, TwoSquaresRep]:
    """Full Euclidean run on (p, z); the quotients form an even palindrome."""
    _check_prime_for_two_squares(p)
    if p == 2:
        raise PreconditionFailed("the palindromic construction needs p = 1 (mod 4)")
    z = sqrt_minus_one_mod_p(p)
    trace = euclidean_algorithm(ZZ(p), ZZ(z))
    qs = list(trace.quotients)
    if len(qs) % 2 or qs != qs[::-1]:
        raise PalindromeViolation(f"quotients for p={p} are not an even palindrome: {qs}")
    s = len(qs) // 2
    x, y = continuant(qs[:s], ZZ), continuant(qs[: s - 1], ZZ)
    if x * x + y * y != p:
        raise ReconstructionMismatch(f"p={p}: {x}^2 + {y}^2 != p")
    return QuotientSeq(ZZ, qs, trace.gcd), TwoSquaresRep(x, y, ZZ(1))


def multiplier_from_representation(x: Elem, y: Elem) -> tuple[Elem, Elem]:
    """``(z, w)`` with ``z^2 + 1 = (x^2 + y^2) * w`` from the continuants of (x, y)."""
    ring = x.ring
    if not ring.commutative:
        raise PreconditionFailed(f"{ring} is not commutative")
    trace = euclidean_algorithm(x, y)
    h = trace.gcd
    if not h.is_unit():
        raise NotCoprime(f"{x} and {y} are not coprime")
    m = x * x + y * y
    if y.is_zero():
        z, w = ring.zero(), (x * x).inverse()
    else:
        qs = list(trace.quotients)
        head = qs[-2::-1] if len(qs) > 1 else []
        z = continuant(qs[::-1] + qs[:-1], ring)
        w = continuant(head + qs[:-1], ring) * (h * h).inverse()
    if z * z + 1 != m * w:
        raise ReconstructionMismatch("z^2 + 1 != (x^2 + y^2) w")
    return z, w


def split_when_i_exists(x: Elem, k: Elem) -> tuple[Elem, Elem]:
    """``x = ((x+1)/2)^2 + ((x-1)/(2k))^2`` when ``k^2 = -1``."""
    ring = x.ring
    if k * k != -1:
        raise PreconditionFailed(f"{k}^2 != -1")
    two = ring(2)
    try:
        a = (x + 1) / two
        b = (x - 1) / (two * k)
    except (NotADivisor, NotAUnit, DivisionByZero) as exc:
        raise PreconditionFailed(f"cannot halve in {ring}: {exc}") from None
    assert a * a + b * b == x
    return a, b


def gaussian_two_squares(m: Elem) -> TwoSquaresRep:
    """A Gaussian integer as ``x^2 + y^2`` with Gaussian x, y.

    Squares of Gaussian integers have even imaginary part, so an odd imaginary
    part is refused outright.  Otherwise factor ``m = u*v`` with ``u = v (mod 2)``
    and take ``x = (u+v)/2``, ``y = (u-v)/(2i)``.
    """
    if m.ring != ZI:
        raise PreconditionFailed("expected a Gaussian integer")
    a, b = m.v
    if b % 2:
        raise UnitNotSumOfSquares(f"{m} has odd imaginary part; sums of squares in Z[i] never do")
    if m.is_zero():
        return TwoSquaresRep(ZI(0), ZI(0), ZI(1))
    n = m.norm()
    two, i = ZI(2), ZI(0, 1)
    for d in range(1, n + 1):
        if n % d:
            continue
        r = isqrt(d)
        for s in range(-r, r + 1):
            t2 = d - s * s
            t = isqrt(t2)
            if t * t != t2:
                continue
            for tt in sorted({t, -t}):
                u = ZI(s, tt)
                q, rem = divmod(m, u)
                if rem or (u - q).v[0] % 2 or (u - q).v[1] % 2:
                    continue
                x, y = (u + q) / two, (u - q) / (two * i)
                return TwoSquaresRep(x, y, ZI(1))
    raise NotRepresentable(f"{m} is not a sum of two squares in Z[i]")


# polynomial rings


def _check_field(F: Ring) -> None:
    if isinstance(F, PrimeField):
        if F.p == 2:
            raise BadField("characteristic 2: sums of squares are only the even polynomials")
        if F.p % 4 == 1:
            raise BadField(f"-1 is a square in F{F.p}")
    elif not isinstance(F, Rationals):
        raise BadField(f"unsupported coefficient field {F}")


def _poly_ring(m: Elem) -> PolyRing:
    if not isinstance(m.ring, PolyRing):
        raise PreconditionFailed(f"expected a polynomial, got a {m.ring} value")
    return m.ring


def _is_positive(c: Elem) -> bool:
    if isinstance(c.ring, Rationals):
        return c.v > 0
    if isinstance(c.ring, PrimeField):
        return 0 < c.v <= (c.ring.p - 1) // 2
    return True


def _const(ring: PolyRing, c: Elem) -> Elem:
    return ring.make([c])


def canonical_poly_rep(rep: TwoSquaresRep) -> TwoSquaresRep:
    """``deg x > deg y``, ``x`` monic (scale moved into the unit), ``lc(y)`` positive."""
    x, y, u = rep.x, rep.y, rep.unit
    R = x.ring
    if degree(x) < degree(y):
        x, y = y, x
    c = leading_coefficient(x)
    ci = _const(R, c.inverse())
    x, y, u = x * ci, y * ci, u * _const(R, c * c)
    if not y.is_zero() and not _is_positive(leading_coefficient(y)):
        y = -y
    return TwoSquaresRep(x, y, u)


def _check_poly_inputs(m: Elem, z: Elem) -> PolyRing:
    R = _poly_ring(m)
    _check_field(R.base)
    if degree(m) < 1:
        raise DegreeError("m must be a non-unit polynomial")
    if degree(z) >= degree(m):
        raise DegreeError(f"deg z = {degree(z)} must be below deg m = {degree(m)}")
    if not ((z * z + 1) % m).is_zero():
        raise NotADivisor(f"{m} does not divide ({z})^2 + 1")
    return R


def _poly_shortcut(m: Elem, z: Elem) -> TwoSquaresRep:
    """Stop at the first remainder of degree <= deg(m)/2 and read x, y, u off it."""
    trace = euclid_until(m, z, half_degree(m))
    rems = trace.remainders
    s = len(rems) - 1  # rems[k] is r_(k-1); we stopped at r_(s-1)
    r = rems[-1]
    nxt = rems[-2] % r
    lm, lr = leading_coefficient(m), leading_coefficient(r)
    if s % 2:
        u = lm / (lr * lr)
        x, y = r, nxt * _const(m.ring, u.inverse())
    else:
        u = lr * lr / lm
        x, y = r * _const(m.ring, u.inverse()), nxt
    return TwoSquaresRep(x, y, _const(m.ring, u))


def poly_two_squares(m: Elem, z: Elem) -> TwoSquaresRep:
    """``m = (x^2 + y^2) u`` from the Euclidean run on ``(m, z)`` where ``m | z^2 + 1``."""
    R = _check_poly_inputs(m, z)
    trace = euclidean_algorithm(m, z)
    h = trace.gcd
    qs = list(trace.quotients)
    if len(qs) % 2:
        raise PalindromeViolation(f"odd number of quotients ({len(qs)})")
    for tau in (h, h.inverse()):
        P = list(zigzag_rescale(qs, tau, R).items)
        if P == P[::-1]:
            break
    else:
        raise PalindromeViolation("no constant rescaling makes the quotients palindromic")
    s = len(P) // 2
    x, y = continuant(P[:s], R), continuant(P[: s - 1], R)
    rep = TwoSquaresRep(x, y, h)
    if rep.value() != m:
        raise ReconstructionMismatch("continuant representation does not reproduce m")
    short = _poly_shortcut(m, z)
    if short.unit != h or short.x not in (x, -x) or short.y not in (y, -y):
        raise ReconstructionMismatch("early-stop shortcut disagrees with the full run")
    return canonical_poly_rep(rep)


def poly_two_squares_gcd(m: Elem, z: Elem, t: Elem | None = None) -> TwoSquaresRep:
    """``x + i*y = gcd(m, z + i*t)`` computed in ``F(i)[X]``."""
    R = _poly_ring(m)
    F = R.base
    _check_field(F)
    if t is None:
        t = R.one()
    if not ((z * z + t * t) % m).is_zero():
        raise NotADivisor(f"{m} does not divide z^2 + t^2")
    if not coprime(z, t):
        raise NotCoprime("z and t are not coprime")
    G = PolyRing(QuadExt(F))
    n = max(degree(z), degree(t)) + 1
    mG = G.make([(c, F.zero_v()) for c in m.v])
    wG = G.make([(coefficient(z, k).v, coefficient(t, k).v) for k in range(n)])
    g = gcd(mG, wG)
    x = R.make([c[0] for c in g.v])
    y = R.make([c[1] for c in g.v])
    q, r = divmod(m, x * x + y * y)
    if r or degree(q) != 0:
        raise ReconstructionMismatch("x^2 + y^2 is not an associate of m")
    if not coprime(x, y):
        raise ReconstructionMismatch("gcd components are not coprime")
    return canonical_poly_rep(TwoSquaresRep(x, y, q))


def same_up_to_associates(a: TwoSquaresRep, b: TwoSquaresRep) -> bool:
    """Both describe associate elements ``x + i*y`` (or conjugates) of ``F(i)[X]``."""
    ca, cb = canonical_poly_rep(a), canonical_poly_rep(b)
    return ca.x == cb.x and ca.y in (cb.y, -cb.y) and ca.unit == cb.unit


def _unit_as_two_squares(u: Elem) -> tuple[Elem, Elem]:
    F = u.ring
    if isinstance(F, Rationals):
        v = u.v
        if v <= 0:
            raise UnitNotSumOfSquares(f"{u} is not positive")
        N = v.numerator * v.denominator
        for c in range(isqrt(N) + 1):
            d2 = N - c * c
            d = isqrt(d2)
            if d * d == d2:
                return F(Fraction(c, v.denominator)), F(Fraction(d, v.denominator))
        raise UnitNotSumOfSquares(f"{u} is not a sum of two rational squares")
    if isinstance(F, PrimeField):
        for c in range(F.p):
            for d in range(F.p):
                if (c * c + d * d - u.v) % F.p == 0:
                    return F(c), F(d)
        raise UnitNotSumOfSquares(f"{u} is not a sum of two squares in {F}")
    if isinstance(F, Integers):
        if u == 1:
            return F(1), F(0)
        raise UnitNotSumOfSquares(f"{u} is not a sum of two squares")
    raise UnitNotSumOfSquares(f"no search for units of {F}")


def unit_absorb(rep: TwoSquaresRep) -> TwoSquaresRep:
    """Fold ``unit = c^2 + d^2`` into the squares: ``(cx + dy)^2 + (cy - dx)^2``."""
    x, y, u = rep.x, rep.y, rep.unit
    R = x.ring
    if u == 1:
        return rep
    if isinstance(R, PolyRing):
        c, d = _unit_as_two_squares(coefficient(u, 0))
        c, d = _const(R, c), _const(R, d)
    else:
        c, d = _unit_as_two_squares(u)
    x2, y2 = c * x + d * y, c * y - d * x
    if isinstance(R, PolyRing):
        if degree(x2) < degree(y2):
            x2, y2 = y2, x2
        if not x2.is_zero() and not _is_positive(leading_coefficient(x2)):
            x2 = -x2
        if not y2.is_zero() and not _is_positive(leading_coefficient(y2)):
            y2 = -y2
    out = TwoSquaresRep(x2, y2, R.one())
    if out.value() != rep.value():
        raise ReconstructionMismatch("unit absorption changed the value")
    return out


def cyclotomic_rep(p: int) -> tuple[Elem, Elem, Elem]:
    """``Phi_4p = x^2 + y^2`` for an odd prime p, all over Q."""
    if p < 3 or not is_prime(p):
        raise PreconditionFailed(f"{p} is not an odd prime")
    R = PolyRing(QQ)

    def alternating(count: int, shift: int) -> Elem:
        coeffs = [0] * (2 * count + shift)
        for k in range(count):
            coeffs[2 * k + shift] = (-1) ** k
        return R.make(coeffs)

    phi = alternating(p, 0)
    x = alternating((p + 1) // 2, 0)
    y = alternating((p - 1) // 2, 1)
    # the alternating sums can end in -X^k; flip so leading coefficients are positive
    x, y = (-v if leading_coefficient(v).v < 0 else v for v in (x, y))
    if x * x + y * y != phi:
        raise ReconstructionMismatch(f"Phi_{4 * p} != x^2 + y^2")
    return phi, x, y


def verify_two_squares(m, rep: TwoSquaresRep) -> bool:
    """Exact recomputation of ``(x^2 + y^2) u == m`` plus coprimality of x, y."""
    if isinstance(m, int):
        m = ZZ(m)
    try:
        return rep.value() == m and coprime(rep.x, rep.y)
    except (TypeError, ValueError):
        return False
