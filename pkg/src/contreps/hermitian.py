"""Hermitian sums of two "squares" ``x*conj(x) + y*conj(y)`` and the descent chain.

Given ``m | N(z) + 1`` the chain ``m_(i+1) = (N(z_i) + 1) / m_i`` with
``z_i = q_(i+1) m_(i+1) + z_(i+1)`` shrinks until ``|m_s| = 1``.  Reading the
quotients as ``Q = (q1, conj q2, q3, ...)`` gives the quasi-palindrome
``Q + reversed(conj Q)`` whose continuant is ``m``, and the halves of that
palindrome give ``x, y``.

Four rings are wired in: Z[i] (sums of four squares), Z[j] (the Eisenstein
norm), and Z[sqrt 3] (indefinite norm ``a^2 - 3b^2``).  ``x^2 + 3y^2`` is
derived from the Eisenstein result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .continuants import continuant, is_quasi_palindromic
from .errors import (
    ChainStall,
    NoMultiplier,
    NonTermination,
    NotCoprime,
    NotADivisor,
    PreconditionFailed,
    ReconstructionMismatch,
)
from .euclid import euclidean_algorithm
from .ntheory import balanced_mod, factorize, is_prime, sqrt_mod_prime
from .rings import ZI, ZS, ZW, Elem, Ring, euclidean_divide


def signed_norm(z: Elem) -> int:
    return z.star_norm().as_int()


@dataclass(frozen=True)
class StarRep:
    """``x*conj(x) + y*conj(y)``."""

    x: Elem
    y: Elem

    def value(self) -> int:
        return signed_norm(self.x) + signed_norm(self.y)


@dataclass(frozen=True)
class Exact:
    """``m = N(z)`` already."""

    z: Elem


@dataclass(frozen=True)
class Multiplier:
    """``m | N(z) + 1``."""

    z: Elem


@dataclass(frozen=True)
class DescentChain:
    ring: Ring
    ms: tuple[int, ...]
    zs: tuple[Elem, ...]
    qs: tuple[Elem, ...]

    @property
    def m(self) -> int:
        return self.ms[0]


class Form(Enum):
    FOUR_SQUARES = "foursq"
    EISENSTEIN_DOUBLE = "eisenstein"
    X2P3Y2 = "x2p3y2"
    SQRT3_DOUBLE = "sqrt3"

    def evaluate(self, values) -> int:
        a, b, c, d = values
        if self is Form.FOUR_SQUARES:
            return a * a + b * b + c * c + d * d
        if self is Form.EISENSTEIN_DOUBLE:
            return a * a - a * b + b * b + c * c - c * d + d * d
        if self is Form.X2P3Y2:
            return a * a + 3 * b * b + c * c + 3 * d * d
        return a * a - 3 * b * b + c * c - 3 * d * d

    @property
    def ring(self) -> Ring:
        return {Form.FOUR_SQUARES: ZI, Form.SQRT3_DOUBLE: ZS}.get(self, ZW)


@dataclass(frozen=True)
class FormQuadruple:
    form: Form
    values: tuple[int, int, int, int]
    n: int = field(default=0)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if self.form.evaluate(self.values) != self.n:
            raise ReconstructionMismatch(f"{self.values} does not evaluate to {self.n}")

    def value(self) -> int:
        return self.form.evaluate(self.values)


def product_formula(x: Elem, y: Elem, z: Elem, u: Elem) -> tuple[Elem, Elem]:
    """``(x x* + y y*)(z z* + u u*) = a a* + b b*`` with ``a = xz - y u*``, ``b = xu + y z*``."""
    a = x * z - y * u.conj()
    b = x * u + y * z.conj()
    lhs = (signed_norm(x) + signed_norm(y)) * (signed_norm(z) + signed_norm(u))
    if signed_norm(a) + signed_norm(b) != lhs:
        raise ReconstructionMismatch("product formula failed; the ring must be commutative")
    return a, b


# multipliers


def _sqrt3_reduced(z: Elem, m: int) -> Elem:
    q, r0 = euclidean_divide(z, ZS(m))
    best, best_key = r0, None
    bound = 3 * m * m / 4
    for dx in range(-2, 3):
        for dy in range(-2, 3):
            r = r0 + ZS(dx * m, dy * m)
            n = signed_norm(r)
            if abs(n) > bound:
                continue
            key = (n + 1 <= 0, abs(n), abs(r.v[1]), abs(r.v[0]), r.v)
            if best_key is None or key < best_key:
                best, best_key = r, key
    return best


def reduce_mod(z: Elem, m: int) -> Elem:
    """A representative of ``z`` modulo ``m`` with small norm (at most ``3m^2/4`` in absolute value)."""
    ring = z.ring
    if ring == ZI:
        return ZI(balanced_mod(z.v[0], m), balanced_mod(z.v[1], m))
    if ring == ZS:
        return _sqrt3_reduced(z, m)
    return euclidean_divide(z, ring(m))[1]


SQRT_TABLE_LIMIT = 10**6


def _root_finder(m: int) -> Callable[[int], int | None]:
    """Square roots mod m; a lookup table for moderate m, Tonelli-Shanks beyond."""
    if m > SQRT_TABLE_LIMIT:
        return lambda a: sqrt_mod_prime(a, m)
    table: dict[int, int] = {}
    for r in range(m // 2, -1, -1):
        table[r * r % m] = r
    return table.get


def _candidates(ring: Ring, m: int, b: int, sqrt_mod: Callable[[int], int | None]):
    """Values ``a`` with ``N(a + b*g) + 1 = 0 (mod m)`` near the centre of the fundamental box."""
    if m == 2:
        return [0, 1]
    if ring == ZI:
        r = sqrt_mod((-1 - b * b) % m)
        if r is None:
            return []
        r = balanced_mod(r, m)
        return sorted({r, -r})
    if ring == ZW:
        s = sqrt_mod((-3 * b * b - 4) % m)
        if s is None:
            return []
        half = pow(2, -1, m)
        out = set()
        for root in {(b + s) * half % m, (b - s) * half % m}:
            k = round((b / 2 - root) / m)
            out.update(root + m * (k + d) for d in (-1, 0, 1))
        return sorted(out)
    if ring == ZS:
        r = sqrt_mod((3 * b * b - 1) % m)
        if r is None:
            return []
        r = balanced_mod(r, m)
        return sorted({a for root in (r, -r) for a in (root - m, root, root + m) if abs(a) <= m})
    raise PreconditionFailed(f"no multiplier search for {ring}")


_INT_NORMS = {
    ZI: lambda a, b: a * a + b * b,
    ZW: lambda a, b: a * a - a * b + b * b,
    ZS: lambda a, b: a * a - 3 * b * b,
}


def find_star_multiplier(m: int, ring: Ring) -> Exact | Multiplier:
    """The ``z`` of least ``|N(z) + 1|`` with ``m | N(z) + 1``.

    Ties go to the smaller ``b >= 0`` and then to the larger ``a``.  In the
    indefinite ring a positive ``N(z) + 1`` is preferred.  The base primes 2 in
    Z[i] and 3 in Z[j] are norms and come back as ``Exact``.
    """
    if ring == ZI and m == 2:
        return Exact(ZI(1, 1))
    if ring == ZW and m == 3:
        return Exact(ZW(1, -1))
    if ring == ZS and m == 3:
        raise NoMultiplier("3 divides no a^2 - 3b^2 + 1 in Z[sqrt 3]")
    if not is_prime(m):
        raise PreconditionFailed(f"{m} is not prime")
    definite = ring != ZS
    norm = _INT_NORMS[ring]
    best, best_key = None, None
    sqrt_mod = _root_finder(m)
    for b in range(0, m // 2 + 1):
        if best_key is not None:
            if definite:
                lower = b * b if ring == ZI else 3 * b * b / 4
                if lower + 1 > best_key[1]:
                    break
            elif best_key[:2] == (False, m):
                break  # N(z) + 1 = m cannot be beaten
        for a in _candidates(ring, m, b, sqrt_mod):
            n = norm(a, b) + 1
            if n % m:
                continue
            if not definite and abs(n - 1) > 3 * m * m / 4:
                continue
            key = (n <= 0, abs(n), b, -a)
            if best_key is None or key < best_key:
                best, best_key = (a, b), key
    if best is None:
        raise NoMultiplier(f"no multiplier for {m} in {ring}")
    z = ring.make(*best)
    assert signed_norm(z) + 1 == best_key[1] * (-1 if best_key[0] else 1)
    return Multiplier(z)


# descent


def _progress_key(r: Elem, m_next: int):
    n = signed_norm(r) + 1
    k = n // m_next
    if k == 0 or abs(k) >= abs(m_next):
        return None
    return (k < 0, abs(k))


def _step(z: Elem, m_next: int, divide) -> tuple[Elem, Elem]:
    ring = z.ring
    M = ring(m_next)
    q, r = divide(z, M)
    key = _progress_key(r, m_next)
    if key is not None and not key[0]:
        return q, r
    # Division landed in a trap (no shrink, or a sign flip we can avoid).
    options = []
    for dx in (-1, 0, 1):
        for dy in (-1, 0, 1):
            q2 = q + ring.make(dx, dy)
            r2 = z - q2 * M
            k2 = _progress_key(r2, m_next)
            if k2 is not None:
                options.append((k2, (dx, dy) != (0, 0), q2.v, q2, r2))
    if not options:
        raise ChainStall(f"no quotient of {z} by {m_next} makes progress")
    best = min(options, key=lambda o: o[:3])
    return best[3], best[4]


def descent_chain(m: int, z: Elem, divide: Callable | None = None, max_steps: int | None = None) -> DescentChain:
    """Run the descent from ``m | N(z) + 1`` down to ``|m_s| = 1``.

    ``divide`` replaces the ring's Euclidean division (used to exercise the
    trap in Z[j]); a quotient that fails to shrink ``m`` is repaired by trying
    the neighbouring lattice points.
    """
    ring = z.ring
    divide = divide or euclidean_divide
    if m < 2:
        raise PreconditionFailed("m must be at least 2")
    if (signed_norm(z) + 1) % m:
        raise NotADivisor(f"{m} does not divide N({z}) + 1")
    limit = max_steps if max_steps is not None else 10 * m.bit_length()
    ms, zs, qs = [m], [], []
    zi, mi = z, m
    while True:
        m_next = (signed_norm(zi) + 1) // mi
        zs.append(zi)
        if m_next == 0:
            raise ChainStall(f"N({zi}) = -1 stops the chain")
        if abs(m_next) >= abs(mi):
            if len(ms) == 1:
                raise PreconditionFailed(f"{z} is not reduced modulo {m}")
            raise ChainStall(f"chain stopped shrinking at {mi}")
        if abs(m_next) == 1:
            qs.append(zi * m_next)
            ms.append(m_next)
            break
        q, r = _step(zi, m_next, divide)
        qs.append(q)
        ms.append(m_next)
        zi, mi = r, m_next
        if len(qs) > limit:
            raise NonTermination(f"chain exceeded {limit} steps")
    return DescentChain(ring, tuple(ms), tuple(zs), tuple(qs))


MINUS_ONE_SQRT3 = (ZS(1), ZS(1, 1))  # 1 + (1 - 3) = -1


def chain_to_rep(chain: DescentChain) -> StarRep:
    ring = chain.ring
    qs = list(chain.qs)
    sign = chain.ms[-1]
    if sign == -1:
        # negating every m_i and q_i gives a chain for -m ending at 1
        qs = [-q for q in qs]
    Q = [q if k % 2 == 0 else q.conj() for k, q in enumerate(qs)]
    full = Q + [q.conj() for q in reversed(Q)]
    assert is_quasi_palindromic(full)
    target = sign * chain.m
    if continuant(full, ring) != target:
        raise ReconstructionMismatch(f"continuant of the palindrome is not {target}")
    x, y = continuant(Q, ring), continuant(Q[:-1], ring)
    rep = StarRep(x, y)
    if rep.value() != target:
        raise ReconstructionMismatch(f"x x* + y y* != {target}")
    if sign == -1:
        if ring != ZS:
            raise ReconstructionMismatch(f"chain in {ring} ended at -1")
        rep = StarRep(*product_formula(x, y, *MINUS_ONE_SQRT3))
    return rep


_SQRT3_BASE = {2: StarRep(ZS(1), ZS(1)), 3: StarRep(ZS(3, 1), ZS(0, 1))}


def _prime_rep(p: int, ring: Ring) -> tuple[StarRep, DescentChain | None]:
    if ring == ZS and p in _SQRT3_BASE:
        return _SQRT3_BASE[p], None
    found = find_star_multiplier(p, ring)
    if isinstance(found, Exact):
        return StarRep(found.z, ring.zero()), None
    chain = descent_chain(p, reduce_mod(found.z, p))
    return chain_to_rep(chain), chain


def represent(n: int, ring: Ring, multiplier: Elem | None = None) -> tuple[StarRep, list[DescentChain]]:
    """``n = x x* + y y*`` for ``n >= 0``, prime by prime, combined with the product formula.

    An explicit ``multiplier`` skips the factorisation and runs the descent on ``n`` directly.
    """
    if n < 0:
        raise PreconditionFailed("n must be nonnegative here")
    zero, one = ring.zero(), ring.one()
    if n == 0:
        return StarRep(zero, zero), []
    if multiplier is not None:
        if multiplier.ring != ring:
            raise PreconditionFailed(f"multiplier is not in {ring}")
        if n == 1:
            return StarRep(one, zero), []
        chain = descent_chain(n, reduce_mod(multiplier, n))
        return chain_to_rep(chain), [chain]
    rep, chains = StarRep(one, zero), []
    for p, e in factorize(n):
        prep, chain = _prime_rep(p, ring)
        for _ in range(e):
            rep = StarRep(*product_formula(rep.x, rep.y, prep.x, prep.y))
        if chain is not None:
            chains.append(chain)
    if rep.value() != n:
        raise ReconstructionMismatch(f"combined representation is not {n}")
    return rep, chains


def _pairs(rep: StarRep) -> tuple[int, int, int, int]:
    return (*rep.x.v, *rep.y.v)


def _canonical(form: Form, values) -> tuple[int, int, int, int]:
    a, b, c, d = values
    if form is Form.FOUR_SQUARES:
        return tuple(sorted((abs(v) for v in values), reverse=True))
    if form is Form.EISENSTEIN_DOUBLE:
        return (a, b, c, d)
    p1, p2 = (abs(a), abs(b)), (abs(c), abs(d))
    hi, lo = max(p1, p2), min(p1, p2)
    return (*hi, *lo)


def eisenstein_to_x2_3y2(x: int, y: int) -> tuple[int, int]:
    """``(p, q)`` with ``x^2 - xy + y^2 = q^2 + 3p^2``."""
    if x % 2 == 0:
        t = x // 2
        p, q = t, y - t
    elif y % 2 == 0:
        t = y // 2
        p, q = t, x - t
    else:
        p, q = (y - x) // 2, (x + y) // 2
    assert q * q + 3 * p * p == x * x - x * y + y * y
    return p, q


def solve_form(form: Form, n: int, multiplier: Elem | None = None) -> tuple[FormQuadruple, list[DescentChain]]:
    ring = form.ring
    if form is Form.SQRT3_DOUBLE and n < 0:
        rep, chains = represent(-n, ring, multiplier)
        rep = StarRep(*product_formula(rep.x, rep.y, *MINUS_ONE_SQRT3))
    else:
        if n < 0:
            raise PreconditionFailed(f"{form.value} takes n >= 0")
        rep, chains = represent(n, ring, multiplier)
    values = _pairs(rep)
    if form is Form.X2P3Y2:
        p1, q1 = eisenstein_to_x2_3y2(*values[:2])
        p2, q2 = eisenstein_to_x2_3y2(*values[2:])
        values = (q1, p1, q2, p2)
    return FormQuadruple(form, _canonical(form, values), n), chains


def four_squares(n: int, multiplier: Elem | None = None) -> FormQuadruple:
    return solve_form(Form.FOUR_SQUARES, n, multiplier)[0]


def eisenstein_form(n: int, multiplier: Elem | None = None) -> FormQuadruple:
    return solve_form(Form.EISENSTEIN_DOUBLE, n, multiplier)[0]


def form_x2_3y2(n: int, multiplier: Elem | None = None) -> FormQuadruple:
    return solve_form(Form.X2P3Y2, n, multiplier)[0]


def sqrt3_form(n: int, multiplier: Elem | None = None) -> FormQuadruple:
    return solve_form(Form.SQRT3_DOUBLE, n, multiplier)[0]


def theorem1_multiplier(x: Elem, y: Elem) -> Elem:
    """A ``z`` with ``z z* + 1`` divisible by ``x x* + y y*``, for coprime x, y."""
    ring = x.ring
    trace = euclidean_algorithm(x, y)
    if not trace.gcd.is_unit():
        raise NotCoprime(f"{x} and {y} are not coprime")
    if y.is_zero():
        return ring.zero()
    qs = list(trace.quotients)
    z = continuant([q.conj() for q in reversed(qs)] + qs[:-1], ring)
    m = x * x.conj() + y * y.conj()
    if not euclidean_divide(z * z.conj() + 1, m)[1].is_zero():
        raise ReconstructionMismatch("x x* + y y* does not divide z z* + 1")
    return z


def multiplier_identity(x: Elem, y: Elem) -> tuple[Elem, Elem]:
    """``(z, w)`` with ``z z* + 1 = w (x x* + y y*)``."""
    z = theorem1_multiplier(x, y)
    m = x * x.conj() + y * y.conj()
    w = (z * z.conj() + 1) / m
    return z, w
