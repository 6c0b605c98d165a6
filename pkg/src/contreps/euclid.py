"""The Euclidean algorithm as a trace producer.

The trace keeps every remainder, not just the quotients: Brillhart-style
shortcuts read their answer off the remainders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .continuants import QuotientSeq, continuant
from .errors import BothZero, RingMismatch, UnsupportedRing
from .rings import Elem, PolyRing, degree, monic


@dataclass(frozen=True)
class EuclidTrace:
    quotients: tuple[Elem, ...]
    remainders: tuple[Elem, ...]
    gcd: Elem | None  # None for a trace stopped before the end

    @property
    def complete(self) -> bool:
        return self.gcd is not None

    def as_quotient_seq(self) -> QuotientSeq:
        ring = self.remainders[0].ring
        return QuotientSeq(ring, self.quotients, self.gcd if self.gcd is not None else ring.one())


def _run(t1: Elem, t2: Elem, stop: Callable[[Elem], bool] | None) -> EuclidTrace:
    if t1.ring != t2.ring:
        raise RingMismatch(f"{t1.ring} and {t2.ring} values do not mix")
    if not t1.ring.euclidean:
        raise UnsupportedRing(f"{t1.ring} is not Euclidean")
    if t1.is_zero() and t2.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    quotients, remainders = [], [t1, t2]
    if stop is not None and stop(t2):
        return EuclidTrace((), (t1, t2), None)
    a, b = t1, t2
    while not b.is_zero():
        q, r = divmod(a, b)
        quotients.append(q)
        remainders.append(r)
        a, b = b, r
        if stop is not None and not r.is_zero() and stop(r):
            return EuclidTrace(tuple(quotients), tuple(remainders), None)
    return EuclidTrace(tuple(quotients), tuple(remainders), a)


def euclidean_algorithm(t1: Elem, t2: Elem) -> EuclidTrace:
    return _run(t1, t2, None)


def euclid_until(t1: Elem, t2: Elem, stop: Callable[[Elem], bool]) -> EuclidTrace:
    """Run the same loop but halt at the first remainder (``t2`` included) satisfying ``stop``."""
    return _run(t1, t2, stop)


def reconstruct(trace: EuclidTrace) -> tuple[Elem, Elem]:
    """``([q1..qn] h, [q2..qn] h)``; returns the original pair for a complete trace."""
    h = trace.gcd
    ring = trace.remainders[0].ring
    if not trace.quotients:
        return h, ring.zero()
    qs = list(trace.quotients)
    return continuant(qs, ring) * h, continuant(qs[1:], ring) * h


def below_sqrt(m: int) -> Callable[[Elem], bool]:
    """Stop at the first integer remainder with ``r*r < m``."""
    return lambda r: r.as_int() ** 2 < m


def half_degree(m: Elem) -> Callable[[Elem], bool]:
    """Stop at the first polynomial remainder with ``2*deg(r) <= deg(m)``."""
    d = degree(m)
    return lambda r: 2 * degree(r) <= d


def gcd(a: Elem, b: Elem) -> Elem:
    """A gcd; monic for polynomials."""
    g = euclidean_algorithm(a, b).gcd
    if isinstance(g.ring, PolyRing):
        return monic(g)
    return g


def coprime(a: Elem, b: Elem) -> bool:
    if a.is_zero() and b.is_zero():
        return False
    return euclidean_algorithm(a, b).gcd.is_unit()
