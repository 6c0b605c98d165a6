"""Continuants over arbitrary rings and the identities they satisfy.

``[q1, ..., qn]`` is built by ``[] = 1``, ``[q1] = q1`` and
``[q1..qn] = [q1..q(n-1)] * qn + [q1..q(n-2)]``; products keep the written
order, which matters for the noncommutative 2x2 matrix ring.

The ``check_*`` functions return booleans so they can be used both as
library predicates and as property tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    LengthLimitExceeded,
    NoncommutativeRing,
    NotAUnit,
    NotQuasiPalindromic,
    PreconditionFailed,
    ReconstructionMismatch,
)
from .rings import Elem, Ring

EULER_LIMIT = 20
DETERMINANT_LIMIT = 20


@dataclass(frozen=True)
class QuotientSeq:
    ring: Ring
    items: tuple[Elem, ...] = ()
    unit: Elem | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        for q in self.items:
            if q.ring != self.ring:
                raise PreconditionFailed(f"{q!r} is not in {self.ring}")
        if self.unit is None:
            object.__setattr__(self, "unit", self.ring.one())

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, k):
        return self.items[k]


def _unpack(Q, ring: Ring | None) -> tuple[list[Elem], Ring]:
    if isinstance(Q, QuotientSeq):
        return list(Q.items), Q.ring
    items = list(Q)
    if ring is None:
        if not items:
            raise PreconditionFailed("ring is required for an empty sequence")
        ring = items[0].ring
    return items, ring


def continuant(Q: QuotientSeq | Sequence[Elem], ring: Ring | None = None) -> Elem:
    items, ring = _unpack(Q, ring)
    prev, cur = None, ring.one()
    for k, q in enumerate(items):
        if k == 0:
            prev, cur = cur, q
        else:
            prev, cur = cur, cur * q + prev
    return cur


def continuant_euler(Q, ring: Ring | None = None) -> Elem:
    """Euler's rule: sum the ordered products left after deleting disjoint adjacent pairs."""
    items, ring = _unpack(Q, ring)
    n = len(items)
    if n > EULER_LIMIT:
        raise LengthLimitExceeded(f"Euler's rule is exponential; length {n} > {EULER_LIMIT}")

    def walk(i: int, acc: Elem) -> Elem:
        if i >= n:
            return acc
        total = walk(i + 1, acc * items[i])
        if i + 1 < n:
            total = total + walk(i + 2, acc)
        return total

    return walk(0, ring.one())


def determinant(rows: Sequence[Sequence[Elem]], ring: Ring) -> Elem:
    """Cofactor expansion along the first row, memoised on the surviving columns."""
    if not ring.commutative:
        raise NoncommutativeRing(f"determinants need a commutative ring, not {ring}")
    n = len(rows)
    if n > DETERMINANT_LIMIT:
        raise LengthLimitExceeded(f"matrix size {n} > {DETERMINANT_LIMIT}")
    zero = ring.zero()

    @lru_cache(maxsize=None)
    def minor(r: int, cols: int) -> Elem:
        if r == n:
            return ring.one()
        total, sign = zero, 1
        for c in range(n):
            if not cols >> c & 1:
                continue
            a = rows[r][c]
            if not a.is_zero():
                term = a * minor(r + 1, cols & ~(1 << c))
                total = total + term if sign > 0 else total - term
            sign = -sign
        return total

    return minor(0, (1 << n) - 1)


def tridiagonal(Q, ring: Ring | None = None) -> list[list[Elem]]:
    items, ring = _unpack(Q, ring)
    n = len(items)
    one, zero = ring.one(), ring.zero()
    rows = [[zero] * n for _ in range(n)]
    for i, q in enumerate(items):
        rows[i][i] = q
        if i + 1 < n:
            rows[i][i + 1] = one
            rows[i + 1][i] = -one
    return rows


def continuant_matrix(Q, ring: Ring | None = None) -> Elem:
    """Determinant of the tridiagonal matrix (diagonal q, +1 above, -1 below)."""
    items, ring = _unpack(Q, ring)
    if not ring.commutative:
        raise NoncommutativeRing(f"{ring} is not commutative")
    return determinant(tridiagonal(items, ring), ring)


def zigzag_rescale(Q, tau: Elem, ring: Ring | None = None) -> QuotientSeq:
    """Multiply ``q_k`` by ``tau**(-1)**k``: ``tau^-1 q1, tau q2, tau^-1 q3, ...``.

    The continuant is unchanged for even length and divided by ``tau`` for odd length.
    """
    items, ring = _unpack(Q, ring)
    if not tau.is_unit():
        raise NotAUnit(f"{tau} is not a unit")
    inv = tau.inverse()
    out = [(inv if k % 2 == 0 else tau) * q for k, q in enumerate(items)]
    before, after = continuant(items, ring), continuant(out, ring)
    expected = before if len(items) % 2 == 0 else inv * before
    if after != expected:
        raise ReconstructionMismatch("rescaled continuant does not match; tau must commute with the items")
    return QuotientSeq(ring, out)


def bezout_from_quotients(Q, ring: Ring | None = None) -> tuple[Elem, Elem]:
    """Left coefficients ``(a, b)`` with ``a*[q1..qn] + b*[q2..qn] = 1``.

    ``a = [-q(n-1), ..., -q1, 0]`` and ``b = [-q(n-1), ..., -q1]``.
    """
    items, ring = _unpack(Q, ring)
    if not items:
        raise PreconditionFailed("need at least one quotient")
    rev = [-q for q in reversed(items[:-1])]
    return continuant(rev + [ring.zero()], ring), continuant(rev, ring)


def is_quasi_palindromic(items: Sequence[Elem]) -> bool:
    n = len(items)
    return all(items[i] == items[n - 1 - i].conj() for i in range(n))


def check_noncomm_lewis_carroll(Q, ring: Ring | None = None) -> bool:
    """Both orderings of ``[Q][q2..q(n-1)] = [q1..q(n-1)][q2..qn] + (-1)^n``."""
    items, ring = _unpack(Q, ring)
    n = len(items)
    if n < 2:
        raise PreconditionFailed("need length >= 2")
    if not is_quasi_palindromic(items):
        raise NotQuasiPalindromic("sequence is not quasi-palindromic")
    c = lambda seq: continuant(seq, ring)  # noqa: E731
    lhs = c(items) * c(items[1:-1])
    left, right = c(items[:-1]), c(items[1:])
    sign = 1 if n % 2 == 0 else -1
    return lhs == right * left + sign and lhs == left * right + sign


# identities on arbitrary sequences


def check_cutting(Q, i: int, ring: Ring | None = None) -> bool:
    """``[Q] = [q1..q(i-1)][q(i+2)..qn] + [q1..qi][q(i+1)..qn]`` for ``1 <= i < n``."""
    items, ring = _unpack(Q, ring)
    c = lambda seq: continuant(seq, ring)  # noqa: E731
    k = i - 1
    return c(items) == c(items[:k]) * c(items[k + 2:]) + c(items[: k + 1]) * c(items[k + 1:])


def check_back_to_zero(Q, h: int, ring: Ring | None = None) -> bool:
    """``[-qh, ..., -q1, 0, q1, ..., qn]`` collapses to a tail, 1, or 0."""
    items, ring = _unpack(Q, ring)
    n = len(items)
    seq = [-q for q in reversed(items[:h])] + [ring.zero()] + items
    value = continuant(seq, ring)
    if h <= n - 2:
        return value == continuant(items[h + 1:], ring)
    if h == n - 1:
        return value == 1
    return value == 0


def check_reversal(Q, ring: Ring | None = None) -> bool:
    items, ring = _unpack(Q, ring)
    return continuant(items, ring) == continuant(items[::-1], ring)


def check_lewis_carroll(Q, ring: Ring | None = None) -> bool:
    """``[q1..qn][q2..q(n-1)] = [q1..q(n-1)][q2..qn] + (-1)^n`` (commutative rings)."""
    items, ring = _unpack(Q, ring)
    n = len(items)
    c = lambda seq: continuant(seq, ring)  # noqa: E731
    sign = 1 if n % 2 == 0 else -1
    return c(items) * c(items[1:-1]) == c(items[:-1]) * c(items[1:]) + sign


def check_palindrome_squares(Q, ring: Ring | None = None) -> bool:
    """Even palindrome ``P``: ``[P minus last]^2 + 1 = [P][inner] = (x^2+y^2)(x'^2+y'^2)``."""
    items, ring = _unpack(Q, ring)
    n = len(items)
    if n < 2 or n % 2 or items != items[::-1]:
        raise PreconditionFailed("need an even-length palindrome")
    h = n // 2
    c = lambda seq: continuant(seq, ring)  # noqa: E731
    head = items[:h]
    x, y = c(head), c(head[:-1])
    # [q2..q(h-1)] has length -1 when h = 1; that continuant is 0
    x2, y2 = c(head[1:]), c(head[1:-1]) if h > 1 else ring.zero()
    lhs = c(items[:-1]) ** 2 + 1
    mid = c(items) * c(items[1:-1])
    return lhs == mid and mid == (x * x + y * y) * (x2 * x2 + y2 * y2)


def check_antiautomorphism(Q, ring: Ring | None = None) -> bool:
    """``[conj qn, ..., conj q1] = conj [q1..qn]``."""
    items, ring = _unpack(Q, ring)
    return continuant([q.conj() for q in reversed(items)], ring) == continuant(items, ring).conj()


def check_lewis_carroll_matrix(C: Sequence[Sequence[Elem]], i: int, j: int, ring: Ring) -> bool:
    """Dodgson condensation for rows/cols ``i < j`` (0-based) of a square matrix."""
    n = len(C)

    def drop(rows_out: Iterable[int], cols_out: Iterable[int]):
        ro, co = set(rows_out), set(cols_out)
        return [[C[r][c] for c in range(n) if c not in co] for r in range(n) if r not in ro]

    d = lambda M: determinant(M, ring)  # noqa: E731
    return d(C) * d(drop((i, j), (i, j))) == d(drop([i], [i])) * d(drop([j], [j])) - d(drop([i], [j])) * d(drop([j], [i]))
