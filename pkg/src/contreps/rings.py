"""Exact arithmetic for the rings used by the continuant machinery.

A ring is a small immutable descriptor object (``ZZ``, ``GF(7)``, ``PolyRing(QQ)``,
``ZI`` ...) that knows how to add, multiply, conjugate and divide raw payloads.
Values are :class:`Elem` instances pairing a ring with a normalised payload:

    int                      Z
    int in [0, p)            GF(p)
    Fraction                 Q
    tuple of base payloads   polynomials, low degree first, no trailing zero
    (a, b)                   a+bi, a+bj (j a primitive cube root of 1), a+b*sqrt3
    (a, b, c, d)             2x2 integer matrix, row-major

Nothing here uses floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import (
    DivisionByZero,
    NotADivisor,
    NotAUnit,
    ParseError,
    PreconditionFailed,
    RingMismatch,
    UnsupportedRing,
)
from .ntheory import is_prime


class Ring:
    commutative = True
    is_field = False
    euclidean = True

    # -- payload level -------------------------------------------------
    def normalize(self, v):
        return v

    def zero_v(self):
        return self.from_int_v(0)

    def one_v(self):
        return self.from_int_v(1)

    def from_int_v(self, n: int):
        raise NotImplementedError

    def add_v(self, a, b):
        raise NotImplementedError

    def neg_v(self, a):
        raise NotImplementedError

    def mul_v(self, a, b):
        raise NotImplementedError

    def conj_v(self, a):
        return a

    def norm_v(self, a) -> int:
        raise UnsupportedRing(f"{self} has no Euclidean function")

    def divmod_v(self, a, b):
        raise UnsupportedRing(f"{self} is not a Euclidean ring")

    def is_unit_v(self, a) -> bool:
        raise NotImplementedError

    def inv_v(self, a):
        raise NotImplementedError

    def format_v(self, a) -> str:
        raise NotImplementedError

    def parse_v(self, text: str):
        raise NotImplementedError

    def sub_v(self, a, b):
        return self.add_v(a, self.neg_v(b))

    def is_zero_v(self, a) -> bool:
        return a == self.zero_v()

    # -- element level -------------------------------------------------
    def elem(self, v) -> Elem:
        return Elem(self, self.normalize(v))

    def __call__(self, *args) -> Elem:
        if len(args) == 1:
            x = args[0]
            if isinstance(x, Elem):
                if x.ring != self:
                    raise RingMismatch(f"cannot use {x.ring} value in {self}")
                return x
            if isinstance(x, str):
                return parse_value(self, x)
            if isinstance(x, int):
                return Elem(self, self.from_int_v(x))
        return self.make(*args)

    def make(self, *args) -> Elem:
        raise TypeError(f"cannot build a {self} value from {args!r}")

    def zero(self) -> Elem:
        return Elem(self, self.zero_v())

    def one(self) -> Elem:
        return Elem(self, self.one_v())


@dataclass(frozen=True, eq=False)
class Elem:
    ring: Ring
    v: object

    def _lift(self, other) -> Elem:
        if isinstance(other, Elem):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} and {other.ring} values do not mix")
            return other
        if isinstance(other, int):
            return Elem(self.ring, self.ring.from_int_v(other))
        if isinstance(other, Fraction) and isinstance(self.ring, (Rationals, PolyRing)):
            return self.ring(other)
        return NotImplemented

    def _new(self, v) -> Elem:
        return Elem(self.ring, v)

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self._new(self.ring.add_v(self.v, o.v))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self._new(self.ring.sub_v(self.v, o.v))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self._new(self.ring.sub_v(o.v, self.v))

    def __neg__(self):
        return self._new(self.ring.neg_v(self.v))

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self._new(self.ring.mul_v(self.v, o.v))

    def __rmul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self._new(self.ring.mul_v(o.v, self.v))

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.ring.one_v(), self.v
        while n:
            if n & 1:
                result = self.ring.mul_v(result, base)
            base = self.ring.mul_v(base, base)
            n >>= 1
        return self._new(result)

    def __divmod__(self, other):
        return euclidean_divide(self, self._lift(other))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        """Exact division; raises NotADivisor when there is a remainder."""
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o.is_zero():
            raise DivisionByZero(f"division of {self} by zero")
        if self.ring.is_field or not self.ring.euclidean:
            return self * o.inverse()
        q, r = euclidean_divide(self, o)
        if not r.is_zero():
            raise NotADivisor(f"{o} does not divide {self}")
        return q

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) or isinstance(other, Elem):
            try:
                o = self._lift(other)
            except RingMismatch:
                return False
            if o is NotImplemented:
                return False
            return self.v == o.v
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.v))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return self.ring.format_v(self.v)

    def __repr__(self):
        return f"{self.ring}({self.ring.format_v(self.v)})"

    def is_zero(self) -> bool:
        return self.ring.is_zero_v(self.v)

    def is_unit(self) -> bool:
        return self.ring.is_unit_v(self.v)

    def inverse(self) -> Elem:
        if not self.is_unit():
            raise NotAUnit(f"{self} is not a unit of {self.ring}")
        return self._new(self.ring.inv_v(self.v))

    def conj(self) -> Elem:
        return self._new(self.ring.conj_v(self.v))

    def star_norm(self) -> Elem:
        return self * self.conj()

    def norm(self) -> int:
        return self.ring.norm_v(self.v)

    def as_int(self) -> int:
        """The rational integer this value equals; ValueError if it is not one."""
        return self.ring.as_int_v(self.v)


# ---------------------------------------------------------------------------
# parsing helpers

_NUM = re.compile(r"\d+(?:/\d+)?")
_INT = re.compile(r"\d+")


def _clean(text: str) -> str:
    return text.replace("−", "-")


def _parse_terms(text: str, var: str | None, fractions: bool = False) -> dict[int, Fraction]:
    """Parse ``c*V^k +- ...`` into ``{k: c}``.

    Coefficient 1 and exponents 0/1 may be implicit; ``*`` is optional.
    """
    s = _clean(text)
    n = len(s)
    i = 0
    terms: dict[int, Fraction] = {}
    first = True

    def skip(j):
        while j < n and s[j].isspace():
            j += 1
        return j

    num = _NUM if fractions else _INT
    while True:
        i = skip(i)
        if i >= n:
            if first:
                raise ParseError("empty input", text, i)
            break
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i = skip(i + 1)
        elif not first:
            raise ParseError("expected '+' or '-'", text, i)
        coef = None
        m = num.match(s, i)
        if m:
            try:
                coef = Fraction(m.group())
            except ZeroDivisionError:
                raise ParseError("zero denominator", text, i) from None
            i = skip(m.end())
            if i < n and s[i] == "*":
                i = skip(i + 1)
                if not (var and i < n and s[i] == var):
                    raise ParseError(f"expected {var!r} after '*'", text, i)
        if var and i < n and s[i] == var:
            deg = 1
            i = skip(i + 1)
            if i < n and s[i] == "^":
                i = skip(i + 1)
                m = _INT.match(s, i)
                if not m:
                    raise ParseError("expected exponent", text, i)
                deg = int(m.group())
                i = m.end()
        elif coef is None:
            raise ParseError("expected a number" + (f" or {var!r}" if var else ""), text, i)
        else:
            deg = 0
        terms[deg] = terms.get(deg, 0) + sign * (1 if coef is None else coef)
        first = False
    return terms


def _fmt_linear(a: int, b: int, letter: str) -> str:
    if b == 0:
        return str(a)
    coef = "" if abs(b) == 1 else str(abs(b))
    if a == 0:
        return ("-" if b < 0 else "") + coef + letter
    return f"{a}{'-' if b < 0 else '+'}{coef}{letter}"


def _parse_linear(text: str, letter: str) -> tuple[int, int]:
    terms = _parse_terms(text, letter)
    if any(k > 1 for k in terms):
        raise ParseError(f"{letter}^k with k > 1 is not allowed", text, 0)
    return int(terms.get(0, 0)), int(terms.get(1, 0))


# ---------------------------------------------------------------------------
# concrete rings


@dataclass(frozen=True)
class Integers(Ring):
    def __str__(self):
        return "Z"

    def from_int_v(self, n):
        return int(n)

    def add_v(self, a, b):
        return a + b

    def neg_v(self, a):
        return -a

    def mul_v(self, a, b):
        return a * b

    def norm_v(self, a):
        return abs(a)

    def divmod_v(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        r = a % abs(b)
        return (a - r) // b, r

    def is_unit_v(self, a):
        return a in (1, -1)

    def inv_v(self, a):
        return a

    def as_int_v(self, a):
        return a

    def format_v(self, a):
        return str(a)

    def parse_v(self, text):
        terms = _parse_terms(text, None)
        return int(terms.get(0, 0))

    def make(self, a):
        return Elem(self, int(a))


class _Field(Ring):
    is_field = True

    def norm_v(self, a):
        return 0 if self.is_zero_v(a) else 1

    def divmod_v(self, a, b):
        if self.is_zero_v(b):
            raise DivisionByZero("division by zero")
        return self.mul_v(a, self.inv_v(b)), self.zero_v()

    def is_unit_v(self, a):
        return not self.is_zero_v(a)


@dataclass(frozen=True)
class PrimeField(_Field):
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise PreconditionFailed(f"field modulus {self.p} is not prime")

    def __str__(self):
        return f"F{self.p}"

    def normalize(self, v):
        return int(v) % self.p

    def from_int_v(self, n):
        return n % self.p

    def add_v(self, a, b):
        return (a + b) % self.p

    def neg_v(self, a):
        return -a % self.p

    def mul_v(self, a, b):
        return a * b % self.p

    def inv_v(self, a):
        if a == 0:
            raise NotAUnit("0 is not invertible")
        return pow(a, -1, self.p)

    def as_int_v(self, a):
        return a

    def format_v(self, a):
        return str(a)

    def parse_v(self, text):
        terms = _parse_terms(text, None)
        return int(terms.get(0, 0)) % self.p

    def make(self, a):
        return Elem(self, int(a) % self.p)


@dataclass(frozen=True)
class Rationals(_Field):
    def __str__(self):
        return "Q"

    def normalize(self, v):
        return Fraction(v)

    def from_int_v(self, n):
        return Fraction(n)

    def add_v(self, a, b):
        return a + b

    def neg_v(self, a):
        return -a

    def mul_v(self, a, b):
        return a * b

    def inv_v(self, a):
        if a == 0:
            raise NotAUnit("0 is not invertible")
        return 1 / a

    def as_int_v(self, a):
        if a.denominator != 1:
            raise ValueError(f"{a} is not an integer")
        return a.numerator

    def format_v(self, a):
        return str(a)

    def parse_v(self, text):
        return _parse_terms(text, None, fractions=True).get(0, Fraction(0))

    def make(self, a, b=1):
        return Elem(self, Fraction(a, b))


@dataclass(frozen=True)
class QuadExt(_Field):
    """``base(w)`` with ``w*w = -1``; a field when -1 is not a square in ``base``."""

    base: Ring

    def __post_init__(self):
        if not self.base.is_field:
            raise PreconditionFailed(f"{self.base} is not a field")

    def __str__(self):
        return f"{self.base}(i)"

    def normalize(self, v):
        if not isinstance(v, tuple):
            v = (v, 0)
        return (self.base.normalize(v[0]), self.base.normalize(v[1]))

    def from_int_v(self, n):
        return (self.base.from_int_v(n), self.base.zero_v())

    def add_v(self, a, b):
        B = self.base
        return (B.add_v(a[0], b[0]), B.add_v(a[1], b[1]))

    def neg_v(self, a):
        return (self.base.neg_v(a[0]), self.base.neg_v(a[1]))

    def mul_v(self, a, b):
        B = self.base
        return (
            B.sub_v(B.mul_v(a[0], b[0]), B.mul_v(a[1], b[1])),
            B.add_v(B.mul_v(a[0], b[1]), B.mul_v(a[1], b[0])),
        )

    def conj_v(self, a):
        return (a[0], self.base.neg_v(a[1]))

    def inv_v(self, a):
        B = self.base
        n = B.add_v(B.mul_v(a[0], a[0]), B.mul_v(a[1], a[1]))
        if B.is_zero_v(n):
            raise NotAUnit(f"{self.format_v(a)} is not invertible (-1 is a square in {B})")
        ni = B.inv_v(n)
        return (B.mul_v(a[0], ni), B.neg_v(B.mul_v(a[1], ni)))

    def format_v(self, a):
        B = self.base
        re_, im = B.format_v(a[0]), B.format_v(a[1])
        if B.is_zero_v(a[1]):
            return re_
        if B.is_zero_v(a[0]):
            return f"{im}*i"
        return f"({re_}+{im}*i)"

    def make(self, a, b=0):
        return self.elem((a, b))


@dataclass(frozen=True)
class PolyRing(Ring):
    """Polynomials in ``X`` over a field, dense and low degree first."""

    base: Ring

    def __post_init__(self):
        if not self.base.is_field:
            raise PreconditionFailed(f"polynomial base {self.base} must be a field")

    def __str__(self):
        return f"{self.base}[X]"

    def _strip(self, coeffs):
        B = self.base
        coeffs = list(coeffs)
        while coeffs and B.is_zero_v(coeffs[-1]):
            coeffs.pop()
        return tuple(coeffs)

    def normalize(self, v):
        if not isinstance(v, (tuple, list)):
            v = (v,)
        return self._strip(self.base.normalize(c) for c in v)

    def from_int_v(self, n):
        return self._strip((self.base.from_int_v(n),))

    def zero_v(self):
        return ()

    def is_zero_v(self, a):
        return not a

    def add_v(self, a, b):
        B = self.base
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = B.add_v(out[i], c)
        return self._strip(out)

    def neg_v(self, a):
        return tuple(self.base.neg_v(c) for c in a)

    def mul_v(self, a, b):
        if not a or not b:
            return ()
        B = self.base
        out = [B.zero_v()] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if B.is_zero_v(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = B.add_v(out[i + j], B.mul_v(x, y))
        return self._strip(out)

    def norm_v(self, a):
        return 0 if not a else 2 ** (len(a) - 1)

    def divmod_v(self, a, b):
        if not b:
            raise DivisionByZero("division by the zero polynomial")
        B = self.base
        inv = B.inv_v(b[-1])
        r = list(a)
        q = [B.zero_v()] * max(len(a) - len(b) + 1, 0)
        while len(r) >= len(b):
            k = len(r) - len(b)
            c = B.mul_v(r[-1], inv)
            q[k] = c
            for i, bc in enumerate(b):
                r[k + i] = B.sub_v(r[k + i], B.mul_v(c, bc))
            r = list(self._strip(r))
        return self._strip(q), tuple(r)

    def is_unit_v(self, a):
        return len(a) == 1

    def inv_v(self, a):
        if len(a) != 1:
            raise NotAUnit(f"{self.format_v(a)} is not a unit")
        return (self.base.inv_v(a[0]),)

    def as_int_v(self, a):
        if len(a) > 1:
            raise ValueError("nonconstant polynomial")
        return self.base.as_int_v(a[0]) if a else 0

    def format_v(self, a):
        if not a:
            return "0"
        B = self.base
        parts = []
        for k in range(len(a) - 1, -1, -1):
            c = a[k]
            if B.is_zero_v(c):
                continue
            mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            cs = B.format_v(c)
            if not mono:
                term = cs
            elif c == B.one_v():
                term = mono
            elif c == B.neg_v(B.one_v()) and not isinstance(B, PrimeField):
                term = "-" + mono
            else:
                term = f"{cs}*{mono}"
            if parts and not term.startswith("-"):
                term = "+" + term
            parts.append(term)
        return "".join(parts)

    def parse_v(self, text):
        if isinstance(self.base, QuadExt):
            raise UnsupportedRing(f"no text grammar for {self}")
        terms = _parse_terms(text, "X", fractions=isinstance(self.base, Rationals))
        deg = max(terms)
        coeffs = [self.base.zero_v()] * (deg + 1)
        for k, c in terms.items():
            coeffs[k] = self.base.normalize(c if isinstance(self.base, Rationals) else int(c))
        return self._strip(coeffs)

    def make(self, *coeffs):
        if len(coeffs) == 1 and isinstance(coeffs[0], (list, tuple)):
            coeffs = coeffs[0]
        vals = []
        for c in coeffs:
            if isinstance(c, Elem):
                if c.ring != self.base:
                    raise RingMismatch(f"coefficient from {c.ring} in {self}")
                vals.append(c.v)
            else:
                vals.append(self.base.normalize(c))
        return Elem(self, self._strip(vals))

    # polynomial-only helpers
    def x(self) -> Elem:
        return Elem(self, (self.base.zero_v(), self.base.one_v()))


class _QuadraticIntegers(Ring):
    """Rank-two lattices ``Z + Z*g``; subclasses fix multiplication and conjugation."""

    letter = "?"

    def normalize(self, v):
        if not isinstance(v, tuple):
            v = (v, 0)
        return (int(v[0]), int(v[1]))

    def from_int_v(self, n):
        return (int(n), 0)

    def add_v(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def neg_v(self, a):
        return (-a[0], -a[1])

    def signed_norm(self, a) -> int:
        n = self.mul_v(a, self.conj_v(a))
        assert n[1] == 0
        return n[0]

    def norm_v(self, a):
        return abs(self.signed_norm(a))

    def is_unit_v(self, a):
        return self.norm_v(a) == 1

    def inv_v(self, a):
        n = self.signed_norm(a)
        if abs(n) != 1:
            raise NotAUnit(f"{self.format_v(a)} is not a unit")
        c = self.conj_v(a)
        return (c[0] * n, c[1] * n)

    def as_int_v(self, a):
        if a[1] != 0:
            raise ValueError(f"{self.format_v(a)} is not a rational integer")
        return a[0]

    def exact_quotient(self, a, b) -> tuple[Fraction, Fraction]:
        """Coordinates of ``a/b`` as exact fractions."""
        n = self.signed_norm(b)
        if n == 0:
            raise DivisionByZero("division by zero")
        x, y = self.mul_v(a, self.conj_v(b))
        return Fraction(x, n), Fraction(y, n)

    def candidates(self, a, b):
        """The four lattice points around ``a/b``, each with its remainder."""
        fx, fy = self.exact_quotient(a, b)
        out = []
        for qx in sorted({floor(fx), -floor(-fx)}):
            for qy in sorted({floor(fy), -floor(-fy)}):
                q = (qx, qy)
                out.append((q, self.sub_v(a, self.mul_v(q, b))))
        return out

    def divmod_v(self, a, b):
        return min(self.candidates(a, b), key=lambda qr: (self.norm_v(qr[1]), qr[0]))

    def format_v(self, a):
        return _fmt_linear(a[0], a[1], self.letter)

    def parse_v(self, text):
        return _parse_linear(text, self.letter)

    def make(self, a, b=0):
        return Elem(self, (int(a), int(b)))

    def parts(self, e: Elem) -> tuple[int, int]:
        return e.v


def _round_half_toward_zero(f: Fraction) -> int:
    lo = floor(f)
    frac = f - lo
    if frac > Fraction(1, 2):
        return lo + 1
    if frac < Fraction(1, 2):
        return lo
    return lo if f > 0 else lo + 1


@dataclass(frozen=True)
class GaussianIntegers(_QuadraticIntegers):
    letter = "i"

    def __str__(self):
        return "Z[i]"

    def mul_v(self, a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def conj_v(self, a):
        return (a[0], -a[1])

    def divmod_v(self, a, b):
        fx, fy = self.exact_quotient(a, b)
        q = (_round_half_toward_zero(fx), _round_half_toward_zero(fy))
        return q, self.sub_v(a, self.mul_v(q, b))


@dataclass(frozen=True)
class EisensteinIntegers(_QuadraticIntegers):
    """``a + b*j`` with ``j*j = -1 - j``; written with the letter ``w``."""

    letter = "w"

    def __str__(self):
        return "Z[w]"

    def mul_v(self, a, b):
        bd = a[1] * b[1]
        return (a[0] * b[0] - bd, a[0] * b[1] + a[1] * b[0] - bd)

    def conj_v(self, a):
        # conj(j) = j^2 = -1 - j
        return (a[0] - a[1], -a[1])


@dataclass(frozen=True)
class ZSqrt3(_QuadraticIntegers):
    """``a + b*sqrt(3)``, written with the letter ``s``; the star norm is indefinite."""

    letter = "s"

    def __str__(self):
        return "Z[s]"

    def mul_v(self, a, b):
        return (a[0] * b[0] + 3 * a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def conj_v(self, a):
        return (a[0], -a[1])


_MATRIX = re.compile(r"\[\[([+-]?\d+),([+-]?\d+)\],\[([+-]?\d+),([+-]?\d+)\]\]")


@dataclass(frozen=True)
class IntMatrix2(Ring):
    """2x2 integer matrices with the adjugate as anti-automorphism.  Not Euclidean."""

    commutative = False
    euclidean = False

    def __str__(self):
        return "M2"

    def normalize(self, v):
        if not isinstance(v, tuple):
            v = (v, 0, 0, v)
        return tuple(int(x) for x in v)

    def from_int_v(self, n):
        return (n, 0, 0, n)

    def add_v(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg_v(self, a):
        return tuple(-x for x in a)

    def mul_v(self, a, b):
        return (
            a[0] * b[0] + a[1] * b[2],
            a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3],
        )

    def conj_v(self, a):
        return (a[3], -a[1], -a[2], a[0])

    def det(self, a) -> int:
        return a[0] * a[3] - a[1] * a[2]

    def is_unit_v(self, a):
        return self.det(a) in (1, -1)

    def inv_v(self, a):
        d = self.det(a)
        if d not in (1, -1):
            raise NotAUnit("matrix is not unimodular")
        return tuple(d * x for x in self.conj_v(a))

    def as_int_v(self, a):
        if a[1] or a[2] or a[0] != a[3]:
            raise ValueError("matrix is not scalar")
        return a[0]

    def format_v(self, a):
        return f"[[{a[0]},{a[1]}],[{a[2]},{a[3]}]]"

    def parse_v(self, text):
        s = "".join(_clean(text).split())
        m = _MATRIX.fullmatch(s)
        if not m:
            pos = next((k for k, ch in enumerate(text) if ch not in "[],+-0123456789 \t"), 0)
            raise ParseError("expected [[a,b],[c,d]]", text, pos)
        return tuple(int(g) for g in m.groups())

    def make(self, a, b=None, c=None, d=None):
        if b is None:
            return Elem(self, (int(a), 0, 0, int(a)))
        return Elem(self, (int(a), int(b), int(c), int(d)))


ZZ = Integers()
QQ = Rationals()
ZI = GaussianIntegers()
ZW = EisensteinIntegers()
ZS = ZSqrt3()
M2 = IntMatrix2()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


_RING_RE = re.compile(r"(?:F:?(\d+)|Q|Z)(\[X\])?")


def parse_ring(text: str) -> Ring:
    """Ring identifiers used on the command line.

    ``Z``, ``Q``, ``F7`` / ``F:7``, ``Q[X]``, ``F:7[X]``, ``Z[i]``, ``Z[w]``,
    ``Z[s]`` and ``M2``.
    """
    t = "".join(text.split())
    aliases = {"Z[i]": ZI, "Zi": ZI, "Z[w]": ZW, "Zw": ZW, "Z[j]": ZW,
               "Z[s]": ZS, "Zs": ZS, "M2": M2, "M2(Z)": M2}
    if t in aliases:
        return aliases[t]
    m = _RING_RE.fullmatch(t)
    if not m:
        raise ParseError("unknown ring identifier", text, 0)
    if m.group(1):
        base = GF(int(m.group(1)))
    elif t.startswith("Q"):
        base = QQ
    else:
        if m.group(2):
            raise ParseError("polynomials need a field of coefficients", text, 1)
        return ZZ
    return PolyRing(base) if m.group(2) else base


# ---------------------------------------------------------------------------
# operations on values


def euclidean_norm(a: Elem) -> int:
    return a.ring.norm_v(a.v)


def euclidean_divide(a: Elem, b: Elem) -> tuple[Elem, Elem]:
    """``(q, r)`` with ``a = q*b + r`` and ``norm(r) < norm(b)``.

    Z keeps ``0 <= r < |b|``; Z[i] rounds each coordinate of ``a/b`` to the
    nearest integer with ties toward zero; Z[w] and Z[s] try the four lattice
    points around ``a/b`` and keep the smallest remainder, breaking ties on
    the smaller quotient coordinates.
    """
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} and {b.ring} values do not mix")
    if b.is_zero():
        raise DivisionByZero(f"division of {a} by zero")
    q, r = a.ring.divmod_v(a.v, b.v)
    return Elem(a.ring, q), Elem(a.ring, r)


def conjugate(a: Elem) -> Elem:
    return a.conj()


def is_unit(a: Elem) -> bool:
    return a.is_unit()


def star_norm(a: Elem) -> Elem:
    return a.star_norm()


def parse_value(ring: Ring, text: str) -> Elem:
    return Elem(ring, ring.normalize(ring.parse_v(text)))


def format_value(a: Elem) -> str:
    return a.ring.format_v(a.v)


# polynomial helpers


def degree(p: Elem) -> int:
    """Degree of a polynomial; -1 for zero."""
    return len(p.v) - 1


def coefficient(p: Elem, k: int) -> Elem:
    base = p.ring.base
    return Elem(base, p.v[k] if k < len(p.v) else base.zero_v())


def leading_coefficient(p: Elem) -> Elem:
    if p.is_zero():
        raise ValueError("zero polynomial has no leading coefficient")
    return Elem(p.ring.base, p.v[-1])


def monic(p: Elem) -> Elem:
    if p.is_zero():
        return p
    return p * constant(p.ring, leading_coefficient(p).inverse())


def constant(ring: PolyRing, c: Elem) -> Elem:
    return ring.make([c])


def map_coefficients(p: Elem, ring: PolyRing, f) -> Elem:
    """Apply ``f`` (base Elem -> target base Elem) to each coefficient."""
    return ring.make([f(coefficient(p, k)) for k in range(len(p.v))])
