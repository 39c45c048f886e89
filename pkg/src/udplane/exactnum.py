"""Exact arithmetic in real multi-quadratic extensions of the rationals.

Rationals are stdlib ``fractions.Fraction`` (always in lowest terms with a
positive denominator, which is exactly the canonical form we need). On top
of that, :class:`QNum` represents numbers of the form

    sum of  c_m * sqrt(m)

over finitely many square-free integers m >= 1, with rational coefficients
c_m (the m == 1 term is the rational part). Products of square roots reduce
back into this basis via sqrt(a)*sqrt(b) = g*sqrt(a*b/g^2) with g = gcd(a,b),
so the set is closed under ring operations. Because {sqrt(m) : m square-free}
is linearly independent over the rationals, the representation is canonical
once zero coefficients are pruned, and equality is a structural comparison.

This covers every coordinate the workbench needs (the spindle constructions
live in the field generated by sqrt(3) and sqrt(11)); unit-distance decisions
are exact equality tests, never floating-point tolerances.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import NegativeRadicand

Rat = Fraction

_RationalLike = int | Fraction

# Float conversion can honor at most ~52 mantissa bits; interval requests
# beyond this cap keep soundness but not the width guarantee.
_MAX_INTERVAL_BITS = 48

_SIGN_BITS_LIMIT = 4096


def _squarefree_split(n: int) -> tuple[int, int]:
    """Decompose n >= 0 as s*s*m with m square-free; returns (s, m)."""
    if n < 0:
        raise ValueError("negative input")
    if n == 0:
        return 0, 1
    s, m = 1, 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            s *= d ** (e // 2)
            if e % 2:
                m *= d
        d += 1 if d == 2 else 2
    return s, m * n


class QNum:
    """Immutable exact number in a multi-quadratic extension field.

    Construct from an int or Fraction, or via :func:`sqrt_rational`. All
    arithmetic is exact and total; values hash and compare structurally.
    """

    __slots__ = ("_terms",)

    _terms: dict[int, Fraction]

    def __init__(self, value: _RationalLike | QNum = 0):
        if isinstance(value, QNum):
            object.__setattr__(self, "_terms", value._terms)
            return
        if not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot build QNum from {type(value).__name__}")
        c = Fraction(value)
        object.__setattr__(self, "_terms", {1: c} if c else {})

    @classmethod
    def _make(cls, terms: dict[int, Fraction]) -> QNum:
        self = object.__new__(cls)
        object.__setattr__(self, "_terms", {m: c for m, c in terms.items() if c})
        return self

    def __setattr__(self, name, value):
        raise AttributeError("QNum is immutable")

    # -- structure ---------------------------------------------------------

    @property
    def generators(self) -> tuple[int, ...]:
        """Sorted square-free radicands > 1 present in this value."""
        return tuple(sorted(m for m in self._terms if m > 1))

    def coefficient(self, m: int) -> Fraction:
        """Coefficient of sqrt(m); m must be square-free."""
        return self._terms.get(m, Fraction(0))

    def is_rational(self) -> bool:
        return all(m == 1 for m in self._terms)

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self._terms.get(1, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> QNum | None:
        if isinstance(other, QNum):
            return other
        if isinstance(other, (int, Fraction)):
            return QNum(other)
        return None

    def __add__(self, other) -> QNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in o._terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return QNum._make(terms)

    __radd__ = __add__

    def __neg__(self) -> QNum:
        return QNum._make({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> QNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> QNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> QNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms: dict[int, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in o._terms.items():
                g = math.gcd(m1, m2)
                m = (m1 // g) * (m2 // g)
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2 * g
        return QNum._make(terms)

    __rmul__ = __mul__

    def __truediv__(self, other) -> QNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero QNum")
        if not o.is_rational():
            raise ValueError("division is supported only by rational values")
        inv = 1 / o.as_rational()
        return self * inv

    def __pow__(self, k: int) -> QNum:
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = QNum(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    # -- sign and order ----------------------------------------------------

    def _bounds(self, bits: int) -> tuple[Fraction, Fraction]:
        """Exact rational enclosure with width <= 2**-bits * (1 + |value|)."""
        total = sum((abs(c) for c in self._terms.values()), Fraction(0))
        guard = (total.numerator // total.denominator + 2).bit_length() + 1
        shift = bits + guard
        lo = hi = Fraction(0)
        for m, c in self._terms.items():
            if m == 1:
                lo += c
                hi += c
                continue
            r = math.isqrt(m << (2 * shift))
            slo = Fraction(r, 1 << shift)
            shi = Fraction(r + 1, 1 << shift)
            if c >= 0:
                lo += c * slo
                hi += c * shi
            else:
                lo += c * shi
                hi += c * slo
        return lo, hi

    def sign(self) -> int:
        """Exact sign: -1, 0, or +1."""
        if not self._terms:
            return 0
        if self.is_rational():
            c = self._terms[1]
            return 1 if c > 0 else -1
        bits = 32
        while bits <= _SIGN_BITS_LIMIT:
            lo, hi = self._bounds(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2
        raise ArithmeticError(f"sign of {self} undecided at {_SIGN_BITS_LIMIT} bits")

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    # -- numeric views -----------------------------------------------------

    def interval(self, precision: int = 53) -> tuple[float, float]:
        """Float enclosure (lo, hi) with lo <= value <= hi.

        The width satisfies hi - lo <= 2**-precision * max(1, |value|) for
        precision up to 48 bits; larger requests are clamped to 48 because a
        float pair cannot express tighter relative widths. Containment holds
        for every precision. Never use this for edge decisions; it exists for
        plotting and sampling.
        """
        bits = max(1, min(precision, _MAX_INTERVAL_BITS))
        lo, hi = self._bounds(bits + 2)
        flo = float(lo)
        if flo > lo:
            flo = math.nextafter(flo, -math.inf)
        fhi = float(hi)
        if fhi < hi:
            fhi = math.nextafter(fhi, math.inf)
        return flo, fhi

    def __float__(self) -> float:
        lo, hi = self.interval(48)
        return (lo + hi) / 2

    # -- text form ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for m in sorted(self._terms):
            c = self._terms[m]
            mag = abs(c)
            if m == 1:
                body = str(mag)
            elif mag == 1:
                body = f"sqrt({m})"
            else:
                body = f"{mag}*sqrt({m})"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QNum({str(self)!r})"

    _TERM_PLAIN = re.compile(r"^([+-]?)(\d+(?:/\d+)?)$")
    _TERM_ROOT = re.compile(r"^([+-]?)(?:(\d+(?:/\d+)?)\*)?sqrt\((\d+)\)$")

    @classmethod
    def parse(cls, text: str) -> QNum:
        """Parse the textual form produced by str(); also accepts
        non-square-free radicands, which are normalized."""
        compact = text.replace(" ", "")
        if not compact:
            raise ValueError("empty QNum text")
        tokens = re.findall(r"[+-]?[^+-]+", compact)
        if "".join(tokens) != compact:
            raise ValueError(f"dangling sign in {text!r}")
        out = QNum(0)
        for token in tokens:
            m = cls._TERM_PLAIN.match(token)
            if m:
                sign, coef = m.groups()
                value = QNum(Fraction(coef))
            else:
                m = cls._TERM_ROOT.match(token)
                if not m:
                    raise ValueError(f"bad QNum term {token!r} in {text!r}")
                sign, coef, rad = m.groups()
                value = sqrt_rational(Fraction(int(rad)))
                if coef is not None:
                    value = value * Fraction(coef)
            out = out - value if sign == "-" else out + value
        return out


def sqrt_rational(r: _RationalLike) -> QNum:
    """Exact square root of a nonnegative rational.

    Returns (s/q) * sqrt(m) where r = p/q in lowest terms, p*q = s*s*m and
    m is square-free; a plain rational when r is a perfect square.
    """
    r = Fraction(r)
    if r < 0:
        raise NegativeRadicand(f"sqrt of negative rational {r}")
    s, m = _squarefree_split(r.numerator * r.denominator)
    coeff = Fraction(s, r.denominator)
    return QNum._make({m: coeff})


def to_interval(a: QNum, precision: int = 53) -> tuple[float, float]:
    """Module-level alias for QNum.interval."""
    return a.interval(precision)
