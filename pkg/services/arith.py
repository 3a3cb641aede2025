"""Exact ordered-field scalars.

Two coefficient types are supported throughout polyhull:

* ``fractions.Fraction`` for arbitrary-precision rationals, and
* ``PuiseuxFraction``, univariate rational functions in ``t`` with rational
  coefficients and rational exponents, ordered as ``t -> 0+`` (so ``t`` is a
  positive infinitesimal: ``0 < t < q`` for every positive rational ``q``).

Every geometry routine is written against the field operations plus
comparison, so the same code runs over either type.
"""

from __future__ import annotations

import math
import re
from enum import IntEnum
from fractions import Fraction
from functools import total_ordering

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing

from services.result import Err, Ok, Result

type Scalar = Fraction | PuiseuxFraction

# A sparse term list: ((exponent, coefficient), ...) with strictly increasing
# exponents and no zero coefficients.
type Terms = tuple[tuple[Fraction, Fraction], ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)

# Puiseux fractions are stored as polynomials in s = t**(1/scale).
_RING = PolyRing("s", QQ)
_S = _RING.gens[0]


class ScalarParseError(ValueError):
    pass


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def to_scalar(value) -> Scalar:
    """Coerce ints, Fractions, Puiseux fractions and scalar text to a Scalar."""
    if isinstance(value, PuiseuxFraction):
        return value
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"unsupported scalar type: {type(value).__name__}")


def is_rational(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def sign(value: Scalar) -> int:
    if isinstance(value, PuiseuxFraction):
        return value.sign()
    return (value > 0) - (value < 0)


def compare(a: Scalar, b: Scalar) -> Ordering:
    return Ordering(sign(a - b))


def checked_div(a: Scalar, b: Scalar) -> Result[Scalar]:
    if b == 0:
        return Err("division_by_zero", f"cannot divide {format_scalar(a)} by zero")
    return Ok(a / b)


# ---------------------------------------------------------------------------
# polynomials in s


def _qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def _fraction(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def _lowest(p: PolyElement) -> int:
    return min(m for (m,) in p)


def _shift_down(p: PolyElement, k: int) -> PolyElement:
    return _RING.from_dict({(m - k,): c for (m,), c in p.items()})


def _inflate(p: PolyElement, k: int) -> PolyElement:
    """Substitute s**k for s."""
    if k == 1:
        return p
    return _RING.from_dict({(m * k,): c for (m,), c in p.items()})


def _deflate(p: PolyElement, k: int) -> PolyElement:
    return _RING.from_dict({(m // k,): c for (m,), c in p.items()})


def _canonical(
    num: PolyElement, den: PolyElement, shift: int, scale: int
) -> tuple[PolyElement, PolyElement, int, int]:
    """Normal form of ``s**shift * num / den`` with ``s = t**(1/scale)``.

    Afterwards num and den are coprime with nonzero constant terms, the
    constant term of den is 1 and scale is as small as possible.
    """
    if not den:
        raise ZeroDivisionError("PuiseuxFraction with zero denominator")
    if not num:
        return _RING.zero, _RING.one, 0, 1

    k = _lowest(num)
    if k:
        num = _shift_down(num, k)
        shift += k
    k = _lowest(den)
    if k:
        den = _shift_down(den, k)
        shift -= k

    g = num.gcd(den)
    if g != _RING.one:
        num = num.exquo(g)
        den = den.exquo(g)

    lead = den[(0,)]
    if lead != QQ.one:
        num = num.quo_ground(lead)
        den = den.quo_ground(lead)

    step = math.gcd(scale, shift, *(m for (m,) in num), *(m for (m,) in den))
    if step > 1:
        num, den = _deflate(num, step), _deflate(den, step)
        shift, scale = shift // step, scale // step
    return num, den, shift, scale


def _terms(p: PolyElement, offset: int, scale: int) -> Terms:
    return tuple(
        sorted((Fraction(m + offset, scale), _fraction(c)) for (m,), c in p.items())
    )


def _coerce(value) -> PuiseuxFraction | None:
    if isinstance(value, PuiseuxFraction):
        return value
    if is_rational(value):
        return PuiseuxFraction.constant(value)
    return None


@total_ordering
class PuiseuxFraction:
    """Element of the field of rational Puiseux fractions in ``t``.

    The value is ``s**shift * num(s) / den(s)`` with ``s = t**(1/scale)``,
    where num and den live in a sympy polynomial ring over ``QQ``. Instances
    are immutable and kept in the normal form of ``_canonical``, so
    structural equality is field equality.
    """

    __slots__ = ("_num", "_den", "_shift", "_scale", "_hash")

    def __init__(
        self,
        num: PolyElement,
        den: PolyElement | None = None,
        shift: int = 0,
        scale: int = 1,
    ):
        num, den, shift, scale = _canonical(
            num, _RING.one if den is None else den, shift, scale
        )
        object.__setattr__(self, "_num", num)
        object.__setattr__(self, "_den", den)
        object.__setattr__(self, "_shift", shift)
        object.__setattr__(self, "_scale", scale)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("PuiseuxFraction is immutable")

    def __reduce__(self):
        return PuiseuxFraction.from_terms, (self.numerator, self.denominator)

    @classmethod
    def t(cls) -> PuiseuxFraction:
        return cls.monomial(1)

    @classmethod
    def monomial(cls, exponent=1, coefficient=1) -> PuiseuxFraction:
        e = Fraction(exponent)
        c = Fraction(coefficient)
        return cls(_RING.ground_new(_qq(c)), None, e.numerator, e.denominator)

    @classmethod
    def constant(cls, value) -> PuiseuxFraction:
        return cls(_RING.ground_new(_qq(Fraction(value))))

    @classmethod
    def from_terms(
        cls, numerator: Terms, denominator: Terms = ((_ZERO, _ONE),)
    ) -> PuiseuxFraction:
        zero = cls.constant(0)
        num = sum((cls.monomial(e, c) for e, c in numerator), zero)
        den = sum((cls.monomial(e, c) for e, c in denominator), zero)
        return num / den

    @property
    def numerator(self) -> Terms:
        return _terms(self._num, max(self._shift, 0), self._scale)

    @property
    def denominator(self) -> Terms:
        return _terms(self._den, max(-self._shift, 0), self._scale)

    @property
    def is_polynomial(self) -> bool:
        return self._shift >= 0 and self._den == _RING.one

    @property
    def is_constant(self) -> bool:
        return self._shift == 0 and self._den == _RING.one and len(self._num) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not a constant")
        return _fraction(self._num[(0,)]) if self._num else _ZERO

    def exponents(self) -> list[Fraction]:
        return [e for e, _ in self.numerator + self.denominator]

    def sign(self) -> int:
        # den(0) is 1, so the sign as t -> 0+ is the sign of num(0)
        if not self._num:
            return 0
        return 1 if self._num[(0,)] > 0 else -1

    def _aligned(self, other: PuiseuxFraction):
        scale = math.lcm(self._scale, other._scale)
        a, b = scale // self._scale, scale // other._scale
        return (
            _inflate(self._num, a),
            _inflate(self._den, a),
            self._shift * a,
            _inflate(other._num, b),
            _inflate(other._den, b),
            other._shift * b,
            scale,
        )

    # arithmetic ------------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        n1, d1, p, n2, d2, q, scale = self._aligned(other)
        low = min(p, q)
        if d1 == d2:
            num, den = n1 * _S ** (p - low) + n2 * _S ** (q - low), d1
        else:
            num = n1 * d2 * _S ** (p - low) + n2 * d1 * _S ** (q - low)
            den = d1 * d2
        return PuiseuxFraction(num, den, low, scale)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxFraction(-self._num, self._den, self._shift, self._scale)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n1, d1, p, n2, d2, q, scale = self._aligned(other)
        return PuiseuxFraction(n1 * n2, d1 * d2, p + q, scale)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other._num:
            raise ZeroDivisionError(f"division of {self} by zero")
        n1, d1, p, n2, d2, q, scale = self._aligned(other)
        return PuiseuxFraction(n1 * d2, d1 * n2, p - q, scale)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if isinstance(exponent, Fraction) and exponent.denominator == 1:
            exponent = exponent.numerator
        if isinstance(exponent, Fraction):
            # roots are only taken of monic monomials
            if not (self._den == _RING.one and self._num == _RING.one):
                raise ValueError(
                    f"{self} has no rational Puiseux power {exponent}"
                )
            return PuiseuxFraction.monomial(
                Fraction(self._shift, self._scale) * exponent
            )
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            return NotImplemented
        if exponent < 0:
            if not self._num:
                raise ZeroDivisionError("zero to a negative power")
            return PuiseuxFraction(
                self._den**-exponent,
                self._num**-exponent,
                self._shift * exponent,
                self._scale,
            )
        return PuiseuxFraction(
            self._num**exponent,
            self._den**exponent,
            self._shift * exponent,
            self._scale,
        )

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return bool(self._num)

    # comparison ------------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (
            self._shift == other._shift
            and self._scale == other._scale
            and self._num == other._num
            and self._den == other._den
        )

    def __lt__(self, other):
        if _coerce(other) is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        if self._hash is None:
            if self.is_constant:
                value = hash(self.constant_value())
            else:
                value = hash((self.numerator, self.denominator))
            object.__setattr__(self, "_hash", value)
        return self._hash

    def __repr__(self):
        return f"PuiseuxFraction({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def evaluate(f: Scalar, t0) -> Result[Fraction]:
    """Substitute the rational ``t0`` for ``t``.

    Only integer exponents are supported; ``t0`` must be nonnegative.
    """
    t0 = Fraction(t0)
    if is_rational(f):
        return Ok(Fraction(f))
    if t0 < 0:
        return Err("unsupported_evaluation", "t must be nonnegative")
    if any(e.denominator != 1 for e in f.exponents()):
        return Err(
            "unsupported_evaluation",
            f"non-integer exponent in {format_scalar(f)}",
        )

    def substitute(terms: Terms) -> Fraction | None:
        total = _ZERO
        for e, c in terms:
            k = int(e)
            if t0 == 0:
                if k < 0:
                    return None
                if k > 0:
                    continue
            total += c * t0**k
        return total

    num = substitute(f.numerator)
    den = substitute(f.denominator)
    if num is None or den is None or den == 0:
        return Err("pole", f"{format_scalar(f)} has a pole at t={t0}")
    return Ok(num / den)


# ---------------------------------------------------------------------------
# text syntax


def _format_exponent(e: Fraction) -> str:
    if e.denominator == 1 and e >= 0:
        return str(e.numerator)
    return f"({e})"


def _format_terms(terms: Terms) -> str:
    if not terms:
        return "0"
    parts: list[str] = []
    for e, c in terms:
        magnitude = abs(c)
        if e == 0:
            body = str(magnitude)
        else:
            power = "t" if e == 1 else f"t^{_format_exponent(e)}"
            body = power if magnitude == 1 else f"{magnitude}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def format_scalar(value) -> str:
    if isinstance(value, PuiseuxFraction):
        num = _format_terms(value.numerator)
        if value.is_polynomial:
            return num
        return f"({num})/({_format_terms(value.denominator)})"
    return str(Fraction(value))


_NUMBER = r"\d+(?:/\d+)?"
_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    rf"(?:(?P<coef>{_NUMBER})\s*(?P<star>\*)?\s*)?"
    r"(?P<t>t(?:\s*\^\s*(?:\((?P<pexp>-?" + _NUMBER + r")\)"
    r"|(?P<exp>-?" + _NUMBER + r")))?)?\s*"
)


def _parse_terms(text: str) -> PuiseuxFraction:
    pos = 0
    acc = PuiseuxFraction.constant(0)
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ScalarParseError(f"cannot parse scalar {text!r} at {pos}")
        if not (m.group("coef") or m.group("t")):
            raise ScalarParseError(f"empty term in {text!r}")
        if m.group("star") and not m.group("t"):
            raise ScalarParseError(f"dangling '*' in {text!r}")
        if not first and not m.group("sign"):
            raise ScalarParseError(f"missing operator in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else _ONE
        if m.group("sign") == "-":
            coef = -coef
        if m.group("t"):
            raw = m.group("pexp") or m.group("exp")
            exponent = Fraction(raw) if raw else _ONE
        else:
            exponent = _ZERO
        acc = acc + PuiseuxFraction.monomial(exponent, coef)
        pos = m.end()
        first = False
    if first:
        raise ScalarParseError("empty scalar")
    return acc


def _split_parenthesized(text: str) -> tuple[str, str] | None:
    """Split ``(A)/(B)`` or ``(A)`` into its parts; None when not parenthesized."""
    if not text.startswith("("):
        return None
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                inner, rest = text[1:i], text[i + 1 :].strip()
                if not rest:
                    return inner, ""
                if rest.startswith("/"):
                    den = rest[1:].strip()
                    if den.startswith("(") and den.endswith(")"):
                        den = den[1:-1]
                    return inner, den
                return None
    raise ScalarParseError(f"unbalanced parentheses in {text!r}")


def parse_scalar(text: str) -> Scalar:
    """Parse integers, ``p/q`` rationals and Puiseux fractions in ``t``."""
    text = text.strip().replace("−", "-")
    if not text:
        raise ScalarParseError("empty scalar")
    if "t" not in text:
        try:
            return Fraction(text.replace(" ", ""))
        except (ValueError, ZeroDivisionError) as e:
            raise ScalarParseError(f"invalid rational {text!r}: {e}") from e
    parts = _split_parenthesized(text)
    if parts is None:
        return _parse_terms(text)
    num_text, den_text = parts
    num = _parse_terms(num_text)
    if not den_text:
        return num
    den = _parse_terms(den_text)
    if not den:
        raise ScalarParseError(f"zero denominator in {text!r}")
    return num / den
