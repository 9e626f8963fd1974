"""Exact scalars in Q(i)(t).

Rational numbers stay plain ``int``/``Fraction`` objects, which keeps the common
case fast.  Anything involving the imaginary unit or the formal parameter ``t``
becomes a :class:`RationalFunction`: a reduced quotient of polynomials in ``t``
whose coefficients are Gaussian rationals.  Results are demoted back to
``Fraction``/``int`` whenever they are real constants, so equality and hashing
are canonical across the two representations.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import ParseError

# A Gaussian rational is a pair (re, im) of Fractions; a polynomial is a tuple of
# Gaussian rationals, lowest degree first, with no trailing zeros.
_G0 = (Fraction(0), Fraction(0))
_G1 = (Fraction(1), Fraction(0))
_ONE = (_G1,)


def _gadd(a, b):
    if not a[1] and not b[1]:
        return (a[0] + b[0], a[1])
    return (a[0] + b[0], a[1] + b[1])


def _gsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


_F0 = Fraction(0)


def _gmul(a, b):
    if not a[1] and not b[1]:
        return (a[0] * b[0], _F0)
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _ginv(a):
    n = a[0] * a[0] + a[1] * a[1]
    return (a[0] / n, -a[1] / n)


def _gzero(a):
    return not a[0] and not a[1]


def _trim(p):
    p = list(p)
    while p and _gzero(p[-1]):
        p.pop()
    return tuple(p)


def _padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for k, c in enumerate(q):
        out[k] = _gadd(out[k], c)
    return _trim(out)


def _pneg(p):
    return tuple((-c[0], -c[1]) for c in p)


def _pmul(p, q):
    if not p or not q:
        return ()
    out = [_G0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if _gzero(a):
            continue
        for j, b in enumerate(q):
            out[i + j] = _gadd(out[i + j], _gmul(a, b))
    return _trim(out)


def _pscale(p, c):
    return _trim(tuple(_gmul(a, c) for a in p))


def _pdivmod(p, q):
    inv_lead = _ginv(q[-1])
    rem = list(p)
    quot = [_G0] * max(len(p) - len(q) + 1, 0)
    while len(rem) >= len(q) and rem:
        shift = len(rem) - len(q)
        c = _gmul(rem[-1], inv_lead)
        quot[shift] = c
        for k, b in enumerate(q):
            rem[shift + k] = _gsub(rem[shift + k], _gmul(c, b))
        rem = list(_trim(rem))
    return _trim(quot), tuple(rem)


def _monic(p):
    return _pscale(p, _ginv(p[-1]))


def _pgcd(p, q):
    while q:
        p, q = q, _pdivmod(p, q)[1]
    return _monic(p)


class RationalFunction:
    """A scalar of Q(i)(t) that is not a real rational number."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den):
        # trusted constructor; use _make for normalisation
        self.num = num
        self.den = den
        self._hash = None

    # -- construction helpers -------------------------------------------------
    @staticmethod
    def _parts(x):
        if isinstance(x, RationalFunction):
            return x.num, x.den
        if isinstance(x, (int, Fraction)):
            return (((Fraction(x), Fraction(0)),) if x else ()), _ONE
        if isinstance(x, Rational):
            return (((Fraction(x), Fraction(0)),) if x else ()), _ONE
        raise TypeError(f"not a scalar: {x!r}")

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        try:
            n2, d2 = self._parts(other)
        except TypeError:
            return NotImplemented
        n1, d1 = self.num, self.den
        if d1 == d2:
            return _make(_padd(n1, n2), d1)
        return _make(_padd(_pmul(n1, d2), _pmul(n2, d1)), _pmul(d1, d2))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(_pneg(self.num), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            n2, d2 = self._parts(other)
        except TypeError:
            return NotImplemented
        return self + _make(_pneg(n2), d2)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            # a nonzero rational factor keeps the quotient reduced and the denominator monic
            if other == 1:
                return self
            if not other:
                return 0
            c = Fraction(other)
            return RationalFunction(tuple((a * c if a else a, b * c if b else b) for a, b in self.num),
                                    self.den)
        try:
            n2, d2 = self._parts(other)
        except TypeError:
            return NotImplemented
        if not n2:
            return 0
        return _make(_pmul(self.num, n2), _pmul(self.den, d2))

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            n2, d2 = self._parts(other)
        except TypeError:
            return NotImplemented
        if not n2:
            raise ZeroDivisionError("division by zero scalar")
        return _make(_pmul(self.num, d2), _pmul(self.den, n2))

    def __rtruediv__(self, other):
        n2, d2 = self._parts(other)
        return _make(_pmul(n2, self.den), _pmul(d2, self.num))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return 1 / (self ** (-k))
        out = 1
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison -------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        return False  # normal forms never coincide with plain rationals

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return True

    def conjugate(self):
        conj = lambda p: tuple((c[0], -c[1]) for c in p)
        return _make(conj(self.num), conj(self.den))

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[int, Fraction, RationalFunction]


def _make(num, den):
    if not num:
        return 0
    if len(den) > 1:
        g = _pgcd(num, den)
        if len(g) > 1:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
    if den[-1] != _G1:
        inv = _ginv(den[-1])
        num = _pscale(num, inv)
        den = _pscale(den, inv)
    if len(den) == 1 and len(num) == 1 and not num[0][1]:
        value = num[0][0]
        return value.numerator if value.denominator == 1 else value
    return RationalFunction(num, den)


def _poly(coeffs):
    return _make(_trim(coeffs), _ONE)


T = _poly(((Fraction(0), Fraction(0)), _G1))
I = _poly(((Fraction(0), Fraction(1)),))


def normalize(x) -> Scalar:
    """Coerce ints, Fractions and rational functions into canonical form."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, Rational):
        return normalize(Fraction(x))
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


def conj(x: Scalar) -> Scalar:
    if isinstance(x, RationalFunction):
        return x.conjugate()
    return x


def is_rational(x) -> bool:
    return isinstance(x, (int, Fraction))


def has_parameter(x) -> bool:
    return isinstance(x, RationalFunction) and (len(x.num) > 1 or len(x.den) > 1)


def _peval(p, value):
    acc = 0
    for c in reversed(p):
        acc = acc * value + _gaussian(c)
    return acc


def _gaussian(c):
    if not c[1]:
        return normalize(c[0])
    return normalize(c[0]) + normalize(c[1]) * I


def div(a: Scalar, b: Scalar) -> Scalar:
    """Exact quotient; never produces a float."""
    if b == 0:
        raise ZeroDivisionError("division by zero scalar")
    if isinstance(a, RationalFunction) or isinstance(b, RationalFunction):
        return a / b
    return normalize(Fraction(a) / Fraction(b))


def substitute(x: Scalar, value) -> Scalar:
    """Specialise the parameter t to ``value`` (a scalar without t)."""
    if not isinstance(x, RationalFunction):
        return x
    value = normalize(value)
    den = _peval(x.den, value)
    if den == 0:
        raise ZeroDivisionError(f"t = {format_scalar(value)} is a pole of {x}")
    return div(_peval(x.num, value), den)


# -- formatting -----------------------------------------------------------------

def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _fmt_g(c) -> str:
    re_, im = c
    if not im:
        return _fmt_q(re_)
    imag = "i" if im == 1 else "-i" if im == -1 else f"{_fmt_q(im)}*i"
    if not re_:
        return imag
    sign = "-" if imag.startswith("-") else "+"
    return f"({_fmt_q(re_)}{sign}{imag.lstrip('-')})"


def _fmt_poly(p) -> str:
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if _gzero(c):
            continue
        mono = "" if k == 0 else "t" if k == 1 else f"t^{k}"
        coef = _fmt_g(c)
        if mono:
            if coef == "1":
                coef = ""
            elif coef == "-1":
                coef = "-"
            else:
                coef = coef + "*"
        terms.append(coef + mono)
    out = terms[0]
    for term in terms[1:]:
        out += " - " + term[1:] if term.startswith("-") else " + " + term
    return out


def format_scalar(x: Scalar) -> str:
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return _fmt_q(x)
    num = _fmt_poly(x.num)
    if x.den == _ONE:
        return num
    den = _fmt_poly(x.den)
    wrap = lambda s: s if re.fullmatch(r"[-\w/*^]+", s) else f"({s})"
    return f"{wrap(num)}/{wrap(den)}"


# -- parsing ----------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|(\*\*|[-+*/^()])|([it]))")


def parse_scalar(text) -> Scalar:
    """Parse strings such as ``"3/4"``, ``"1/2+3/5*i"`` or ``"(1+t)^2/(2-t)"``."""
    if isinstance(text, (int, Fraction)):
        return normalize(text)
    if not isinstance(text, str):
        raise ParseError(f"scalar must be a string or integer, got {text!r}")
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m:
            raise ParseError(f"unexpected character {stripped[pos]!r} in scalar {text!r}", column=pos + 1)
        tokens.append((m.group(1) or m.group(2) or m.group(3), m.start(m.lastindex) + 1))
        pos = m.end()
    if not tokens:
        raise ParseError(f"empty scalar {text!r}")
    parser = _Parser(tokens, text)
    value = parser.expr()
    if parser.pos != len(tokens):
        tok, col = tokens[parser.pos]
        raise ParseError(f"unexpected {tok!r} in scalar {text!r}", column=col)
    return value


class _Parser:
    def __init__(self, tokens, text):
        self.tokens = tokens
        self.pos = 0
        self.text = text

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, msg):
        col = self.tokens[self.pos][1] if self.pos < len(self.tokens) else len(self.text) + 1
        raise ParseError(f"{msg} in scalar {self.text!r}", column=col)

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while True:
            tok = self.peek()
            if tok in ("*", "/"):
                self.take()
                rhs = self.unary()
                if tok == "/":
                    if rhs == 0:
                        self.fail("division by zero")
                    value = div(value, rhs)
                else:
                    value = value * rhs
            elif tok is not None and (tok in ("(", "i", "t") or tok[0].isdigit()):
                value = value * self.power()  # juxtaposition, e.g. 2t
            else:
                return value

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() in ("^", "**"):
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            tok = self.peek()
            if tok is None or not tok.isdigit():
                self.fail("expected integer exponent")
            exp = sign * int(self.take()[0])
            if exp < 0 and base == 0:
                self.fail("division by zero")
            if isinstance(base, (int, Fraction)):
                return normalize(Fraction(base) ** exp)
            return base ** exp
        return base

    def atom(self):
        tok = self.peek()
        if tok is None:
            self.fail("unexpected end")
        if tok == "(":
            self.take()
            value = self.expr()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.take()
            return value
        if tok == "i":
            self.take()
            return I
        if tok == "t":
            self.take()
            return T
        if tok[0].isdigit():
            self.take()
            return normalize(Fraction(tok))
        self.fail(f"unexpected {tok!r}")
