"""Text formats for octonions and polynomials.

Grammar accepted by :func:`parse_poly` (a superset of plain term lists)::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor (('*' | '/' | <juxtaposition>) factor)*
    factor := ('+' | '-') factor | atom ['^' INT]
    atom   := NUMBER | 'w' | BASIS | '(' expr ')'
    BASIS  := 'i' | 'j' | 'k' | 'ij' | 'ik' | 'jk' | 'ijk'

``*`` and juxtaposition are the star product, so ``w*i``, ``wi`` and ``i*w``
all mean the monomial ``w i``, and ``(w - i)*(w - j)`` expands to
``w^2 - w(i + j) + ij``.  ``/`` divides on the right by a nonzero constant.
``ijk`` is the basis element ``(ij)k``.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

import numpy as np

from .errors import DivisionByZero, ParseError
from .octonion import BASIS, Octonion, inverse
from .poly import OctPoly, scale, star_mul
from .realpoly import RealPoly
from .tolerance import DEFAULT, Tolerances

_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_BASIS_BY_LENGTH = ("ijk", "ij", "ik", "jk", "i", "j", "k")
_QUATERNION_FREE = {"k", "ik", "jk", "ijk"}


def _tokenize(text: str, quaternion: bool = False):
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _NUMBER.match(text, pos)
        if m:
            tokens.append(("num", float(m.group()), pos))
            pos = m.end()
            continue
        if text.startswith("**", pos):
            tokens.append(("^", "^", pos))
            pos += 2
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        if ch == "w":
            tokens.append(("w", "w", pos))
            pos += 1
            continue
        for name in _BASIS_BY_LENGTH:
            if text.startswith(name, pos):
                if quaternion and name in _QUATERNION_FREE:
                    raise ParseError(f"basis element {name!r} is not quaternionic", text, pos)
                tokens.append(("basis", name, pos))
                pos += len(name)
                break
        else:
            raise ParseError(
                f"unexpected character {ch!r}", text, pos, ("number", "w", "basis element", "operator")
            )
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    _ATOM_START = {"num", "w", "basis", "("}

    def __init__(self, text: str, quaternion: bool = False):
        self.text = text
        self.tokens = _tokenize(text, quaternion)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, expected=()):
        raise ParseError(message, self.text, self.peek()[2], expected)

    def parse(self) -> OctPoly:
        if self.peek()[0] == "end":
            self.fail("empty expression", ("expression",))
        out = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}", ("operator", "end of input"))
        return out

    def expr(self) -> OctPoly:
        sign = 1.0
        if self.peek()[0] in "+-" and self.peek()[0] != "end":
            sign = -1.0 if self.take()[0] == "-" else 1.0
        out = self.term()
        if sign < 0:
            out = -out
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> OctPoly:
        out = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                out = star_mul(out, self.factor())
            elif kind == "/":
                tok = self.take()
                rhs = self.factor()
                if rhs.degree > 0:
                    raise ParseError("can only divide by a constant", self.text, tok[2])
                try:
                    out = scale(out, inverse(rhs.coeff(0)), "right")
                except DivisionByZero:
                    raise ParseError("division by zero", self.text, tok[2]) from None
            elif kind in self._ATOM_START:
                out = star_mul(out, self.factor())
            else:
                return out

    def factor(self) -> OctPoly:
        kind = self.peek()[0]
        if kind in ("+", "-"):
            self.take()
            inner = self.factor()
            return -inner if kind == "-" else inner
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "num" or tok[1] != int(tok[1]):
                self.fail("exponent must be a non-negative integer", ("integer",))
            self.take()
            return base ** int(tok[1])
        return base

    def atom(self) -> OctPoly:
        kind, value, pos = self.peek()
        if kind == "num":
            self.take()
            return OctPoly.constant(value)
        if kind == "w":
            self.take()
            return OctPoly.monomial(1)
        if kind == "basis":
            self.take()
            return OctPoly.constant(Octonion.basis(value))
        if kind == "(":
            self.take()
            inner = self.expr()
            if self.peek()[0] != ")":
                self.fail("unbalanced parenthesis", ("')'",))
            self.take()
            return inner
        self.fail(f"unexpected {'end of input' if kind == 'end' else repr(value)}", ("number", "w", "basis element", "'('"))


def parse_poly(text: str, quaternion: bool = False) -> OctPoly:
    """Parse a polynomial expression (or a ``{"coeffs": ...}`` JSON object)."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            p = OctPoly.from_json(json.loads(stripped))
        except (ValueError, KeyError) as exc:
            raise ParseError(f"bad polynomial JSON: {exc}", text, 0) from None
        if quaternion and not p.is_quaternion():
            raise ParseError("polynomial is not quaternionic", text, 0)
        return p
    return _Parser(text, quaternion).parse()


def parse_octonion(text: str, quaternion: bool = False) -> Octonion:
    """Parse an octonion literal such as ``0.5 - 0.5i + ijk`` or a JSON array."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            x = Octonion(json.loads(stripped))
        except ValueError as exc:
            raise ParseError(f"bad octonion JSON: {exc}", text, 0) from None
    else:
        p = _Parser(text, quaternion).parse()
        if p.degree > 0:
            raise ParseError("expected a constant, found a polynomial in w", text, 0)
        x = p.coeff(0)
    if quaternion and not x.is_quaternion():
        raise ParseError("octonion is not quaternionic", text, 0)
    return x


# formatting


def _dyadic(x: float, tol: Tolerances):
    frac = Fraction(x).limit_denominator(64)
    if frac.denominator & (frac.denominator - 1) == 0 and abs(float(frac) - x) <= tol.abs:
        return frac
    return None


def format_number(x: float, tol: Tolerances = DEFAULT) -> str:
    frac = _dyadic(x, tol)
    if frac is not None:
        return str(frac.numerator) if frac.denominator == 1 else f"{frac.numerator}/{frac.denominator}"
    return f"{x:.6g}"


def _scaled_symbol(value: float, symbol: str, tol: Tolerances) -> str:
    """``value * symbol`` for a positive value, e.g. ``i``, ``3i/4``, ``0.866i``."""
    frac = _dyadic(value, tol)
    if frac is not None:
        num = "" if frac.numerator == 1 else str(frac.numerator)
        den = "" if frac.denominator == 1 else f"/{frac.denominator}"
        return f"{num}{symbol}{den}"
    return f"{value:.6g}{symbol}"


def _signed_terms(parts):
    """Join (negative, text) pairs into ``a - b + c``."""
    out = ""
    for k, (neg, body) in enumerate(parts):
        if k == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def _octonion_parts(x, tol: Tolerances):
    c = np.asarray(x, dtype=float)
    cut = tol.abs + tol.rel * float(np.abs(c).max(initial=0.0))
    parts = []
    for idx, v in enumerate(c):
        if abs(v) <= cut:
            continue
        if idx == 0:
            parts.append((v < 0, format_number(abs(v), tol)))
        else:
            parts.append((v < 0, _scaled_symbol(abs(v), BASIS[idx], tol)))
    return parts


def format_octonion(x, tol: Tolerances = DEFAULT) -> str:
    parts = _octonion_parts(x, tol)
    return _signed_terms(parts) if parts else "0"


def _power(k: int) -> str:
    return "" if k == 0 else ("w" if k == 1 else f"w^{k}")


def format_poly(f: OctPoly, tol: Tolerances = DEFAULT) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        a = f.coeffs[k]
        sub = _octonion_parts(a, tol)
        if not sub:
            continue
        wk = _power(k)
        if k == 0:
            parts.extend(sub)
        elif len(sub) > 1:
            # pull a leading minus out: -w*(i + j) rather than w*(-i - j)
            neg = sub[0][0]
            if neg:
                sub = [(not n, body) for n, body in sub]
            parts.append((neg, f"{wk}*({_signed_terms(sub)})"))
        elif abs(a[0]) > tol.abs + tol.rel * float(np.abs(a).max()):
            # real coefficient: 3w^2, w^2/2, 0.7w
            parts.append((a[0] < 0, _scaled_symbol(abs(float(a[0])), wk, tol)))
        else:
            neg, body = sub[0]
            parts.append((neg, f"{wk}*{body}"))
    return _signed_terms(parts) if parts else "0"


def format_real_poly(p: RealPoly, tol: Tolerances = DEFAULT) -> str:
    return format_poly(OctPoly.from_real(p), tol)
