"""Exact sparse multivariate Laurent polynomials with rational exponents.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable
name with no zero exponents.  Exponents and coefficients are exact: ints when
integral, :class:`fractions.Fraction` otherwise.  Values are immutable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]
Monomial = tuple


class NonIntegerSignPower(ValueError):
    """A substitution would raise -1 to a non-integral power."""


class ZeroAssignment(ValueError):
    """A variable was assigned zero (or left unassigned) during evaluation."""


def _norm(x) -> Number:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out = dict(m1)
    for v, e in m2:
        s = out.get(v, 0) + e
        if s:
            out[v] = s
        else:
            del out[v]
    return tuple(sorted(out.items()))


def _render_number(c: Number) -> str:
    return str(c)


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Number] | None = None, *, _trusted: bool = False):
        if _trusted:
            self._terms = terms
        else:
            clean: dict[Monomial, Number] = {}
            for mono, c in (terms or {}).items():
                if c == 0:
                    continue
                mono = tuple(sorted((str(v), _norm(e)) for v, e in mono if e != 0))
                c = _norm(c) + clean.get(mono, 0)
                if c:
                    clean[mono] = c
                else:
                    clean.pop(mono, None)
            self._terms = clean
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, c: Number) -> LaurentPoly:
        return cls({(): c})

    @classmethod
    def var(cls, name: str, exponent: Number = 1, coeff: Number = 1) -> LaurentPoly:
        return cls({((name, exponent),): coeff})

    @classmethod
    def monomial(cls, coeff: Number = 1, **exponents: Number) -> LaurentPoly:
        return cls({tuple(exponents.items()): coeff})

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        if isinstance(x, str):
            return parse_poly(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, Number]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def variables(self) -> set[str]:
        return {v for mono in self._terms for v, _ in mono}

    def degrees(self, var: str) -> set[Number]:
        return {dict(mono).get(var, 0) for mono in self._terms}

    def constant(self) -> Number:
        return self._terms.get((), 0)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                del out[mono]
        return LaurentPoly(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({m: -c for m, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return LaurentPoly.coerce(other) + (-self)

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            other = _norm(other)
            return LaurentPoly({m: _norm(c * other) for m, c in self._terms.items()}, _trusted=True)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[Monomial, Number] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return LaurentPoly({m: _norm(c) for m, c in out.items()}, _trusted=True)

    __rmul__ = __mul__

    def inverse(self) -> LaurentPoly:
        """Inverse of a monomial; general polynomials are not invertible here."""
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self} is not an invertible monomial")
        (mono, c), = self._terms.items()
        return LaurentPoly({tuple((v, -e) for v, e in mono): _norm(Fraction(1) / c)}, _trusted=True)

    def __truediv__(self, other) -> LaurentPoly:
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return self * LaurentPoly.coerce(other).inverse()

    def __rtruediv__(self, other) -> LaurentPoly:
        return LaurentPoly.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> LaurentPoly:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # substitution / evaluation -----------------------------------------
    def substitute(self, var: str, image) -> LaurentPoly:
        """Replace ``var`` by ``image``.

        A signed monomial image (coefficient +1 or -1) accepts rational
        exponents; the sign must then only meet integral exponents.  Any other
        image requires integral exponents of ``var``.
        """
        image = LaurentPoly.coerce(image)
        if image.is_monomial():
            (img_mono, sign), = image._terms.items()
            if sign not in (1, -1):
                return self._substitute_general(var, image)
            out: dict[Monomial, Number] = {}
            for mono, c in self._terms.items():
                rest = tuple(p for p in mono if p[0] != var)
                e = dict(mono).get(var, 0)
                if e:
                    if sign == -1:
                        if Fraction(e).denominator != 1:
                            raise NonIntegerSignPower(f"(-1)^({e}) while substituting {var} -> {image}")
                        if int(e) % 2:
                            c = -c
                    scaled = tuple((v, _norm(x * e)) for v, x in img_mono)
                    rest = _mono_mul(rest, tuple(sorted(scaled)))
                s = out.get(rest, 0) + c
                if s:
                    out[rest] = s
                else:
                    del out[rest]
            return LaurentPoly(out, _trusted=True)
        return self._substitute_general(var, image)

    def _substitute_general(self, var: str, image: LaurentPoly) -> LaurentPoly:
        total = ZERO
        for mono, c in self._terms.items():
            e = dict(mono).get(var, 0)
            if Fraction(e).denominator != 1:
                raise ValueError(f"non-integral power {e} of {var} under non-monomial substitution")
            rest = LaurentPoly({tuple(p for p in mono if p[0] != var): c}, _trusted=True)
            total = total + rest * image ** int(e)
        return total

    def evaluate(self, assignment: Mapping[str, complex]) -> complex:
        total = 0j
        for mono, c in self._terms.items():
            term = complex(c)
            for v, e in mono:
                if v not in assignment:
                    raise ZeroAssignment(f"variable {v} is unassigned")
                z = complex(assignment[v])
                if z == 0:
                    raise ZeroAssignment(f"variable {v} assigned zero")
                term *= z ** float(e) if Fraction(e).denominator != 1 else z ** int(e)
            total += term
        return total

    # rendering ----------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Monomial, Number]]:
        names = sorted(self.variables())

        def key(item):
            d = dict(item[0])
            return tuple(d.get(v, 0) for v in names)

        return sorted(self._terms.items(), key=key, reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            factors = [f"{v}^{e}" for v, e in mono]
            if not factors:
                parts.append(_render_number(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(_render_number(c) + "*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


ZERO = LaurentPoly({}, _trusted=True)
ONE = LaurentPoly({(): 1}, _trusted=True)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at column {pos + 1}: {text!r}")
        out.append(m.group(m.lastgroup))
        pos = m.end()
    return out


def parse_poly(text: str) -> LaurentPoly:
    """Parse the canonical rendering (and mild variants such as ``y`` or ``2*y^-1/2``)."""
    toks = _tokenize(text)
    if not toks:
        raise ValueError("empty polynomial text")
    i = 0

    def peek():
        return toks[i] if i < len(toks) else None

    def exponent() -> Fraction:
        nonlocal i
        sign = 1
        while peek() in ("-", "+"):
            sign *= -1 if toks[i] == "-" else 1
            i += 1
        if peek() == "(":
            i += 1
            e = exponent()
            if peek() != ")":
                raise ValueError(f"unbalanced parenthesis in {text!r}")
            i += 1
            return sign * e
        tok = peek()
        if tok is None or not tok[0].isdigit():
            raise ValueError(f"expected exponent in {text!r}")
        i += 1
        return sign * Fraction(tok)

    def term() -> LaurentPoly:
        nonlocal i
        coeff: Number = 1
        mono: dict[str, Fraction] = {}
        first = True
        while True:
            tok = peek()
            if tok is None:
                break
            if tok[0].isdigit():
                coeff = coeff * Fraction(tok)
                i += 1
            elif tok[0].isalpha() or tok[0] == "_":
                i += 1
                e = Fraction(1)
                if peek() == "^":
                    i += 1
                    e = exponent()
                mono[tok] = mono.get(tok, 0) + e
            else:
                if first:
                    raise ValueError(f"unexpected {tok!r} in {text!r}")
                break
            first = False
            if peek() == "*":
                i += 1
                continue
            break
        return LaurentPoly({tuple(mono.items()): coeff})

    total = ZERO
    sign = 1
    expect_term = True
    while i < len(toks):
        tok = toks[i]
        if tok in ("+", "-"):
            if tok == "-":
                sign = -sign
            i += 1
            expect_term = True
            continue
        if not expect_term:
            raise ValueError(f"missing operator before {tok!r} in {text!r}")
        total = total + term() * sign
        sign = 1
        expect_term = False
    if expect_term:
        raise ValueError(f"dangling operator in {text!r}")
    return total


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return LaurentPoly.coerce(p) + q


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return LaurentPoly.coerce(p) * q


def lp_substitute(p: LaurentPoly, var: str, image) -> LaurentPoly:
    return LaurentPoly.coerce(p).substitute(var, image)


def lp_eval_complex(p: LaurentPoly, assignment: Mapping[str, complex]) -> complex:
    return LaurentPoly.coerce(p).evaluate(assignment)


def poly_sum(items: Iterable[LaurentPoly]) -> LaurentPoly:
    total = ZERO
    for p in items:
        total = total + p
    return total
