"""Exact scalars: rationals and multivariate rational functions over Q.

A ScalarField with no parameters computes with gmpy2 rationals (falling
back to fractions.Fraction); with parameters it wraps a sympy fraction
field, whose elements are kept in canonical reduced form, so equality is
plain syntactic comparison.  Elements of either backend support the usual
arithmetic operators directly; code downstream never wraps them.
"""

from .errors import DenominatorVanishes, ParseError

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is normally available
    from fractions import Fraction as _mpq

from sympy import QQ as _QQ
from sympy.polys.fields import field as _sympy_field


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("num", text[i:j]))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", text[i:j]))
            i = j
        elif c in "+-*/^()":
            toks.append((c, c))
            i += 1
        else:
            raise ParseError("unexpected character %r in %r" % (c, text))
    toks.append(("end", ""))
    return toks


class _Parser:
    """Recursive descent for: rationals, parameter names, + - * / ( ),
    and ^ with (possibly negative) integer exponents."""

    def __init__(self, field, text):
        self.field = field
        self.toks = _tokenize(text)
        self.pos = 0
        self.text = text

    def peek(self):
        return self.toks[self.pos][0]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind):
        t = self.next()
        if t[0] != kind:
            raise ParseError("expected %r, got %r in %r" % (kind, t[1], self.text))
        return t

    def parse(self):
        v = self.expr()
        if self.peek() != "end":
            raise ParseError("trailing input in %r" % self.text)
        return v

    def expr(self):
        v = self.term()
        while self.peek() in "+-":
            op = self.next()[0]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.factor()
        while self.peek() in "*/":
            op = self.next()[0]
            w = self.factor()
            if op == "*":
                v = v * w
            else:
                if not w:
                    raise ParseError("division by zero in %r" % self.text)
                v = v / w
        return v

    def factor(self):
        sign = 1
        while self.peek() in "+-":
            if self.next()[0] == "-":
                sign = -sign
        v = self.power()
        return v if sign == 1 else -v

    def power(self):
        v = self.atom()
        if self.peek() == "^":
            self.next()
            esign = 1
            while self.peek() in "+-":
                if self.next()[0] == "-":
                    esign = -esign
            e = int(self.expect("num")[1])
            if esign < 0:
                if not v:
                    raise ParseError("zero to a negative power in %r" % self.text)
                v = self.field.one / v
            v = v ** e
        return v

    def atom(self):
        kind, val = self.next()
        if kind == "num":
            return self.field.rational(int(val))
        if kind == "name":
            return self.field.param(val)
        if kind == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError("unexpected token %r in %r" % (val, self.text))


class ScalarField:
    """Field of rational functions over Q in a declared parameter list.

    With an empty parameter list this is plain Q.  Elements are raw backend
    objects (gmpy2.mpq or sympy FracElement); they are immutable, hashable
    and canonical, so == is decidable syntactic comparison.
    """

    def __init__(self, params=()):
        if isinstance(params, str):
            params = tuple(s for s in params.replace(",", " ").split() if s)
        self.params = tuple(params)
        if self.params:
            self._field, *gens = _sympy_field(",".join(self.params), _QQ)
            self._gens = dict(zip(self.params, gens))
            self._ring_gens = dict(zip(self.params, self._field.ring.gens))
            self.zero = self._field.zero
            self.one = self._field.one
        else:
            self._field = None
            self._gens = {}
            self._ring_gens = {}
            self.zero = _mpq(0)
            self.one = _mpq(1)

    def __repr__(self):
        return "ScalarField(%r)" % (self.params,)

    def rational(self, num, den=1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if self._field is not None:
            return self._field.ground_new(_QQ(int(num), int(den)))
        return _mpq(num, den)

    def param(self, name):
        try:
            return self._gens[name]
        except KeyError:
            raise ParseError(
                "unknown parameter %r (declared: %s)"
                % (name, ", ".join(self.params) or "none")
            )

    def parse(self, text):
        return _Parser(self, text).parse()

    def is_zero(self, x):
        return not x

    def specialize(self, x, assignment=None):
        """Exact rational value of x at a parameter assignment.

        Raises DenominatorVanishes when the denominator vanishes at the
        point (in the element's reduced form).
        """
        if self._field is None:
            return x
        assignment = assignment or {}
        missing = [p for p in self.params if p not in assignment]
        if missing:
            raise ParseError("assignment misses parameters: %s" % ", ".join(missing))
        point = [(self._ring_gens[p], _QQ(assignment[p])) for p in self.params]
        den = x.denom.evaluate(point)
        if not den:
            raise DenominatorVanishes("denominator vanishes at %r" % (assignment,))
        num = x.numer.evaluate(point)
        return _mpq(num.numerator, num.denominator) / _mpq(den.numerator, den.denominator)

    def to_str(self, x):
        return str(x)


#: Shared parameterless field of exact rationals.
QQ = ScalarField()
