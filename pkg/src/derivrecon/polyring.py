"""Homogeneous polynomials over Q.

Coefficients are :class:`fractions.Fraction`. A polynomial is a sparse map
from multi-index to nonzero coefficient. The zero polynomial carries a nominal
degree but compares equal to every other zero polynomial in the same ring.

Text format::

    poly   := ['-'] term (('+'|'-') term)*
    term   := [coeff '*'] factor ('*' factor)* | coeff
    coeff  := integer ['/' positive-integer]
    factor := 'x' index ['^' positive-integer]
"""

import re
from fractions import Fraction
from types import MappingProxyType

from .errors import (DegreeMismatch, NotHomogeneous, PolySyntaxError,
                     VariableMismatch, WrongVariable)
from .multiindex import enumerate_indices, unit

Rational = Fraction


def to_rational(value):
    """Coerce ints, Fractions and strings like ``"-3/4"`` to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {value!r} as an exact rational")


class HomPoly:
    """A homogeneous polynomial of degree ``d`` in variables x0..xn."""

    __slots__ = ("n", "d", "_coeffs", "_hash")

    def __init__(self, n, d, coeffs=None):
        if n < 0 or d < 0:
            raise ValueError("n and d must be nonnegative")
        self.n = n
        self.d = d
        clean = {}
        for I, c in (coeffs or {}).items():
            I = tuple(I)
            if len(I) != n + 1:
                raise VariableMismatch(f"monomial {I} does not have {n + 1} exponents")
            if sum(I) != d:
                raise NotHomogeneous(f"monomial {I} is not of degree {d}")
            c = to_rational(c)
            if c:
                clean[I] = c
        self._coeffs = clean
        self._hash = None

    @classmethod
    def zero(cls, n, d=0):
        return cls(n, d)

    @classmethod
    def monomial(cls, I, c=1):
        return cls(len(I) - 1, sum(I), {tuple(I): c})

    @classmethod
    def from_vector(cls, n, d, vec):
        """Inverse of :meth:`coeff_vector`."""
        basis = enumerate_indices(n, d)
        if len(vec) != len(basis):
            raise DegreeMismatch(f"vector of length {len(vec)} does not fit S_{n},{d}")
        return cls(n, d, dict(zip(basis, vec)))

    @property
    def coeffs(self):
        return MappingProxyType(self._coeffs)

    def is_zero(self):
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self.n == other.n and self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._coeffs.items())))
        return self._hash

    def __repr__(self):
        return f"HomPoly(n={self.n}, d={self.d}, {to_text(self)!r})"

    def __str__(self):
        return to_text(self)

    def coeff(self, I):
        return self._coeffs.get(tuple(I), Fraction(0))

    def terms(self):
        """(multi-index, coefficient) pairs in canonical order."""
        return sorted(self._coeffs.items(), reverse=True)

    def coeff_vector(self):
        return [self.coeff(I) for I in enumerate_indices(self.n, self.d)]

    def scale(self, c):
        c = to_rational(c)
        return HomPoly(self.n, self.d, {I: c * v for I, v in self._coeffs.items()})

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other):
        return add_scaled(self, 1, other)

    def __sub__(self, other):
        return add_scaled(self, -1, other)

    def __rmul__(self, c):
        return self.scale(c)

    def partial(self, j):
        """First partial derivative with respect to x_j."""
        out = {}
        for I, c in self._coeffs.items():
            if I[j]:
                J = I[:j] + (I[j] - 1,) + I[j + 1:]
                out[J] = c * I[j]
        return HomPoly(self.n, max(self.d - 1, 0), out)

    def times_var(self, j):
        e = unit(self.n, j)
        return HomPoly(self.n, self.d + 1,
                       {tuple(a + b for a, b in zip(I, e)): c
                        for I, c in self._coeffs.items()})

    def evaluate(self, point):
        if len(point) != self.n + 1:
            raise VariableMismatch(f"need {self.n + 1} coordinates, got {len(point)}")
        point = [to_rational(x) for x in point]
        total = Fraction(0)
        for I, c in self._coeffs.items():
            term = c
            for x, i in zip(point, I):
                term *= x ** i
            total += term
        return total


def add_scaled(f, c, g):
    """Return f + c*g."""
    if f.n != g.n:
        raise VariableMismatch(f"{f.n + 1} vs {g.n + 1} variables")
    if f.d != g.d and f and g:
        raise DegreeMismatch(f"degrees {f.d} and {g.d}")
    d = f.d if f else g.d
    c = to_rational(c)
    out = dict(f._coeffs)
    if c:
        for I, v in g._coeffs.items():
            out[I] = out.get(I, 0) + c * v
    return HomPoly(f.n, d, out)


def euler_lhs(h):
    """sum_p x_p * dh/dx_p, which equals deg(h) * h for homogeneous h."""
    total = HomPoly.zero(h.n, h.d)
    if h.d == 0:
        return total
    for p in range(h.n + 1):
        total = add_scaled(total, 1, h.partial(p).times_var(p))
    return total


def coeff_vector(f):
    return f.coeff_vector()


# -- text format -------------------------------------------------------------

def _format_monomial(I, var):
    parts = []
    for j, e in enumerate(I):
        if e == 1:
            parts.append(f"{var}{j}")
        elif e > 1:
            parts.append(f"{var}{j}^{e}")
    return "*".join(parts)


def to_text(f, var="x"):
    """Canonical text of ``f``; terms in canonical monomial order."""
    if not f:
        return "0"
    out = []
    for pos, (I, c) in enumerate(f.terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _format_monomial(I, var)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if pos == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[a-zA-Z])|(?P<op>[-+*/^]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise PolySyntaxError(f"unexpected character {text[bad]!r}", bad)
            break
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, n, var):
        self.toks = _tokenize(text)
        self.i = 0
        self.n = n
        self.var = var

    def peek(self):
        return self.toks[self.i]

    def take(self, kind, value=None):
        tok = self.toks[self.i]
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise PolySyntaxError(f"expected {want!r}, found {got!r}", tok[2])
        self.i += 1
        return tok

    def positive_int(self):
        tok = self.take("int")
        if int(tok[1]) == 0:
            raise PolySyntaxError("expected a positive integer", tok[2])
        return int(tok[1])

    def coeff(self):
        num = int(self.take("int")[1])
        if self.peek()[:2] == ("op", "/"):
            self.i += 1
            return Fraction(num, self.positive_int())
        return Fraction(num)

    def factor(self, expo):
        tok = self.take("var")
        if tok[1] != self.var:
            raise PolySyntaxError(f"unknown variable {tok[1]!r}", tok[2])
        idx_tok = self.peek()
        if idx_tok[0] != "int":
            raise PolySyntaxError("expected a variable index", idx_tok[2])
        self.i += 1
        j = int(idx_tok[1])
        if j > self.n:
            raise WrongVariable(f"{self.var}{j} at position {tok[2]} exceeds {self.var}{self.n}")
        power = 1
        if self.peek()[:2] == ("op", "^"):
            self.i += 1
            power = self.positive_int()
        expo[j] += power

    def term(self):
        start = self.peek()[2]
        expo = [0] * (self.n + 1)
        c = Fraction(1)
        if self.peek()[0] == "int":
            c = self.coeff()
            if self.peek()[:2] != ("op", "*"):
                return tuple(expo), c, start
            self.i += 1
        self.factor(expo)
        while self.peek()[:2] == ("op", "*"):
            self.i += 1
            self.factor(expo)
        return tuple(expo), c, start

    def poly(self):
        terms = []
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.i += 1
            sign = -1
        while True:
            I, c, start = self.term()
            terms.append((I, sign * c, start))
            tok = self.peek()
            if tok[0] == "end":
                break
            if tok[0] == "op" and tok[1] in "+-":
                self.i += 1
                sign = 1 if tok[1] == "+" else -1
                continue
            raise PolySyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return terms


def parse(text, n, d=None, var="x"):
    """Parse ``text`` as an element of S_{n,d}.

    ``d`` is inferred from the terms when omitted; it only matters for the
    zero polynomial, or as an extra check.
    """
    terms = _Parser(text, n, var).poly()
    degree = d
    coeffs = {}
    for I, c, start in terms:
        if c == 0 and not any(I):
            continue
        if degree is None:
            degree = sum(I)
        elif sum(I) != degree:
            raise NotHomogeneous(
                f"term at position {start} has degree {sum(I)}, expected {degree}")
        coeffs[I] = coeffs.get(I, 0) + c
    return HomPoly(n, degree or 0, coeffs)


def infer_n(text, var="x"):
    """Largest variable index appearing in ``text`` (0 if none)."""
    found = [int(m) for m in re.findall(rf"{var}\s*(\d+)", text)]
    return max(found, default=0)
