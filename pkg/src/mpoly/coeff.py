"""Exact arithmetic in the rational function field Q(q, t).

Numerators and denominators are integer polynomials in ``q`` and ``t``
(``flint.fmpz_mpoly`` in a graded-lex context with q > t).  A
:class:`RationalQT` is always stored in canonical form: coprime numerator
and denominator, denominator with positive leading coefficient, and zero
stored as ``0/1``.  Canonical forms compare component-wise, so equality and
hashing are exact.
"""
from __future__ import annotations

import re
from functools import lru_cache

import flint

CTX = flint.fmpz_mpoly_ctx.get(("q", "t"), "deglex")
_Q, _T = CTX.gens()
_ONE = CTX.constant(1)
_ZERO = CTX.constant(0)

IntPolyQT = flint.fmpz_mpoly


class CoefficientError(ArithmeticError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def intpoly(terms: dict[tuple[int, int], int]) -> IntPolyQT:
    """Build an integer polynomial from ``{(a, b): c}`` meaning ``c q^a t^b``."""
    for (a, b) in terms:
        if a < 0 or b < 0:
            raise ValueError("negative powers of q, t are not polynomial")
    return CTX.from_dict({k: int(c) for k, c in terms.items() if c})


def intpoly_terms(p: IntPolyQT) -> dict[tuple[int, int], int]:
    return {tuple(m): int(c) for m, c in zip(p.monoms(), p.coeffs())}


def _as_intpoly(x) -> IntPolyQT:
    if isinstance(x, flint.fmpz_mpoly):
        return x
    if isinstance(x, int):
        return CTX.constant(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as an integer polynomial")


class RationalQT:
    """An element of Q(q, t) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = _as_intpoly(num)
        den = _as_intpoly(den)
        if den.is_zero():
            raise ZeroDivisionError("division by zero in Q(q,t)")
        if num.is_zero():
            num, den = _ZERO, _ONE
        else:
            g = num.gcd(den)
            if not g.is_one():
                num = num / g
                den = den / g
            if den.leading_coefficient() < 0:
                num, den = -num, -den
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: IntPolyQT, den: IntPolyQT) -> RationalQT:
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        """True when the value does not depend on q or t."""
        return self.num.is_constant() and self.den.is_constant()

    def is_monomial(self) -> bool:
        """True for +/- c q^a t^b with a, b possibly negative."""
        return len(self.num) == 1 and len(self.den) == 1

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> RationalQT:
        return RationalQT._raw(-self.num, self.den)

    def __add__(self, other) -> RationalQT:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero():
            return other
        if c.is_zero():
            return self
        if b == d:
            n = a + c
            if n.is_zero():
                return ZERO
            if b.is_one():
                return RationalQT._raw(n, b)
            g = n.gcd(b)
            if g.is_one():
                return RationalQT._raw(n, b)
            return RationalQT._raw(n / g, b / g)
        g = b.gcd(d)
        if g.is_one():
            return RationalQT._raw(a * d + c * b, b * d)
        b1 = b / g
        d1 = d / g
        n = a * d1 + c * b1
        if n.is_zero():
            return ZERO
        h = n.gcd(g)
        if not h.is_one():
            n = n / h
            g = g / h
        return RationalQT._raw(n, b1 * d1 * g)

    __radd__ = __add__

    def __sub__(self, other) -> RationalQT:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> RationalQT:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> RationalQT:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return ZERO
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if not g1.is_one():
            a = a / g1
            d = d / g1
        if not g2.is_one():
            c = c / g2
            b = b / g2
        return RationalQT._raw(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> RationalQT:
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero in Q(q,t)")
        if self.num.leading_coefficient() < 0:
            return RationalQT._raw(-self.den, -self.num)
        return RationalQT._raw(self.den, self.num)

    def __truediv__(self, other) -> RationalQT:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> RationalQT:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int) -> RationalQT:
        if k < 0:
            return self.inverse() ** (-k)
        return RationalQT._raw(self.num**k, self.den**k)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((tuple(map(tuple, self.num.monoms())), tuple(map(int, self.num.coeffs())),
                               tuple(map(tuple, self.den.monoms())), tuple(map(int, self.den.coeffs()))))
        return self._hash

    def __repr__(self) -> str:
        return f"RationalQT({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


def _coerce(x):
    if isinstance(x, RationalQT):
        return x
    if isinstance(x, int):
        return RationalQT._raw(CTX.constant(x), _ONE)
    if isinstance(x, flint.fmpz_mpoly):
        return RationalQT._raw(x, _ONE)
    return NotImplemented


ZERO = RationalQT._raw(_ZERO, _ONE)
ONE = RationalQT._raw(_ONE, _ONE)
Q = RationalQT._raw(_Q, _ONE)
T = RationalQT._raw(_T, _ONE)


def reduce(num, den) -> RationalQT:
    """Canonical representative of ``num/den``."""
    return RationalQT(num, den)


def as_coeff(x) -> RationalQT:
    c = _coerce(x)
    if c is NotImplemented:
        raise TypeError(f"cannot interpret {type(x).__name__} as an element of Q(q,t)")
    return c


@lru_cache(maxsize=None)
def monomial_qt(a: int, b: int, c: int = 1) -> RationalQT:
    """``c q^a t^b`` for integer (possibly negative) exponents."""
    num = {(max(a, 0), max(b, 0)): c}
    den = {(max(-a, 0), max(-b, 0)): 1}
    return RationalQT._raw(CTX.from_dict(num), CTX.from_dict(den))


# -- substitution ---------------------------------------------------------------

def _degrees(p: IntPolyQT) -> tuple[int, int]:
    if p.is_zero():
        return (0, 0)
    dq, dt = p.degrees()
    return (dq, dt)


def invert(a: RationalQT) -> RationalQT:
    """Apply q -> 1/q and t -> 1/t simultaneously."""
    if a.num.is_zero():
        return a
    nq, nt = _degrees(a.num)
    mq, mt = _degrees(a.den)
    dq, dt = max(nq, mq), max(nt, mt)

    def flip(p):
        return CTX.from_dict({(dq - i, dt - j): c for (i, j), c in zip(p.monoms(), p.coeffs())})

    return RationalQT(flip(a.num), flip(a.den))


def _eval_poly(p: IntPolyQT, qv: RationalQT, tv: RationalQT, dq: int, dt: int) -> IntPolyQT:
    # p(qv, tv) * qv.den^dq * tv.den^dt, kept polynomial
    qn = [_ONE]
    qd = [_ONE]
    tn = [_ONE]
    td = [_ONE]
    for _ in range(dq):
        qn.append(qn[-1] * qv.num)
        qd.append(qd[-1] * qv.den)
    for _ in range(dt):
        tn.append(tn[-1] * tv.num)
        td.append(td[-1] * tv.den)
    out = _ZERO
    for (i, j), c in zip(p.monoms(), p.coeffs()):
        out += c * qn[i] * qd[dq - i] * tn[j] * td[dt - j]
    return out


def substitute(a: RationalQT, q=None, t=None) -> RationalQT:
    """Substitute values from Q(q, t) (or integers) for ``q`` and/or ``t``.

    ``q`` and ``t`` are replaced simultaneously; omitted parameters are left
    alone.  Raises :class:`CoefficientError` when the denominator vanishes.
    """
    qv = Q if q is None else as_coeff(q)
    tv = T if t is None else as_coeff(t)
    if a.num.is_zero():
        return a
    nq, nt = _degrees(a.num)
    mq, mt = _degrees(a.den)
    dq, dt = max(nq, mq), max(nt, mt)
    num = _eval_poly(a.num, qv, tv, dq, dt)
    den = _eval_poly(a.den, qv, tv, dq, dt)
    if den.is_zero():
        raise CoefficientError("singular specialization")
    return RationalQT(num, den)


# -- rendering and parsing -----------------------------------------------------

def _monomial_str(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("q" if i == 1 else f"q^{i}")
    if j:
        parts.append("t" if j == 1 else f"t^{j}")
    return "*".join(parts)


def render_intpoly(p: IntPolyQT) -> str:
    if p.is_zero():
        return "0"
    out = []
    for k, ((i, j), c) in enumerate(zip(p.monoms(), p.coeffs())):
        c = int(c)
        mono = _monomial_str(i, j)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if k == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


def render(a: RationalQT) -> str:
    """Canonical text form, e.g. ``(q*t - q + t - 1)/(q^2*t - 1)``."""
    num = render_intpoly(a.num)
    if a.den.is_one():
        return num
    den = render_intpoly(a.den)
    if len(a.num) > 1:
        num = f"({num})"
    if len(a.den) > 1 or (len(a.den) == 1 and int(a.den.coeffs()[0]) != 1 and not a.den.is_constant()):
        den = f"({den})"
    return f"{num}/{den}"


def render_latex_intpoly(p: IntPolyQT) -> str:
    return re.sub(r"\^(\d+)", r"^{\1}", render_intpoly(p)).replace("*", " ")


def render_latex(a: RationalQT) -> str:
    num = render_latex_intpoly(a.num)
    if a.den.is_one():
        return num
    return rf"\frac{{{num}}}{{{render_latex_intpoly(a.den)}}}"


_TOKEN = re.compile(r"(\d+)|([qt])|(\*\*|[-+*/^()])")


def _tokenize(s: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(s, pos)
        if not m:
            raise ParseError(f"unexpected character {s[pos]!r}", pos)
        if m.group(1):
            tokens.append(("int", m.group(1), pos))
        elif m.group(2):
            tokens.append(("sym", m.group(2), pos))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, pos))
        pos = m.end()
    tokens.append(("end", "", len(s)))
    return tokens


class _Parser:
    # expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)*
    # unary := '-' unary | power ; power := atom ('^' int)?
    def __init__(self, s: str):
        self.tokens = _tokenize(s)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value or tok[0] == "end":
            raise ParseError(f"expected {value!r}", tok[2])
        return tok

    def parse(self) -> RationalQT:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            _, op, pos = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero in Q(q,t)", pos)
                value = value / rhs
        return value

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise ParseError("exponent must be a non-negative integer", tok[2])
            base = base ** int(tok[1])
        return base

    def atom(self):
        kind, value, pos = self.take()
        if kind == "int":
            return RationalQT(int(value))
        if kind == "sym":
            return Q if value == "q" else T
        if (kind, value) == ("op", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {value!r}" if value else "unexpected end of input", pos)


def parse(s: str) -> RationalQT:
    """Parse a coefficient string in the grammar emitted by :func:`render`."""
    return _Parser(s).parse()
