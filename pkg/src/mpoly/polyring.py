"""Sparse polynomials in z_1..z_n with coefficients in Q(q, t)."""
from __future__ import annotations

import json
from itertools import combinations, permutations

from .coeff import ONE, ZERO, T, RationalQT, as_coeff, parse, render, render_latex
from .compositions import act

Exponent = tuple


class PolynomialError(ArithmeticError):
    pass


def _grlex_key(e):
    return (sum(e), e)


class MPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, RationalQT):
                    c = as_coeff(c)
                if c.is_zero():
                    continue
                e = tuple(e)
                if len(e) != n:
                    raise ValueError(f"exponent {e} does not have {n} entries")
                clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict) -> MPoly:
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, c, n: int) -> MPoly:
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, exponent, c=ONE) -> MPoly:
        exponent = tuple(exponent)
        return cls(len(exponent), {exponent: c})

    @classmethod
    def var(cls, i: int, n: int) -> MPoly:
        """z_i (1-based)."""
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): ONE})

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coeff_of(self, e) -> RationalQT:
        return self.terms.get(tuple(e), ZERO)

    def degree(self) -> float:
        """Total degree; -inf for the zero polynomial."""
        if not self.terms:
            return float("-inf")
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self) -> list[tuple[Exponent, RationalQT]]:
        """Terms in graded-lex descending order."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def leading_exponent(self) -> Exponent:
        return max(self.terms, key=_grlex_key)

    def coefficients(self):
        return self.terms.values()

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: MPoly):
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other) -> MPoly:
        if not isinstance(other, MPoly):
            other = MPoly.constant(other, self.n)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return MPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> MPoly:
        if not isinstance(other, MPoly):
            other = MPoly.constant(other, self.n)
        return self + (-other)

    def __rsub__(self, other) -> MPoly:
        return (-self) + other

    def scale(self, c) -> MPoly:
        c = as_coeff(c)
        if c.is_zero():
            return MPoly._raw(self.n, {})
        if c.is_one():
            return self
        return MPoly._raw(self.n, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other) -> MPoly:
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                s = out.get(e)
                out[e] = v if s is None else s + v
        return MPoly._raw(self.n, {e: c for e, c in out.items() if not c.is_zero()})

    def __rmul__(self, other) -> MPoly:
        return self.scale(other)

    def __pow__(self, k: int) -> MPoly:
        out = MPoly.constant(ONE, self.n)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, e) -> MPoly:
        """Multiply by the monomial z^e."""
        return MPoly._raw(self.n, {tuple(a + b for a, b in zip(k, e)): c for k, c in self.terms.items()})

    def map_coefficients(self, func) -> MPoly:
        return MPoly(self.n, {e: func(c) for e, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            try:
                other = MPoly.constant(other, self.n)
            except TypeError:
                return False
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MPoly({self.n}, {to_text(self)!r})"

    def __str__(self) -> str:
        return to_text(self)


# -- variable permutations --------------------------------------------------------

def transpose_vars(f: MPoly, i: int, j: int) -> MPoly:
    """Exchange z_i and z_j."""
    a, b = i - 1, j - 1
    out = {}
    for e, c in f.terms.items():
        lst = list(e)
        lst[a], lst[b] = lst[b], lst[a]
        out[tuple(lst)] = c
    return MPoly._raw(f.n, out)


def swap_vars(f: MPoly, i: int) -> MPoly:
    """s_i f: exchange z_i and z_{i+1}."""
    if not 1 <= i <= f.n - 1:
        raise IndexError(f"switch index {i} out of range for {f.n} variables")
    return transpose_vars(f, i, i + 1)


def permute_vars(f: MPoly, w) -> MPoly:
    """Apply the permutation w to the variables, moving exponent k to position w(k)."""
    if sorted(w) != list(range(1, f.n + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{f.n}")
    return MPoly._raw(f.n, {act(w, e): c for e, c in f.terms.items()})


# -- division ---------------------------------------------------------------------

def exact_divide(f: MPoly, g: MPoly) -> MPoly:
    """Quotient h with f = g*h, raising :class:`PolynomialError` if g does not divide f."""
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead = g.leading_exponent()
    lead_c = g.terms[lead]
    rest = dict(f.terms)
    quotient = {}
    while rest:
        e = max(rest, key=_grlex_key)
        diff = tuple(a - b for a, b in zip(e, lead))
        if min(diff) < 0:
            raise PolynomialError("non-exact division")
        c = rest[e] / lead_c
        quotient[diff] = c
        for ge, gc in g.terms.items():
            k = tuple(a + b for a, b in zip(ge, diff))
            v = rest.get(k, ZERO) - c * gc
            if v.is_zero():
                rest.pop(k, None)
            else:
                rest[k] = v
    return MPoly._raw(f.n, quotient)


def divided_difference(f: MPoly, i: int) -> MPoly:
    """(s_i f - f) / (z_i - z_{i+1}) via the closed form on monomials."""
    a_idx, b_idx = i - 1, i
    out: dict = {}
    for e, c in f.terms.items():
        a, b = e[a_idx], e[b_idx]
        if a == b:
            continue
        if b > a:
            lo, hi, sign = a, b, c
        else:
            lo, hi, sign = b, a, -c
        lst = list(e)
        for k in range(hi - lo):
            lst[a_idx] = lo + k
            lst[b_idx] = hi - 1 - k
            key = tuple(lst)
            s = out.get(key)
            out[key] = sign if s is None else s + sign
    return MPoly._raw(f.n, {k: v for k, v in out.items() if not v.is_zero()})


# -- evaluation and degree filtering -----------------------------------------------

def evaluate(f: MPoly, point) -> RationalQT:
    point = [as_coeff(x) for x in point]
    if len(point) != f.n:
        raise ValueError(f"point has {len(point)} coordinates, expected {f.n}")
    powers = [{0: ONE} for _ in range(f.n)]

    def power(k, d):
        cache = powers[k]
        if d not in cache:
            cache[d] = power(k, d - 1) * point[k]
        return cache[d]

    total = ZERO
    for e, c in f.terms.items():
        v = c
        for k, d in enumerate(e):
            if d:
                v = v * power(k, d)
        total = total + v
    return total


def top_homogeneous(f: MPoly) -> MPoly:
    if f.is_zero():
        raise PolynomialError("top_homogeneous of the zero polynomial")
    d = f.degree()
    return MPoly._raw(f.n, {e: c for e, c in f.terms.items() if sum(e) == d})


def homogeneous_part(f: MPoly, d: int) -> MPoly:
    return MPoly._raw(f.n, {e: c for e, c in f.terms.items() if sum(e) == d})


# -- classical constructions -------------------------------------------------------

def monomial(eta) -> MPoly:
    """z^eta."""
    return MPoly.monomial(tuple(eta))


def elementary_e(r: int, n: int) -> MPoly:
    if not 0 <= r <= n:
        raise ValueError(f"e_{r} is not defined in {n} variables")
    terms = {}
    for subset in combinations(range(n), r):
        e = [0] * n
        for k in subset:
            e[k] = 1
        terms[tuple(e)] = ONE
    return MPoly._raw(n, terms)


def monomial_m(kappa, n: int | None = None) -> MPoly:
    """Monomial symmetric function m_kappa in n variables."""
    kappa = tuple(kappa)
    n = len(kappa) if n is None else n
    if len(kappa) > n:
        if any(kappa[n:]):
            raise ValueError(f"partition {kappa} has more than {n} nonzero parts")
        kappa = kappa[:n]
    kappa = kappa + (0,) * (n - len(kappa))
    if list(kappa) != sorted(kappa, reverse=True):
        raise ValueError(f"{kappa} is not a partition")
    return MPoly._raw(n, {e: ONE for e in set(permutations(kappa))})


def t_vandermonde(n: int) -> MPoly:
    """prod_{i<j} (z_i - z_j / t)."""
    out = MPoly.constant(ONE, n)
    inv_t = ONE / T
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (MPoly.var(i, n) - MPoly.var(j, n).scale(inv_t))
    return out


# -- serialisation -----------------------------------------------------------------

def _monomial_text(e) -> str:
    parts = []
    for k, d in enumerate(e, start=1):
        if d == 1:
            parts.append(f"z{k}")
        elif d > 1:
            parts.append(f"z{k}^{d}")
    return "*".join(parts)


def _is_negative_simple(c: RationalQT) -> bool:
    return len(c.num) == 1 and int(c.num.coeffs()[0]) < 0


def _coeff_factor(c: RationalQT) -> str:
    s = render(c)
    if len(c.num) > 1 or (not c.den.is_one() and not c.is_constant()) or "/" in s:
        return f"({s})"
    return s


def to_text(f: MPoly) -> str:
    """Render as e.g. ``z1^2*z2 + ((q*t - q)/(q*t - 1))*z1*z2^2``."""
    if f.is_zero():
        return "0"
    pieces = []
    for k, (e, c) in enumerate(f.sorted_terms()):
        negative = _is_negative_simple(c)
        mag = -c if negative else c
        mono = _monomial_text(e)
        if not mono:
            body = render(mag) if len(mag.num) == 1 or len(f.terms) == 1 else f"({render(mag)})"
        elif mag.is_one():
            body = mono
        else:
            body = f"{_coeff_factor(mag)}*{mono}"
        if k == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def to_latex(f: MPoly) -> str:
    if f.is_zero():
        return "0"
    pieces = []
    for k, (e, c) in enumerate(f.sorted_terms()):
        negative = _is_negative_simple(c)
        mag = -c if negative else c
        mono = " ".join(
            f"z_{{{i}}}" if d == 1 else f"z_{{{i}}}^{{{d}}}" for i, d in enumerate(e, start=1) if d
        )
        if not mono:
            body = render_latex(mag)
        elif mag.is_one():
            body = mono
        else:
            coeff = render_latex(mag)
            if len(mag.num) > 1 and mag.den.is_one():
                coeff = f"\\left({coeff}\\right)"
            body = f"{coeff} {mono}"
        sep = "-" if negative else "+"
        pieces.append(f"-{body}" if (k == 0 and negative) else body if k == 0 else f" {sep} {body}")
    return "".join(pieces)


def to_json_obj(f: MPoly) -> list[dict]:
    return [
        {"z": list(e), "coeff": {"num": render(RationalQT._raw(c.num, ONE.den)),
                                 "den": render(RationalQT._raw(c.den, ONE.den))}}
        for e, c in f.sorted_terms()
    ]


def to_json(f: MPoly) -> str:
    return json.dumps({"n": f.n, "terms": to_json_obj(f)})


def from_json_obj(obj, n: int | None = None) -> MPoly:
    if isinstance(obj, dict):
        n = obj.get("n", n)
        obj = obj["terms"]
    if n is None:
        if not obj:
            raise ValueError("cannot infer the variable count of an empty term list")
        n = len(obj[0]["z"])
    terms = {}
    for term in obj:
        e = tuple(int(x) for x in term["z"])
        c = parse(term["coeff"]["num"]) / parse(term["coeff"]["den"])
        if e in terms:
            raise ValueError(f"duplicate exponent {e}")
        terms[e] = c
    return MPoly(n, terms)


def from_json(s: str) -> MPoly:
    return from_json_obj(json.loads(s))
