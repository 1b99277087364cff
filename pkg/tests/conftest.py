from __future__ import annotations

import pytest
import sympy
from hypothesis import strategies as st

from mpoly import generator
from mpoly.coeff import RationalQT, intpoly_terms, monomial_qt
from mpoly.polyring import MPoly

q, t = sympy.symbols("q t")


def zs(n):
    return sympy.symbols(f"z1:{n + 1}")


def intpoly_to_sympy(p):
    return sum((c * q**i * t**j for (i, j), c in intpoly_terms(p).items()), sympy.Integer(0))


def coeff_to_sympy(c: RationalQT):
    return intpoly_to_sympy(c.num) / intpoly_to_sympy(c.den)


def poly_to_sympy(f: MPoly):
    z = zs(f.n)
    out = sympy.Integer(0)
    for e, c in f.terms.items():
        out += coeff_to_sympy(c) * sympy.Mul(*[v**k for v, k in zip(z, e)])
    return out


def sympy_equal(a, b) -> bool:
    return sympy.cancel(sympy.together(a - b)) == 0


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    """Keep the persistent cache out of the user's environment during tests."""
    monkeypatch.delenv(generator.CACHE_ENV, raising=False)
    generator.set_cache_dir(None)
    yield
    generator.set_cache_dir(None)


# -- hypothesis strategies ---------------------------------------------------------

small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def coefficients(draw, allow_zero=True):
    num = monomial_qt(draw(st.integers(0, 2)), draw(st.integers(0, 2)), draw(small_ints))
    num = num + draw(small_ints)
    if draw(st.booleans()):
        den = monomial_qt(draw(st.integers(0, 2)), draw(st.integers(0, 2))) - draw(st.integers(1, 3))
        if not den.is_zero():
            num = num / den
    if not allow_zero and num.is_zero():
        num = num + 1
    return num


@st.composite
def polynomials(draw, n=None, max_degree=3, max_terms=4):
    if n is None:
        n = draw(st.integers(2, 4))
    k = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(k):
        e = tuple(draw(st.lists(st.integers(0, max_degree), min_size=n, max_size=n)))
        terms[e] = draw(coefficients())
    return MPoly(n, terms)
