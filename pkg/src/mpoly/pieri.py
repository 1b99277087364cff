"""Pieri-type coefficients: expansion of e_r(z) E_eta(z; 1/q, 1/t) in the E(z; 1/q, 1/t) basis."""
from __future__ import annotations

from math import comb

from .coeff import ZERO, RationalQT
from .compositions import composition, modulus, partition_of
from .generator import generate_inverted
from .polyring import MPoly, elementary_e

ExpansionTable = dict


class ExpansionError(ArithmeticError):
    pass


def triangular_key(e):
    """Total order in which every E_lambda has z^lambda as its largest term.

    Compares the sorted partition first (lex refines dominance), then the
    composition itself (lex refines the Bruhat order on rearrangements).
    """
    return (sum(e), partition_of(e), e)


def expand_in_E(f: MPoly, degree: int | None = None, basis=generate_inverted) -> ExpansionTable:
    """Coefficients c_lambda with f = sum c_lambda basis(lambda), by peeling leading terms."""
    if f.is_zero():
        return {}
    if not f.is_homogeneous():
        raise ExpansionError("expand_in_E needs a homogeneous polynomial")
    d = f.degree()
    if degree is not None and d != degree:
        raise ExpansionError(f"polynomial has degree {d}, expected {degree}")
    bound = comb(d + f.n - 1, f.n - 1)
    table: ExpansionTable = {}
    rest = f
    for _ in range(bound):
        if rest.is_zero():
            return table
        lam = max(rest.terms, key=triangular_key)
        c = rest.terms[lam]
        table[lam] = c
        rest = rest - basis(lam).scale(c)
    if not rest.is_zero():
        raise ExpansionError("basis peeling failed")
    return table


def reconstruct(table: ExpansionTable, n: int, basis=generate_inverted) -> MPoly:
    out = MPoly(n, {})
    for lam, c in table.items():
        out = out + basis(lam).scale(c)
    return out


def pieri_row(eta, r: int) -> ExpansionTable:
    """All nonzero A^{(r)}_{eta, lambda}."""
    eta = composition(eta)
    n = len(eta)
    if not 1 <= r <= n:
        raise ValueError(f"r must lie in 1..{n}, got {r}")
    product = elementary_e(r, n) * generate_inverted(eta)
    return expand_in_E(product, modulus(eta) + r)


def pieri_coeff(eta, lam, r: int) -> RationalQT:
    eta = composition(eta)
    lam = composition(lam)
    if len(lam) != len(eta):
        raise ValueError("eta and lambda must have the same length")
    if modulus(lam) != modulus(eta) + r:
        raise ValueError(f"|lambda| = {modulus(lam)} but |eta| + r = {modulus(eta) + r}")
    return pieri_row(eta, r).get(lam, ZERO)
