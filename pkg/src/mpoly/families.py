"""Families derived from E_eta and E*_eta.

Prescribed symmetry polynomials come from applying O_{I,J} (or O*_{I,J})
and normalising at z^{eta*}.  Symmetric and antisymmetric polynomials are
the special cases I = {1..n-1} and J = {1..n-1}; Hall-Littlewood and Schur
polynomials are specialisations q = 0 and t = q of the symmetric ones.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coeff import Q, RationalQT, invert, substitute
from .compositions import composition, is_partition
from .generator import INTERPOLATION, NONSYMMETRIC, generate
from .operators import H, T, O_IJ, check_blocks
from .polyring import MPoly, top_homogeneous

MACDONALD = NONSYMMETRIC


class SymmetrizationError(ArithmeticError):
    pass


@dataclass(frozen=True)
class PrescribedResult:
    normalization: RationalQT
    poly: MPoly
    eta_star: tuple


def _blocks(gens, n):
    """Maximal runs of consecutive generators as 0-based position slices."""
    out = []
    for k in sorted(gens):
        if out and out[-1][1] == k - 1:
            out[-1][1] = k
        else:
            out.append([k - 1, k])
    return [(a, b + 1) for a, b in out]


def eta_star(eta, I, J) -> tuple:
    """Rearrangement of eta, decreasing on I-blocks and strictly decreasing on J-blocks."""
    eta = list(eta)
    for gens, strict in ((I, False), (J, True)):
        for a, b in _blocks(gens, len(eta)):
            block = sorted(eta[a:b], reverse=True)
            if strict and len(set(block)) < len(block):
                raise SymmetrizationError(
                    "polynomial vanishes under this symmetrization (repeated parts in an antisymmetric block)"
                )
            eta[a:b] = block
    return tuple(eta)


def _family(family):
    if family in (MACDONALD, "macdonald"):
        return NONSYMMETRIC
    if family == INTERPOLATION:
        return INTERPOLATION
    raise ValueError(f"unknown family {family!r}")


def prescribed(eta, I, J, family=MACDONALD) -> PrescribedResult:
    """S^{(I,J)}_{eta*} with its normalisation a^{(I,J)}_eta."""
    eta = composition(eta)
    family = _family(family)
    I, J = check_blocks(I, J, len(eta))
    star = eta_star(eta, I, J)
    op = T if family == NONSYMMETRIC else H
    g = O_IJ(generate(eta, family), I, J, op=op)
    a = g.coeff_of(star)
    if a.is_zero():
        raise SymmetrizationError("polynomial vanishes under this symmetrization")
    return PrescribedResult(a, g.scale(a.inverse()), star)


def a_eta(eta, I, J, family=MACDONALD) -> RationalQT:
    return prescribed(eta, I, J, family).normalization


def pre_sym_mac(eta, I, J) -> MPoly:
    return prescribed(eta, I, J, MACDONALD).poly


def pre_sym_int_mac(eta, I, J) -> MPoly:
    return prescribed(eta, I, J, INTERPOLATION).poly


def _all_gens(n):
    return set(range(1, n))


def _require_partition(kappa, strict=False):
    kappa = composition(kappa)
    if not is_partition(kappa):
        raise ValueError(f"{kappa} is not a partition")
    if strict and len(set(kappa)) < len(kappa):
        raise ValueError(f"{kappa} is not a strict partition")
    return kappa


def sym_mac(kappa, family=MACDONALD) -> MPoly:
    """P_kappa(z; q, t) (or its interpolation analogue)."""
    kappa = _require_partition(kappa)
    return prescribed(kappa, _all_gens(len(kappa)), set(), family).poly


def asym_mac(kappa, family=MACDONALD) -> MPoly:
    """S_kappa(z; q, t) for a strict partition kappa."""
    kappa = _require_partition(kappa, strict=True)
    return prescribed(kappa, set(), _all_gens(len(kappa)), family).poly


def sym_int_mac(kappa) -> MPoly:
    return sym_mac(kappa, INTERPOLATION)


def asym_int_mac(kappa) -> MPoly:
    return asym_mac(kappa, INTERPOLATION)


def hall_littlewood(kappa) -> MPoly:
    """P_kappa(z; t): the q = 0 specialisation of P_kappa(z; q, t)."""
    return sym_mac(kappa).map_coefficients(lambda c: substitute(c, q=0))


def schur(kappa) -> MPoly:
    """s_kappa(z): the t = q specialisation of P_kappa(z; q, t)."""
    out = sym_mac(kappa).map_coefficients(lambda c: substitute(c, t=Q))
    for c in out.coefficients():
        if not c.is_constant():
            raise ArithmeticError(f"t = q specialisation left a parameter-dependent coefficient {c}")
    return out


def homogenize_to_E(eta) -> MPoly:
    """Top-degree part of E*_eta with q -> 1/q, t -> 1/t; equals E_eta(z; q, t)."""
    return top_homogeneous(generate(eta, INTERPOLATION)).map_coefficients(invert)
