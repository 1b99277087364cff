from __future__ import annotations

import pytest
import sympy

from mpoly.coeff import ONE, Q, T
from mpoly.compositions import partitions_of
from mpoly.families import (
    SymmetrizationError,
    a_eta,
    asym_int_mac,
    asym_mac,
    eta_star,
    hall_littlewood,
    homogenize_to_E,
    pre_sym_int_mac,
    pre_sym_mac,
    prescribed,
    schur,
    sym_int_mac,
    sym_mac,
)
from mpoly.generator import INTERPOLATION, generate
from mpoly.operators import H, T as T_op
from mpoly.polyring import MPoly, swap_vars

from conftest import poly_to_sympy, q, sympy_equal, t, zs
from oracles import hall_littlewood_symmetrization, ssyt_schur


def _printed():
    x1, x2 = zs(2)
    y1, y2, y3 = zs(3)
    return [
        (sym_int_mac, (1, 0), (t * (x1 + x2) - t - 1) / t),
        (asym_int_mac, (2, 0), (x1 - t * x2) * (t * (x1 + x2) - q * t - 1) / t),
        (sym_int_mac, (1, 1), (t * x1 - 1) * (t * x2 - 1) / t**2),
        (asym_int_mac, (2, 1), (x1 - t * x2) * (t * x1 - 1) * (t * x2 - 1) / t**2),
        (sym_int_mac, (1, 0, 0), (t**2 * (y1 + y2 + y3) - t**2 - t - 1) / t**2),
        (asym_int_mac, (3, 1, 0),
         (y1 - t * y2) * (y1 - t * y3) * (y2 - t * y3) * (t**2 * (y1 + y2 + y3) - q * t * (q * t + 1) - 1) / t**2),
    ]


@pytest.mark.parametrize("func,kappa,expected", _printed(),
                         ids=[f"{f.__name__}-{k}" for f, k, _ in _printed()])
def test_printed_interpolation_outputs(func, kappa, expected):
    assert sympy_equal(poly_to_sympy(func(kappa)), expected)


def test_eta_star():
    assert eta_star((0, 1, 2, 0, 1), {1}, {3, 4}) == (1, 0, 2, 1, 0)
    with pytest.raises(SymmetrizationError):
        eta_star((1, 1, 0), set(), {1, 2})


def test_prescribed_normalisation_and_symmetry():
    res = prescribed((0, 1, 2, 0, 1), {1}, {3, 4})
    assert res.eta_star == (1, 0, 2, 1, 0)
    assert res.poly.coeff_of(res.eta_star) == ONE
    f = res.poly
    assert T_op(f, 1) == f.scale(T)
    assert T_op(f, 3) == -f and T_op(f, 4) == -f
    assert res.normalization == a_eta((0, 1, 2, 0, 1), {1}, {3, 4})
    assert pre_sym_mac((0, 1, 2, 0, 1), {1}, {3, 4}) == f


def test_prescribed_interpolation():
    f = pre_sym_int_mac((0, 2, 1), {2}, set())
    assert H(f, 2) == f.scale(T)
    assert f.coeff_of((0, 2, 1)) == ONE


def test_symmetric_is_independent_of_start():
    P = sym_mac((2, 1, 0))
    for eta in [(0, 1, 2), (1, 0, 2), (2, 0, 1)]:
        assert prescribed(eta, {1, 2}, set()).poly == P


def test_symmetric_and_antisymmetric():
    P = sym_mac((2, 1, 0))
    assert all(swap_vars(P, i) == P for i in (1, 2))
    S = asym_mac((2, 1, 0))
    assert all(T_op(S, i) == -S for i in (1, 2))
    with pytest.raises(ValueError):
        sym_mac((0, 1))
    with pytest.raises(ValueError):
        asym_mac((1, 1))


def test_homogenisation_hand_case():
    # top(E*_(1,0)) = z1 + (t-1)/(qt-1) z2; inverting gives (1/t-1)/(1/(qt)-1) = q(t-1)/(qt-1)
    assert homogenize_to_E((1, 0)) == generate((1, 0))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_schur_matches_ssyt(n):
    for d in range(5):
        for kappa in partitions_of(d, n):
            s = schur(kappa)
            assert {e: c for e, c in s.terms.items()} == {e: ONE * c for e, c in ssyt_schur(kappa, n).items()}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hall_littlewood_matches_symmetrization(n):
    for d in range(5):
        for kappa in partitions_of(d, n):
            assert sympy_equal(poly_to_sympy(hall_littlewood(kappa)), hall_littlewood_symmetrization(kappa, n))


def test_known_small_cases():
    z1, z2 = MPoly.var(1, 2), MPoly.var(2, 2)
    assert schur((2, 1)) == z1**2 * z2 + z1 * z2**2
    assert hall_littlewood((2, 0)) == z1**2 + (z1 * z2).scale(1 - T) + z2**2
    assert sym_mac((1, 0)) == z1 + z2
