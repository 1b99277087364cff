"""Invariant suites run by ``mpoly verify``.

Each suite returns a :class:`SuiteResult`; a suite passes when every check
holds exactly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .coeff import ONE, Q, T as T_PARAM, RationalQT, monomial_qt, substitute
from .compositions import (
    compositions_of,
    delta_stat,
    partitions_of,
    raise_comp,
    spectral_vector,
    staircase,
    switch,
)
from .families import asym_mac, homogenize_to_E, sym_mac
from .generator import INTERPOLATION, NONSYMMETRIC, generate, generate_inverted
from .operators import H, T, T_inv, H_inv, phi_q, phi_q_star
from .pieri import pieri_row, reconstruct
from .polyring import MPoly, elementary_e, evaluate, swap_vars, t_vandermonde

SUITES = (
    "hecke-relations",
    "action-formulas",
    "vanishing",
    "homogenisation",
    "symmetrization",
    "pieri-reconstruction",
)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, label: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(label)


def _compositions(max_modulus, n):
    for d in range(max_modulus + 1):
        yield from compositions_of(d, n)


def random_coefficient(rng: random.Random) -> RationalQT:
    num = monomial_qt(rng.randint(0, 2), rng.randint(0, 2), rng.randint(-3, 3))
    num = num + rng.randint(-2, 2)
    if rng.random() < 0.3:
        den = monomial_qt(rng.randint(0, 1), rng.randint(0, 2)) - rng.randint(1, 2)
        if not den.is_zero():
            num = num / den
    return num


def random_poly(rng: random.Random, n: int, max_degree: int = 4, max_terms: int = 5) -> MPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        terms[tuple(e)] = random_coefficient(rng)
    return MPoly(n, terms)


def hecke_relations(samples: int = 50, max_vars: int = 4, max_degree: int = 4, seed: int = 0) -> SuiteResult:
    res = SuiteResult("hecke-relations")
    rng = random.Random(seed)
    if max_vars < 2:
        return res
    for k in range(samples):
        n = 2 + k % (max_vars - 1)  # every n in 2..max_vars is covered
        f = random_poly(rng, n, max_degree)
        for name, op, op_inv in (("T", T, T_inv), ("H", H, H_inv)):
            for i in range(1, n):
                g = op(f, i)
                res.check(op(g, i) - g.scale(T_PARAM - ONE) - f.scale(T_PARAM) == 0,
                          f"{name}: quadratic relation, sample {k}, i={i}")
                res.check(op_inv(g, i) == f, f"{name}: inverse, sample {k}, i={i}")
                if i + 1 <= n - 1:
                    lhs = op(op(op(f, i), i + 1), i)
                    rhs = op(op(op(f, i + 1), i), i + 1)
                    res.check(lhs == rhs, f"{name}: braid relation, sample {k}, i={i}")
                for j in range(i + 2, n):
                    res.check(op(op(f, j), i) == op(op(f, i), j), f"{name}: commutation, sample {k}, i={i}, j={j}")
    return res


def expected_switch_action(eta, i, family) -> MPoly:
    """Right-hand side of the T_i E_eta / H_i E*_eta action formula."""
    E = generate(eta, family)
    a, b = eta[i - 1], eta[i]
    if a == b:
        return E.scale(T_PARAM)
    delta = delta_stat(eta, i)
    c = (T_PARAM - ONE) / (ONE - delta.inverse())
    other = generate(switch(eta, i), family)
    if a < b:
        k = T_PARAM if family == NONSYMMETRIC else ONE
    elif family == NONSYMMETRIC:
        k = (ONE - T_PARAM * delta) * (ONE - delta / T_PARAM) / (ONE - delta) ** 2
    else:
        k = (ONE - T_PARAM * delta) * (T_PARAM - delta) / (ONE - delta) ** 2
    return E.scale(c) + other.scale(k)


def phi_q_exponent(eta) -> int:
    """Phi_q E_eta = t^k E_{Phi eta} with k = -#{i > 1 : eta_i <= eta_1}."""
    return -sum(1 for x in eta[1:] if x <= eta[0])


def action_formulas(max_modulus: int = 4, max_vars: int = 3) -> SuiteResult:
    res = SuiteResult("action-formulas")
    for n in range(1, max_vars + 1):
        for eta in _compositions(max_modulus, n):
            for i in range(1, n):
                lhs = T(generate(eta, NONSYMMETRIC), i)
                res.check(lhs == expected_switch_action(eta, i, NONSYMMETRIC), f"T_{i} E_{eta}")
                lhs = H(generate(eta, INTERPOLATION), i)
                res.check(lhs == expected_switch_action(eta, i, INTERPOLATION), f"H_{i} E*_{eta}")
            if sum(eta) + 1 > max_modulus:
                continue
            up = raise_comp(eta)
            lhs = phi_q(generate(eta, NONSYMMETRIC))
            rhs = generate(up, NONSYMMETRIC).scale(monomial_qt(0, phi_q_exponent(eta)))
            res.check(lhs == rhs, f"Phi_q E_{eta}")
            lhs = phi_q_star(generate(eta, INTERPOLATION))
            rhs = generate(up, INTERPOLATION).scale(monomial_qt(-eta[0], 0))
            res.check(lhs == rhs, f"Phi*_q E*_{eta}")
    return res


def vanishing(max_modulus: int = 3, max_vars: int = 3) -> SuiteResult:
    res = SuiteResult("vanishing")
    for n in range(1, max_vars + 1):
        comps = list(_compositions(max_modulus, n))
        for eta in comps:
            E = generate(eta, INTERPOLATION)
            for lam in comps:
                if sum(lam) > sum(eta):
                    continue
                value = evaluate(E, spectral_vector(lam))
                if lam == eta:
                    res.check(not value.is_zero(), f"E*_{eta} at its own spectral point")
                else:
                    res.check(value.is_zero(), f"E*_{eta} at the spectral point of {lam}")
    return res


def homogenisation(max_modulus: int = 4, max_vars: int = 3) -> SuiteResult:
    res = SuiteResult("homogenisation")
    for n in range(1, max_vars + 1):
        for eta in _compositions(max_modulus, n):
            res.check(homogenize_to_E(eta) == generate(eta, NONSYMMETRIC), f"top(E*_{eta}) inverted")
    return res


def symmetrization(max_modulus: int = 3, max_vars: int = 3) -> SuiteResult:
    res = SuiteResult("symmetrization")
    for n in range(2, max_vars + 1):
        vandermonde = t_vandermonde(n)
        delta = staircase(n)
        for d in range(max_modulus + 1):
            for kappa in partitions_of(d, n):
                P = sym_mac(kappa)
                res.check(all(swap_vars(P, i) == P for i in range(1, n)), f"P_{kappa} symmetric")
                shifted = P.map_coefficients(lambda c: substitute(c, t=Q * T_PARAM))
                S = asym_mac(tuple(a + b for a, b in zip(kappa, delta)))
                res.check(S == vandermonde * shifted, f"S_{kappa}+delta = Delta_t P_{kappa}(q, qt)")
    return res


def pieri_reconstruction(max_modulus: int = 3, max_vars: int = 3) -> SuiteResult:
    res = SuiteResult("pieri-reconstruction")
    for n in range(1, max_vars + 1):
        for eta in _compositions(max_modulus, n):
            for r in range(1, n + 1):
                row = pieri_row(eta, r)
                target = elementary_e(r, n) * generate_inverted(eta)
                res.check(all(sum(lam) == sum(eta) + r for lam in row), f"support of A^({r})_{eta}")
                res.check(reconstruct(row, n) == target, f"e_{r} E_{eta} reconstruction")
    return res


def run_all(max_modulus: int = 3, max_vars: int = 3, seed: int = 0) -> list[SuiteResult]:
    return [
        hecke_relations(max_vars=max(max_vars, 2), max_degree=max(max_modulus, 1), seed=seed),
        action_formulas(max_modulus, max_vars),
        vanishing(max_modulus, max_vars),
        homogenisation(max_modulus, max_vars),
        symmetrization(max_modulus, max_vars),
        pieri_reconstruction(max_modulus, max_vars),
    ]
