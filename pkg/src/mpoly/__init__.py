"""Exact computation of nonsymmetric and interpolation Macdonald polynomials."""
from __future__ import annotations

from .coeff import ONE, Q, T, ZERO, RationalQT, parse, render
from .compositions import GenerationPlan, plan, plan_reduced
from .families import (
    a_eta,
    asym_int_mac,
    asym_mac,
    hall_littlewood,
    homogenize_to_E,
    pre_sym_int_mac,
    pre_sym_mac,
    schur,
    sym_int_mac,
    sym_mac,
)
from .generator import ConventionError, generate, generate_inverted, int_mac, ns_mac
from .pieri import expand_in_E, pieri_coeff, pieri_row
from .polyring import MPoly, from_json, to_json, to_latex, to_text

__version__ = "0.1.0"
