"""Recursive generation of E_eta and E*_eta along a minimal operator word.

Each letter of the plan word moves the current pair (polynomial, composition)
one step: a switch letter ``i`` inverts the action of T_i (or H_i) on the
current polynomial, and the raising letter 0 applies Phi_q (or Phi*_q) and
rescales.  After every step the polynomial must be monic at z^comp; a
failure means a formula case is wrong and raises :class:`ConventionError`.
"""
from __future__ import annotations

import logging
import os
import tempfile
import threading
from dataclasses import dataclass
from pathlib import Path

from .coeff import ONE, T as T_PARAM, RationalQT, invert, monomial_qt
from .compositions import (
    apply_letter,
    composition,
    delta_stat,
    plan,
    plan_reduced,
)
from .operators import H, T, phi_q, phi_q_star
from .polyring import MPoly, from_json, to_json

log = logging.getLogger(__name__)

NONSYMMETRIC = "nonsymmetric"
INTERPOLATION = "interpolation"
FAMILIES = (NONSYMMETRIC, INTERPOLATION)

CACHE_ENV = "MPOLY_CACHE_DIR"


class ConventionError(AssertionError):
    """A generated polynomial is not monic at its label (formula-case bug)."""


@dataclass(frozen=True)
class GenState:
    poly: MPoly
    comp: tuple
    family: str = NONSYMMETRIC
    inverted: bool = False


def _check_family(family):
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _assert_monic(poly: MPoly, comp, family):
    c = poly.coeff_of(comp)
    if not c.is_one():
        raise ConventionError(
            f"convention violation: coefficient of z^{comp} in the {family} polynomial is {c}"
        )


def _switch(state: GenState, i: int) -> MPoly:
    eta = state.comp
    a, b = eta[i - 1], eta[i]
    if a == b:
        raise ValueError(f"switch s_{i} on equal parts of {eta} leaves the composition unchanged")
    delta = delta_stat(eta, i)
    c = (T_PARAM - ONE) / (ONE - delta.inverse())
    op = T if state.family == NONSYMMETRIC else H
    g = op(state.poly, i) - state.poly.scale(c)
    if a < b:
        return g.scale(ONE / T_PARAM) if state.family == NONSYMMETRIC else g
    if state.family == NONSYMMETRIC:
        factor = (ONE - delta) ** 2 / ((ONE - T_PARAM * delta) * (ONE - delta / T_PARAM))
    else:
        factor = (ONE - delta) ** 2 / ((ONE - T_PARAM * delta) * (T_PARAM - delta))
    return g.scale(factor)


def is_t_power(c: RationalQT) -> bool:
    """True when c = t^k for some integer k."""
    if not c.is_monomial():
        return False
    (nq, _), (dq, _) = c.num.monoms()[0], c.den.monoms()[0]
    return nq == 0 and dq == 0 and int(c.num.coeffs()[0]) == 1 and int(c.den.coeffs()[0]) == 1


def _raise(state: GenState) -> MPoly:
    eta = state.comp
    target = apply_letter(eta, 0)
    if state.family == INTERPOLATION:
        return phi_q_star(state.poly).scale(monomial_qt(eta[0], 0))
    g = phi_q(state.poly)
    lead = g.coeff_of(target)
    # Phi_q E_eta is a pure power of t times E_{Phi eta}
    if not is_t_power(lead):
        raise ConventionError(f"convention violation: Phi_q E_{eta} has leading coefficient {lead}")
    return g.scale(lead.inverse())


def step(state: GenState, letter: int) -> GenState:
    """One recursion step; ``letter`` 0 raises, ``i >= 1`` switches positions i, i+1."""
    if state.inverted:
        raise ValueError("steps run with the original parameters; invert afterwards")
    if letter == 0:
        poly = _raise(state)
    else:
        if not 1 <= letter <= len(state.comp) - 1:
            raise IndexError(f"switch index {letter} out of range")
        poly = _switch(state, letter)
    comp = apply_letter(state.comp, letter)
    _assert_monic(poly, comp, state.family)
    return GenState(poly, comp, state.family)


def run_word(word, family=NONSYMMETRIC, start: GenState | None = None, n: int | None = None,
             record=None) -> GenState:
    """Follow ``word`` from ``start`` (default: 1 at the zero composition)."""
    _check_family(family)
    if start is None:
        if n is None:
            raise ValueError("either a start state or the variable count is needed")
        start = GenState(MPoly.constant(ONE, n), (0,) * n, family)
    state = start
    for letter in word:
        state = step(state, letter)
        if record is not None:
            record(state)
    return state


# -- caching --------------------------------------------------------------------

class PolynomialCache:
    """One JSON file per polynomial, written atomically; absence is never an error."""

    def __init__(self, directory):
        self.directory = Path(directory)

    def path(self, family, eta, inverted=False) -> Path:
        label = "-".join(map(str, eta))
        suffix = ".inv" if inverted else ""
        return self.directory / f"{family}_{len(eta)}_{label}{suffix}.json"

    def get(self, family, eta, inverted=False) -> MPoly | None:
        p = self.path(family, eta, inverted)
        try:
            return from_json(p.read_text())
        except FileNotFoundError:
            return None
        except (OSError, ValueError, KeyError) as exc:
            log.warning("ignoring unreadable cache entry %s: %s", p, exc)
            return None

    def put(self, family, eta, poly: MPoly, inverted=False) -> None:
        p = self.path(family, eta, inverted)
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
            with os.fdopen(fd, "w") as fh:
                fh.write(to_json(poly))
            os.replace(tmp, p)
        except OSError as exc:
            log.warning("could not write cache entry %s: %s", p, exc)


_memory: dict = {}
_memory_lock = threading.Lock()
_disk: PolynomialCache | None = None
_disk_configured = False


def set_cache_dir(directory) -> None:
    """Use ``directory`` for the persistent cache (``None`` disables it)."""
    global _disk, _disk_configured
    _disk = PolynomialCache(directory) if directory else None
    _disk_configured = True


def _disk_cache() -> PolynomialCache | None:
    if _disk_configured:
        return _disk
    env = os.environ.get(CACHE_ENV)
    return PolynomialCache(env) if env else None


def clear_memory_cache() -> None:
    with _memory_lock:
        _memory.clear()


def _remember(family, eta, poly, inverted=False):
    with _memory_lock:
        _memory[(family, eta, inverted)] = poly


def _lookup(family, eta, inverted=False):
    poly = _memory.get((family, eta, inverted))
    if poly is not None:
        return poly
    disk = _disk_cache()
    if disk is not None:
        poly = disk.get(family, eta, inverted)
        if poly is not None:
            _remember(family, eta, poly, inverted)
    return poly


def generate(eta, family=NONSYMMETRIC, inverted=False, use_cache=True) -> MPoly:
    """E_eta (nonsymmetric) or E*_eta (interpolation) in len(eta) variables.

    The nonsymmetric family starts from (z_1...z_n)^m at (m, ..., m),
    m = min(eta); the interpolation family always runs the full plan.
    ``inverted`` applies q -> 1/q, t -> 1/t to every coefficient.
    """
    eta = composition(eta)
    _check_family(family)
    if use_cache:
        hit = _lookup(family, eta, inverted)
        if hit is not None:
            return hit
    if inverted:
        poly = generate(eta, family, use_cache=use_cache).map_coefficients(invert)
    else:
        poly = _generate(eta, family, use_cache)
    if use_cache:
        _remember(family, eta, poly, inverted)
        disk = _disk_cache()
        if disk is not None:
            disk.put(family, eta, poly, inverted)
    return poly


def _generate(eta, family, use_cache) -> MPoly:
    n = len(eta)
    p = plan_reduced(eta) if family == NONSYMMETRIC else plan(eta)
    if p.start == (0,) * n:
        start = GenState(MPoly.constant(ONE, n), p.start, family)
    else:
        start = GenState(MPoly.monomial(p.start), p.start, family)
    word = p.word
    if use_cache:
        # resume from the furthest intermediate state already known
        for k in range(len(word) - 1, 0, -1):
            hit = _memory.get((family, p.states[k], False))
            if hit is not None:
                start = GenState(hit, p.states[k], family)
                word = word[k:]
                break
    record = (lambda s: _remember(family, s.comp, s.poly)) if use_cache else None
    return run_word(word, family, start=start, record=record).poly


def generate_inverted(eta) -> MPoly:
    """E_eta(z; 1/q, 1/t)."""
    return generate(eta, NONSYMMETRIC, inverted=True)


def ns_mac(eta) -> MPoly:
    return generate(eta, NONSYMMETRIC)


def int_mac(eta) -> MPoly:
    return generate(eta, INTERPOLATION)
