from __future__ import annotations

import json

import pytest
import sympy

from mpoly import generator
from mpoly.coeff import ONE
from mpoly.compositions import compositions_of, plan
from mpoly.generator import (
    INTERPOLATION,
    NONSYMMETRIC,
    ConventionError,
    GenState,
    PolynomialCache,
    generate,
    generate_inverted,
    is_t_power,
    run_word,
    step,
)
from mpoly.coeff import Q, T, invert
from mpoly.polyring import MPoly, to_text

from conftest import poly_to_sympy, q, sympy_equal, t, zs

z1, z2 = zs(2)

# transcribed by hand, independent of the generator
GOLDENS = {
    ((0, 3), NONSYMMETRIC): z2**3 + (t - 1) / (q**2 * t - 1) * z1**2 * z2 + (q + 1) * (t - 1) / (q**2 * t - 1) * z1 * z2**2,
    ((2, 1), NONSYMMETRIC): z1**2 * z2 + q * (t - 1) / (q * t - 1) * z1 * z2**2,
    ((1, 2), NONSYMMETRIC): z1 * z2**2,
    ((1, 1), INTERPOLATION): z1 * z2 - z1 / t - z2 / t + 1 / t**2,
    ((1, 0), INTERPOLATION): z1 + (t - 1) / (q * t - 1) * z2 - (q * t**2 - 1) / (t * (q * t - 1)),
    ((0, 1), INTERPOLATION): z2 - 1 / t,
}


@pytest.mark.parametrize("key", list(GOLDENS), ids=lambda k: f"{k[1]}-{k[0]}")
def test_goldens(key):
    eta, family = key
    assert sympy_equal(poly_to_sympy(generate(eta, family)), GOLDENS[key])


def test_trivial():
    assert generate((0, 0)) == MPoly.constant(ONE, 2)
    assert generate((0,), INTERPOLATION) == MPoly.constant(ONE, 1)
    assert generate((3,)) == MPoly.monomial((3,))


@pytest.mark.parametrize("family", [NONSYMMETRIC, INTERPOLATION])
def test_rearrangement_independence(family):
    long_word = [0, 2, 0, 2, 0, 2, 1, 2, 1]
    short_word = [0, 0, 1, 0, 2]
    a = run_word(long_word, family, n=3)
    b = run_word(short_word, family, n=3)
    assert a.comp == b.comp == (0, 2, 1)
    assert a.poly == b.poly == generate((0, 2, 1), family)


def test_reduced_start_agrees_with_full_plan():
    for d in range(1, 6):
        for eta in compositions_of(d, 2):
            full = run_word(plan(eta).word, NONSYMMETRIC, n=2).poly
            assert generate(eta, use_cache=False) == full
    for eta in [(1, 1, 2), (2, 1, 1), (2, 2, 1)]:
        assert generate(eta, use_cache=False) == run_word(plan(eta).word, NONSYMMETRIC, n=3).poly


def test_monic_and_degree():
    for eta in compositions_of(3, 3):
        E = generate(eta)
        Es = generate(eta, INTERPOLATION)
        assert E.coeff_of(eta) == ONE and E.is_homogeneous() and E.degree() == 3
        assert Es.coeff_of(eta) == ONE and Es.degree() == 3


def test_inverted():
    E = generate((2, 1))
    assert generate_inverted((2, 1)) == E.map_coefficients(invert)


def test_step_on_equal_parts():
    s = GenState(MPoly.constant(ONE, 2), (0, 0))
    with pytest.raises(ValueError):
        step(s, 1)
    with pytest.raises(IndexError):
        step(s, 3)


def test_is_t_power():
    assert is_t_power(T**-3) and is_t_power(ONE)
    assert not is_t_power(Q) and not is_t_power(2 * T) and not is_t_power(T + 1)


def test_convention_violation(monkeypatch):
    monkeypatch.setattr(generator, "_switch", lambda state, i: state.poly.scale(2))
    with pytest.raises(ConventionError):
        generate((1, 0), use_cache=False)


def test_disk_cache(tmp_path):
    generator.set_cache_dir(tmp_path)
    generator.clear_memory_cache()
    E = generate((1, 2, 0), INTERPOLATION)
    path = PolynomialCache(tmp_path).path(INTERPOLATION, (1, 2, 0))
    assert path.exists()
    assert json.loads(path.read_text())["n"] == 3
    generator.clear_memory_cache()
    assert generate((1, 2, 0), INTERPOLATION) == E
    # a corrupted entry is ignored and regenerated
    path.write_text("{not json")
    generator.clear_memory_cache()
    assert generate((1, 2, 0), INTERPOLATION) == E


def test_cache_env(tmp_path, monkeypatch):
    monkeypatch.setenv(generator.CACHE_ENV, str(tmp_path))
    generator._disk_configured = False
    generator.clear_memory_cache()
    generate((2, 0))
    assert any(p.name.startswith(NONSYMMETRIC) for p in tmp_path.iterdir())


def test_cache_intermediates_reused():
    generator.clear_memory_cache()
    generate((4, 1, 2, 1), INTERPOLATION)
    assert (INTERPOLATION, (1, 1, 2, 4), False) in generator._memory


def test_deterministic_rendering():
    assert to_text(generate((1, 0, 2))) == to_text(generate((1, 0, 2), use_cache=False))
