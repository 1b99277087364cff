from __future__ import annotations

import random

from mpoly import suites
from mpoly.polyring import MPoly


def test_random_poly_is_seeded():
    a = suites.random_poly(random.Random(5), 3)
    b = suites.random_poly(random.Random(5), 3)
    assert a == b and isinstance(a, MPoly)


def test_small_scope_all_pass():
    results = suites.run_all(max_modulus=2, max_vars=2, seed=3)
    assert [r.name for r in results] == list(suites.SUITES)
    for r in results:
        assert r.passed, (r.name, r.failures[:3])
        assert r.checks > 0


def test_failures_are_reported():
    res = suites.SuiteResult("x")
    res.check(True, "ok")
    res.check(False, "bad")
    assert not res.passed and res.failures == ["bad"] and res.checks == 2


def test_phi_q_exponent():
    assert suites.phi_q_exponent((0, 0)) == -1
    assert suites.phi_q_exponent((1, 0, 2)) == -1
    assert suites.phi_q_exponent((0, 1, 2)) == 0
