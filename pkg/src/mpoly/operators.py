"""Hecke-type operators on polynomials.

``T`` (Demazure-Lusztig) drives the nonsymmetric family and ``H`` the
interpolation family.  Both satisfy the type-A Hecke relations with
quadratic relation ``(X + 1)(X - t) = 0``.  Words and operator products act
rightmost letter first.
"""
from __future__ import annotations

from .coeff import ONE, T as T_PARAM, monomial_qt
from .compositions import compose, length, reduced_word, simple_transposition, subgroup_elements
from .polyring import MPoly, divided_difference

_INV_T = ONE / T_PARAM
_INV_T_MINUS_ONE = _INV_T - ONE
_MINUS_INV_T = -_INV_T


def _check_index(f: MPoly, i: int):
    if not 1 <= i <= f.n - 1:
        raise IndexError(f"operator index {i} out of range for {f.n} variables")


def _mul_linear(g: MPoly, i: int, a, b) -> MPoly:
    """(a z_i + b z_{i+1}) * g for scalars a, b."""
    out: dict = {}
    ia, ib = i - 1, i
    for e, c in g.terms.items():
        for pos, scalar in ((ia, a), (ib, b)):
            lst = list(e)
            lst[pos] += 1
            key = tuple(lst)
            v = c * scalar
            s = out.get(key)
            out[key] = v if s is None else s + v
    return MPoly._raw(g.n, {k: v for k, v in out.items() if not v.is_zero()})


def T(f: MPoly, i: int) -> MPoly:
    """T_i = t + (t z_i - z_{i+1}) / (z_i - z_{i+1}) (s_i - 1)."""
    _check_index(f, i)
    return f.scale(T_PARAM) + _mul_linear(divided_difference(f, i), i, T_PARAM, -ONE)


def H(f: MPoly, i: int) -> MPoly:
    """H_i = t + (z_i - t z_{i+1}) / (z_i - z_{i+1}) (s_i - 1)."""
    _check_index(f, i)
    return f.scale(T_PARAM) + _mul_linear(divided_difference(f, i), i, ONE, -T_PARAM)


def T_inv(f: MPoly, i: int) -> MPoly:
    """T_i^{-1} = t^{-1} - 1 + t^{-1} T_i."""
    return f.scale(_INV_T_MINUS_ONE) + T(f, i).scale(_INV_T)


def H_inv(f: MPoly, i: int) -> MPoly:
    return f.scale(_INV_T_MINUS_ONE) + H(f, i).scale(_INV_T)


def phi_q(f: MPoly) -> MPoly:
    """Phi_q = z_n T_{n-1}^{-1} ... T_1^{-1}."""
    for i in range(1, f.n):
        f = T_inv(f, i)
    e = [0] * f.n
    e[-1] = 1
    return f.shift(e)


def delta_shift(f: MPoly) -> MPoly:
    """f(z_n / q, z_1, ..., z_{n-1})."""
    out = {}
    for e, c in f.terms.items():
        key = e[1:] + (e[0],)
        out[key] = c * monomial_qt(-e[0], 0) if e[0] else c
    return MPoly._raw(f.n, out)


def phi_q_star(f: MPoly) -> MPoly:
    """Phi*_q = (z_n - t^{1-n}) Delta."""
    g = delta_shift(f)
    e = [0] * f.n
    e[-1] = 1
    return g.shift(e) - g.scale(monomial_qt(0, 1 - f.n))


def apply_word(f: MPoly, word, op=T) -> MPoly:
    """op_{i_1} ... op_{i_l} f, with i_l acting first."""
    for i in reversed(tuple(word)):
        f = op(f, i)
    return f


def T_word(f: MPoly, word) -> MPoly:
    return apply_word(f, word, T)


def H_word(f: MPoly, word) -> MPoly:
    return apply_word(f, word, H)


def T_omega(f: MPoly, w) -> MPoly:
    return T_word(f, reduced_word(w))


def H_omega(f: MPoly, w) -> MPoly:
    return H_word(f, reduced_word(w))


# -- prescribed-symmetry operators -----------------------------------------------

class BlockError(ValueError):
    pass


def check_blocks(I, J, n):
    I, J = set(I), set(J)
    for k in I | J:
        if not 1 <= k <= n - 1:
            raise IndexError(f"generator index {k} out of range for {n} variables")
    if I & J:
        raise BlockError("blocks must be separated: I and J overlap")
    if any(abs(i - j) < 2 for i in I for j in J):
        raise BlockError("blocks must be separated")
    return I, J


def _group_sum(f: MPoly, gens, op, weight) -> MPoly:
    """sum over w in <s_k : k in gens> of weight**l(w) * op_w f."""
    n = f.n
    images = {}
    total = MPoly._raw(n, {})
    for w in subgroup_elements(gens, n):
        word = reduced_word(w)
        if not word:
            g = f
        else:
            # op_w = op_{i_1} op_{w'} with w' = s_{i_1} w one step shorter
            shorter = compose(simple_transposition(n, word[0]), w)
            g = op(images[shorter], word[0])
        images[w] = g
        total = total + (g.scale(weight ** length(w)) if weight is not None else g)
    return total


def O_IJ(f: MPoly, I, J, op=T) -> MPoly:
    """sum_{w in W_{I u J}} (-1/t)^{l(w_J)} op_w f for separated blocks I, J."""
    I, J = check_blocks(I, J, f.n)
    g = _group_sum(f, J, op, _MINUS_INV_T) if J else f
    return _group_sum(g, I, op, None) if I else g


def O_star_IJ(f: MPoly, I, J) -> MPoly:
    return O_IJ(f, I, J, op=H)


__all__ = [
    "T", "H", "T_inv", "H_inv", "phi_q", "phi_q_star", "delta_shift",
    "T_word", "H_word", "T_omega", "H_omega", "apply_word", "O_IJ", "O_star_IJ", "BlockError",
]
