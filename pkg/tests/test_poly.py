"""Polynomial layer checked against sympy."""

import random
from fractions import Fraction

import pytest
import sympy

from poishom.poly import (
    AmbientMismatch,
    Multidegree,
    Polynomial,
    VarSet,
    trace_pairing,
)


def to_sympy(poly, syms):
    expr = sympy.Integer(0)
    for exps, coef in poly.terms.items():
        term = sympy.Rational(coef.numerator, coef.denominator)
        for s, e in zip(syms, exps):
            term *= s**e
        expr += term
    return sympy.expand(expr)


def random_poly(rng, vs, terms=4, max_exp=3):
    out = Polynomial.zero(vs)
    for _ in range(terms):
        exps = tuple(rng.randrange(max_exp + 1) for _ in range(vs.num_vars))
        out = out + Polynomial.monomial(vs, exps, Fraction(rng.randrange(-5, 6), rng.randrange(1, 4)))
    return out


def test_arithmetic_matches_sympy():
    rng = random.Random(11)
    vs = VarSet("cotangent", 3)
    syms = sympy.symbols(" ".join(vs.name(i) for i in range(vs.num_vars)))
    for _ in range(25):
        f = random_poly(rng, vs)
        g = random_poly(rng, vs)
        assert to_sympy(f * g, syms) == sympy.expand(to_sympy(f, syms) * to_sympy(g, syms))
        assert to_sympy(f + g, syms) == to_sympy(f, syms) + to_sympy(g, syms)
        assert to_sympy(f - g, syms) == to_sympy(f, syms) - to_sympy(g, syms)
        i = rng.randrange(vs.num_vars)
        assert to_sympy(f.diff(i), syms) == sympy.diff(to_sympy(f, syms), syms[i])


def test_power_and_scalar_coercion():
    vs = VarSet("plain", 2)
    x = Polynomial.variable(vs, 0)
    y = Polynomial.variable(vs, 1)
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert 3 * x == x * 3
    assert (1 - x) + (x - 1) == Polynomial.zero(vs)
    assert x ** 0 == Polynomial.one(vs)


def test_cotangent_names_and_partners():
    vs = VarSet("cotangent", 2)
    assert [vs.name(i) for i in range(4)] == ["z1", "z2", "xi1", "xi2"]
    assert vs.partner(0) == 2 and vs.partner(3) == 1
    assert vs.paired
    sb = VarSet("schubert", 2)
    assert [sb.name(i) for i in range(4)] == ["z1", "z2", "zb1", "zb2"]
    plain = VarSet("plain", 3)
    assert not plain.paired
    with pytest.raises(AmbientMismatch):
        plain.partner(0)


def test_weights_ascend_on_cotangent_and_reverse_on_cell():
    """Variable i weighs i+1 per half; the cell ambient counts down instead."""
    cot = VarSet("cotangent", 3)
    assert [cot.weight(i) for i in range(6)] == [1, 2, 3, 1, 2, 3]
    cell = VarSet("schubert", 3)
    assert [cell.weight(i) for i in range(6)] == [3, 2, 1, 3, 2, 1]


def test_multidegree_weight_uses_varset_convention():
    md = Multidegree((1, 0), (0, 1))
    assert md.weight() == 1 + 2
    assert md.weight(VarSet("cotangent", 2)) == 3
    assert md.weight(VarSet("schubert", 2)) == 2 + 1
    plain = Multidegree((2, 1, 0), ())
    assert plain.weight(VarSet("plain", 3)) == 2 * 1 + 1 * 2


def test_multidegree_counts_and_balanced():
    md = Multidegree((1, 2), (2, 1))
    assert md.counts == (1, 2, 2, 1)
    assert md.total_m() == 3 and md.total_l() == 3
    assert md.balanced()
    assert not Multidegree((1, 0), (0, 0)).balanced()


def test_trace_pairing_and_balance():
    vs = VarSet("cotangent", 2)
    h = trace_pairing(vs)
    assert len(h.terms) == 2
    assert h.is_balanced()
    assert (h * h).is_balanced()
    z0 = Polynomial.variable(vs, 0)
    assert not (h + z0).is_balanced()
    with pytest.raises(AmbientMismatch):
        trace_pairing(VarSet("plain", 2))


def test_divide_by_variable():
    vs = VarSet("cotangent", 2)
    z0 = Polynomial.variable(vs, 0)
    xi1 = Polynomial.variable(vs, 3)
    f = z0 * z0 * xi1 + 2 * z0 * xi1
    assert f.divide_by_variable(0) == z0 * xi1 + 2 * xi1
    assert f.divide_by_variable(3) == z0 * z0 + 2 * z0
    assert f.divide_by_variable(1) is None


def test_bidegree_parts_recombine():
    rng = random.Random(3)
    vs = VarSet("cotangent", 2)
    f = random_poly(rng, vs, terms=6)
    parts = f.bidegree_parts()
    total = Polynomial.zero(vs)
    for (p, q), part in parts.items():
        for exps in part.terms:
            assert sum(exps[:2]) == p and sum(exps[2:]) == q
        total = total + part
    assert total == f


def test_mixed_varsets_rejected():
    a = Polynomial.variable(VarSet("cotangent", 2), 0)
    b = Polynomial.variable(VarSet("plain", 2), 0)
    with pytest.raises(AmbientMismatch):
        a + b
