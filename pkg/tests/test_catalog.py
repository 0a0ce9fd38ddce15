"""Named structures: parsing, weight profiles, squares, eigenforms, lifts."""

import random
from fractions import Fraction

import pytest

from poishom.catalog import (
    HomogenizationMap,
    OneFormBasis,
    StructureId,
    build_structure,
    chevalley_triples,
    cotangent_lift_field,
    euler_field,
    gl_field,
    moment_map,
    recursion_operator,
    scalar_multiple_of_trace_differential,
    weight_split,
)
from poishom.forms import schouten_bracket, vector_apply
from poishom.poly import Polynomial, VarSet, trace_pairing


def test_structure_id_parsing():
    sid = StructureId.parse("DrinfeldSklyanin")
    assert sid.kind == "DrinfeldSklyanin" and sid.varset_kind == "cotangent"
    pen = StructureId.parse("Pencil(2,-3)")
    assert pen.kind == "Pencil"
    assert (pen.a, pen.b) == (Fraction(2), Fraction(-3))
    half = StructureId.parse("Pencil(1/2,3)")
    assert (half.a, half.b) == (Fraction(1, 2), Fraction(3))
    assert str(half) == "Pencil(1/2,3)"
    assert StructureId.parse("SkewPolyEx3").varset_kind == "plain"
    assert StructureId.parse("SchubertPi1Ex4").varset_kind == "schubert"
    with pytest.raises(ValueError):
        StructureId.parse("NoSuchThing")
    with pytest.raises(ValueError):
        StructureId.parse("Pencil(1)")


def test_weight_profiles():
    """Triangular structures sit in nonnegative weights, the rest do not."""
    profiles = {
        "RMatrixSec1": [-4, -2, 0, 2, 4],
        "SymplecticOmega": [-4, -2, 0, 2, 4],
        "DrinfeldSklyanin": [0, 2, 4],
        "Pi0OfDS": [0],
        "Pi1OfDS": [2, 4],
        "SkewPolyEx3": [0],
        "SchubertDSEx4": [0, 2, 4, 6],
        "SchubertPi0Ex4": [0],
        "SchubertPi1Ex4": [2, 4, 6],
    }
    for name, expected in profiles.items():
        pi = build_structure(name, 3)
        assert sorted(weight_split(pi)) == expected, name


def test_part_sums():
    for n in (2, 3):
        ds = build_structure("DrinfeldSklyanin", n)
        assert ds == build_structure("Pi0OfDS", n) + build_structure("Pi1OfDS", n)
        e4 = build_structure("SchubertDSEx4", n)
        assert e4 == build_structure("SchubertPi0Ex4", n) + build_structure(
            "SchubertPi1Ex4", n
        )


def test_pencil_legs():
    for n in (2, 3):
        assert build_structure("DrinfeldSklyanin", n) == build_structure(
            "Pencil(1,1)", n
        )
        assert build_structure("SymplecticOmega", n) == build_structure(
            "Pencil(1,0)", n
        )
        assert build_structure("KirillovViaH", n) == build_structure(
            "SymplecticOmega", n
        )


SQUARE_ZERO = {
    ("RMatrixSec1", 2): False,
    ("SymplecticOmega", 2): False,
    ("KirillovViaH", 2): False,
    ("DrinfeldSklyanin", 2): True,
    ("DrinfeldSklyanin", 3): True,
    ("Pi0OfDS", 2): True,
    ("Pi0OfDS", 3): True,
    ("Pi1OfDS", 2): True,
    ("Pi1OfDS", 3): False,
    ("SkewPolyEx3", 2): True,
    ("SkewPolyEx3", 3): True,
    ("SchubertDSEx4", 2): True,
    ("SchubertDSEx4", 3): True,
    ("SchubertPi0Ex4", 2): True,
    ("SchubertPi1Ex4", 2): False,
}


def test_schouten_squares():
    """The square [pi, pi] vanishes exactly for the Poisson members."""
    for (name, n), expect_zero in SQUARE_ZERO.items():
        pi = build_structure(name, n)
        assert schouten_bracket(pi, pi).is_zero() == expect_zero, (name, n)


def test_pencil_square_vanishes_only_on_the_diagonal_rays():
    for (a, b), expect_zero in (
        ((1, 1), True),
        ((2, 2), True),
        ((1, -1), True),
        ((1, 0), False),
        ((0, 1), False),
        ((2, 3), False),
    ):
        pi = build_structure("Pencil(%d,%d)" % (a, b), 2)
        assert schouten_bracket(pi, pi).is_zero() == expect_zero, (a, b)


def test_euler_field_counts_signed_degree():
    """The hyperbolic counter: +1 per first-half factor, -1 per second."""
    vs = VarSet("cotangent", 2)
    e = euler_field(vs)
    h = trace_pairing(vs)
    assert vector_apply(e, h).is_zero()
    z1 = Polynomial.variable(vs, 0)
    xi1 = Polynomial.variable(vs, 2)
    assert vector_apply(e, z1 * z1 * z1) == 3 * z1 * z1 * z1
    assert vector_apply(e, xi1) == -xi1


def test_moment_map_entries():
    vs = VarSet("cotangent", 2)
    mm = moment_map(vs)
    assert mm[0][0] == Polynomial.variable(vs, 0) * Polynomial.variable(vs, 2)
    assert mm[0][1] == Polynomial.variable(vs, 0) * Polynomial.variable(vs, 3)
    total = mm[0][0] + mm[1][1]
    assert total == trace_pairing(vs)


def test_eigenvalues_are_signed_partial_traces():
    for n in (3, 4):
        vs = VarSet("cotangent", n)
        basis = OneFormBasis(vs)
        for k in range(n - 1):
            expected = Polynomial.zero(vs)
            for i in range(n):
                pair = Polynomial.variable(vs, i) * Polynomial.variable(
                    vs, vs.partner(i)
                )
                expected = expected + (pair if i <= k else -pair)
            assert basis.eigenvalue(k) == expected


def test_recursion_operator_eigen_identities():
    n = 3
    pi = build_structure("RMatrixSec1", n)
    basis = OneFormBasis(VarSet("cotangent", n))
    assert recursion_operator(pi, basis.trace_differential()).is_zero()
    for k in range(n - 1):
        lam = basis.eigenvalue(k)
        chi = basis.cleared_log_ratio(k)
        assert (recursion_operator(pi, chi) - chi * lam).is_zero()
        phi = basis.partial_trace_differential(k)
        resid = recursion_operator(pi, phi) - phi * lam
        flag, factor = scalar_multiple_of_trace_differential(resid, basis)
        assert flag
        assert not factor.is_zero()


def test_eigen_identities_fail_for_triangular_structure():
    n = 3
    pi = build_structure("DrinfeldSklyanin", n)
    basis = OneFormBasis(VarSet("cotangent", n))
    assert not recursion_operator(pi, basis.trace_differential()).is_zero()


def test_cotangent_lift_formula():
    vs = VarSet("cotangent", 2)
    lift = cotangent_lift_field(vs, 0, 1)
    z1 = Polynomial.variable(vs, 0)
    z2 = Polynomial.variable(vs, 1)
    xi1 = Polynomial.variable(vs, 2)
    assert vector_apply(lift, z2) == z1
    assert vector_apply(lift, z1).is_zero()
    assert vector_apply(lift, xi1) == -Polynomial.variable(vs, 3)
    h = trace_pairing(vs)
    assert vector_apply(lift, h).is_zero()


def test_chevalley_relations_hold_for_both_realizations():
    for vs, builder in (
        (VarSet("plain", 3), gl_field),
        (VarSet("cotangent", 3), cotangent_lift_field),
    ):
        for e, f, h in chevalley_triples(vs, builder):
            assert schouten_bracket(e, f) == h
            assert schouten_bracket(h, e) == 2 * e
            assert schouten_bracket(h, f) == -2 * f


def test_homogenization_level_two():
    from poishom.operators import OrbitIdeal

    vs = VarSet("cotangent", 2)
    hom = HomogenizationMap(vs, level=2, c=1)
    z1 = Polynomial.variable(vs, 0)
    xi2 = Polynomial.variable(vs, 3)
    f = z1 * xi2 + 3
    image = hom.apply(f)
    for (p, q) in image.bidegree_parts():
        assert p == 2 and q == 2
    ideal = OrbitIdeal(vs, c=1)
    assert ideal.contains(image - f)


def test_invariance_split():
    """The constant leg is sl-invariant; the triangular one is only torus-invariant."""
    vs = VarSet("cotangent", 2)
    omega = build_structure("SymplecticOmega", 2)
    ds = build_structure("DrinfeldSklyanin", 2)
    off = cotangent_lift_field(vs, 0, 1)
    diag = cotangent_lift_field(vs, 0, 0)
    assert schouten_bracket(off, omega).is_zero()
    assert schouten_bracket(diag, ds).is_zero()
    assert not schouten_bracket(off, ds).is_zero()
