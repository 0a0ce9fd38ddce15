"""Degree-lowering differential, brackets, ideal reduction, and the
diagonal slice calculus.

The differential attached to a bivector v is delta = d i_v - i_v d, where
i_v is iterated interior contraction.  On decomposable forms this agrees
with the classical two-sum expansion (poisson_differential_decomposable),
which the tests use as an independent route.

For the diagonal structure families the differential restricted to a
fixed-multidegree slice collapses to a combination of the operators
x_j d/d(dx_j) with constant coefficients.  diagonal_coefficients returns
that coefficient vector; the acyclicity classifier and the Laplacian
scalar are read off from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .forms import (
    PolyForm,
    bivector_form_pairing,
    d_of_polynomial,
    exterior_derivative,
    interior_diag,
    interior_diag_star,
    interior_product,
)
from .poly import Multidegree, Polynomial, as_scalar, mono_grlex_key, trace_pairing


def poisson_differential(pi, a):
    """delta(a) = d(i_pi a) - i_pi(d a) for a bivector pi and form a."""
    return exterior_derivative(interior_product(pi, a)) - interior_product(
        pi, exterior_derivative(a)
    )


def poisson_bracket(pi, f, g):
    return bivector_form_pairing(pi, d_of_polynomial(f) ^ d_of_polynomial(g))


def poisson_differential_decomposable(pi, f0, fs):
    """delta on f0 df_1 ^ ... ^ df_k via the two-sum expansion."""
    vs = f0.varset
    k = len(fs)
    dfs = [d_of_polynomial(f) for f in fs]

    def wedge_all(factors):
        out = PolyForm.from_polynomial(Polynomial.one(vs))
        for w in factors:
            out = out ^ w
        return out

    acc = PolyForm.zero(vs)
    for i in range(k):
        br = poisson_bracket(pi, f0, fs[i])
        rest = wedge_all(dfs[:i] + dfs[i + 1 :])
        sign = 1 if i % 2 == 0 else -1
        acc = acc + sign * (rest * br)
    for i in range(k):
        for j in range(i + 1, k):
            br = d_of_polynomial(poisson_bracket(pi, fs[i], fs[j]))
            factors = [br] + dfs[:i] + dfs[i + 1 : j] + dfs[j + 1 :]
            sign = 1 if (i + j) % 2 == 0 else -1
            acc = acc + sign * (wedge_all(factors) * f0)
    return acc


def jacobiator(pi, f, g, h):
    return (
        poisson_bracket(pi, poisson_bracket(pi, f, g), h)
        + poisson_bracket(pi, poisson_bracket(pi, g, h), f)
        + poisson_bracket(pi, poisson_bracket(pi, h, f), g)
    )


class OrbitIdeal:
    """Principal ideal (trace_pairing - c), with canonical reduction.

    A single generator is its own Groebner basis, so repeated division by
    the graded-lex leading term gives a canonical normal form: reduce(p)
    is zero exactly when p lies in the ideal.
    """

    def __init__(self, varset, c=1):
        if not varset.paired:
            raise ValueError("orbit ideal needs a paired variable set")
        self.varset = varset
        self.c = as_scalar(c)
        self.generator = trace_pairing(varset) - Polynomial.constant(varset, self.c)
        lead = [0] * varset.num_vars
        lead[0] = 1
        lead[varset.n] = 1
        self.lead_exps = tuple(lead)

    def _divisible(self, exps):
        return all(e >= f for e, f in zip(exps, self.lead_exps))

    def reduce(self, p):
        self.varset.check_same(p.varset)
        while True:
            cand = [e for e in p.terms if self._divisible(e)]
            if not cand:
                return p
            exps = max(cand, key=mono_grlex_key)
            coef = p.terms[exps]
            quot = tuple(e - f for e, f in zip(exps, self.lead_exps))
            p = p - Polynomial.monomial(self.varset, quot, coef) * self.generator

    def contains(self, p):
        return self.reduce(p).is_zero()


def poisson_bracket_mod_ideal(pi, f, g, ideal):
    if not (f.is_balanced() and g.is_balanced()):
        raise ValueError("bracket mod orbit ideal expects balanced arguments")
    return ideal.reduce(poisson_bracket(pi, f, g))


# ---------------------------------------------------------------------------
# diagonal slice calculus

DIAGONAL_KINDS = ("ds_pi0", "skew_poly", "schubert_pi0")


def cotangent_slice_coefficients(md):
    """Per-index pair (a, b) for the weight-zero diagonal structure on a
    paired variable set, at the slice with multidegree md."""
    m, l = md.m, md.l
    n = len(m)
    a = tuple(
        Fraction(-sum(m[:j]) + sum(m[j + 1 :]) - l[j]) for j in range(n)
    )
    b = tuple(
        Fraction(-sum(l[:j]) + sum(l[j + 1 :]) - m[j]) for j in range(n)
    )
    return a, b


def skew_slice_coefficients(md):
    """Per-index coefficients for the skew-polynomial structure."""
    m = md.m
    n = len(m)
    return tuple(Fraction(sum(m[:j]) - sum(m[j + 1 :])) for j in range(n))


def schubert_slice_coefficients(md):
    """Per-index pairs (cz, cb) for the cell structure's weight-zero part."""
    m, mb = md.m, md.l
    n = len(m)
    cz = tuple(
        Fraction(sum(m[:k]) - sum(m[k + 1 :]) - sum(mb) - mb[k]) for k in range(n)
    )
    cb = tuple(
        Fraction(-sum(mb[:k]) + sum(mb[k + 1 :]) + sum(m) + m[k]) for k in range(n)
    )
    return cz, cb


def diagonal_coefficients(kind, md):
    """Flat per-variable coefficient vector c with delta = sum c_v x_v d/d(dx_v)."""
    if kind == "ds_pi0":
        a, b = cotangent_slice_coefficients(md)
        return a + tuple(-v for v in b)
    if kind == "skew_poly":
        return skew_slice_coefficients(md)
    if kind == "schubert_pi0":
        cz, cb = schubert_slice_coefficients(md)
        return cz + cb
    raise ValueError("unknown diagonal kind %r" % (kind,))


def delta_via_coefficients(coeffs, a):
    acc = type(a).zero(a.varset)
    for v, c in enumerate(coeffs):
        if c:
            acc = acc + c * interior_diag(v, a)
    return acc


def delta_star_via_coefficients(coeffs, a):
    acc = type(a).zero(a.varset)
    for v, c in enumerate(coeffs):
        if c:
            acc = acc + c * interior_diag_star(v, a)
    return acc


def laplacian_via_coefficients(coeffs, a):
    return delta_via_coefficients(
        coeffs, delta_star_via_coefficients(coeffs, a)
    ) + delta_star_via_coefficients(coeffs, delta_via_coefficients(coeffs, a))


def laplacian_scalar(coeffs, md):
    """The Laplacian acts on a multidegree slice as this single scalar."""
    return sum(
        (c * c * cnt for c, cnt in zip(coeffs, md.counts)), Fraction(0)
    )


@dataclass(frozen=True)
class AcyclicityVerdict:
    status: str  # "acyclic" or "non_acyclic"
    scalar: object = None  # common eigenvalue on a non-acyclic slice
    homotopy_z: tuple = None  # coefficients for x_j d/dx_j terms, z side
    homotopy_partner: tuple = None  # same for the partner side

    @property
    def acyclic(self):
        return self.status == "acyclic"


def classify_acyclicity(md):
    """Decide whether the balanced kernel subcomplex at multidegree md is
    acyclic, and if so produce an explicit homotopy certificate.

    The slice differential is sum_j a_j x_j d/d(dx_j) over the z side minus
    the mirrored sum over the partner side.  The subcomplex is all homology
    exactly when the a_j agree on the support of m and the b_j agree on the
    support of l, with a single common value; otherwise the certificate
    s = sum x_j (dz_j ^ d/dz_j) + ... normalizes delta s + s delta to the
    identity on the whole slice.
    """
    if not md.balanced():
        raise ValueError("classifier expects a balanced multidegree")
    a, b = cotangent_slice_coefficients(md)
    m, l = md.m, md.l
    sup_m = [i for i, e in enumerate(m) if e]
    sup_l = [j for j, e in enumerate(l) if e]
    values = [a[i] for i in sup_m] + [b[j] for j in sup_l]
    if not values:
        return AcyclicityVerdict("non_acyclic", Fraction(0))
    if all(v == values[0] for v in values[1:]):
        return AcyclicityVerdict("non_acyclic", values[0])

    n = len(m)
    x = [Fraction(0)] * n
    p = [Fraction(0)] * n
    a_vals = [a[i] for i in sup_m]
    b_vals = [b[j] for j in sup_l]
    if any(v != a_vals[0] for v in a_vals[1:]):
        i1 = sup_m[0]
        i2 = next(i for i in sup_m if a[i] != a[i1])
        t = 1 / (a[i1] - a[i2])
        x[i1] = t / m[i1]
        x[i2] = -t / m[i2]
    elif any(v != b_vals[0] for v in b_vals[1:]):
        j1 = sup_l[0]
        j2 = next(j for j in sup_l if b[j] != b[j1])
        t = -1 / (b[j1] - b[j2])
        p[j1] = t / l[j1]
        p[j2] = -t / l[j2]
    else:
        i0, j0 = sup_m[0], sup_l[0]
        t = 1 / (a[i0] - b[j0])
        x[i0] = t / m[i0]
        p[j0] = t / l[j0]
    balance = sum(xi * mi for xi, mi in zip(x, m)) - sum(
        pj * lj for pj, lj in zip(p, l)
    )
    action = sum(ai * xi * mi for ai, xi, mi in zip(a, x, m)) - sum(
        bj * pj * lj for bj, pj, lj in zip(b, p, l)
    )
    if balance != 0 or action != 1:
        raise AssertionError("homotopy normalization failed at %r" % (md,))
    return AcyclicityVerdict("acyclic", None, tuple(x), tuple(p))


def homotopy_operator(verdict, a):
    """Apply the classifier's certificate s to a form."""
    if not verdict.acyclic:
        raise ValueError("no homotopy on a non-acyclic slice")
    vs = a.varset
    acc = type(a).zero(vs)
    for j, c in enumerate(verdict.homotopy_z):
        if c:
            acc = acc + c * interior_diag_star(j, a)
    for j, c in enumerate(verdict.homotopy_partner):
        if c:
            acc = acc + c * interior_diag_star(vs.n + j, a)
    return acc
