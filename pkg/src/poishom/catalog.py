"""Named bivector structures, companion vector fields and 1-forms, the
balanced-filtration homogenization map, and the linear group actions.

Structure ids are the exact spellings accepted by the command line:
RMatrixSec1, SymplecticOmega, KirillovViaH, Pencil(a,b), DrinfeldSklyanin,
Pi0OfDS, Pi1OfDS, SkewPolyEx3, SchubertDSEx4, SchubertPi0Ex4,
SchubertPi1Ex4.  Pencil takes two rational parameters, e.g. Pencil(2,3)
or Pencil(1/2,-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .forms import PolyForm, PolyVector, contract_form_into_vector, d_of_polynomial
from .poly import Polynomial, VarSet, as_scalar, trace_pairing

PLAIN_KINDS = frozenset({"SkewPolyEx3"})
SCHUBERT_KINDS = frozenset({"SchubertDSEx4", "SchubertPi0Ex4", "SchubertPi1Ex4"})

KINDS = (
    "RMatrixSec1",
    "SymplecticOmega",
    "KirillovViaH",
    "Pencil",
    "DrinfeldSklyanin",
    "Pi0OfDS",
    "Pi1OfDS",
    "SkewPolyEx3",
    "SchubertDSEx4",
    "SchubertPi0Ex4",
    "SchubertPi1Ex4",
)


@dataclass(frozen=True)
class StructureId:
    kind: str
    a: Fraction = None
    b: Fraction = None

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text.startswith("Pencil(") and text.endswith(")"):
            inner = text[len("Pencil(") : -1]
            parts = inner.split(",")
            if len(parts) != 2:
                raise ValueError("Pencil takes two parameters: %r" % (text,))
            try:
                a, b = (Fraction(s.strip()) for s in parts)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError("bad Pencil parameters in %r" % (text,)) from exc
            return cls("Pencil", a, b)
        if text in KINDS and text != "Pencil":
            return cls(text)
        raise ValueError("unknown structure id %r" % (text,))

    def __str__(self):
        if self.kind == "Pencil":
            return "Pencil(%s,%s)" % (self.a, self.b)
        return self.kind

    @property
    def varset_kind(self):
        if self.kind in PLAIN_KINDS:
            return "plain"
        if self.kind in SCHUBERT_KINDS:
            return "schubert"
        return "cotangent"

    def varset(self, n):
        return VarSet(self.varset_kind, n)


def _accum(vs, triples):
    """Bivector from (i, j, coefficient) word data."""
    acc = PolyVector.zero(vs)
    for i, j, coef in triples:
        acc = acc + PolyVector.term(vs, (i, j), coef)
    return acc


def _zvar(vs, i):
    return Polynomial.variable(vs, i)


def _pvar(vs, i):
    return Polynomial.variable(vs, vs.n + i)


def _rmatrix(vs):
    n = vs.n
    triples = []
    for i in range(n):
        for j in range(i + 1, n):
            zz = _zvar(vs, i) * _zvar(vs, j)
            pp = _pvar(vs, i) * _pvar(vs, j)
            triples.append((i, j, zz))
            triples.append((n + i, n + j, -pp))
    for i in range(n):
        diag = _zvar(vs, i) * _pvar(vs, i)
        for j in range(i + 1, n):
            triples.append((j, n + j, diag))
        for j in range(i):
            triples.append((j, n + j, -diag))
    return _accum(vs, triples)


def _symplectic_like(vs):
    h = trace_pairing(vs)
    acc = PolyVector.zero(vs)
    for i in range(vs.n):
        acc = acc + PolyVector.term(vs, (i, vs.n + i), h)
    return acc


def _ds_weight0(vs):
    n = vs.n
    triples = []
    for i in range(n):
        triples.append((i, n + i, _zvar(vs, i) * _pvar(vs, i)))
        for j in range(i + 1, n):
            triples.append((i, j, -_zvar(vs, i) * _zvar(vs, j)))
            triples.append((n + i, n + j, _pvar(vs, i) * _pvar(vs, j)))
    return _accum(vs, triples)


def _ds_raising(vs):
    n = vs.n
    triples = []
    for i in range(n):
        diag = _zvar(vs, i) * _pvar(vs, i)
        for j in range(i):
            triples.append((j, n + j, 2 * diag))
    return _accum(vs, triples)


def _schubert_weight0(vs):
    n = vs.n
    triples = []
    for i in range(n):
        for j in range(i + 1, n):
            triples.append((i, j, _zvar(vs, i) * _zvar(vs, j)))
            triples.append((n + i, n + j, -_pvar(vs, i) * _pvar(vs, j)))
    for i in range(n):
        for j in range(n):
            scale = 2 if i == j else 1
            triples.append((i, n + j, scale * _zvar(vs, i) * _pvar(vs, j)))
    return _accum(vs, triples)


def _schubert_raising(vs):
    n = vs.n
    triples = []
    for i in range(n):
        diag = _zvar(vs, i) * _pvar(vs, i)
        for j in range(i + 1, n):
            triples.append((j, n + j, 2 * diag))
    acc = _accum(vs, triples)
    h = trace_pairing(vs)
    mixed = PolyVector.zero(vs)
    for i in range(n):
        for j in range(n):
            mixed = mixed + PolyVector.term(
                vs, (i, n + j), _zvar(vs, i) * _pvar(vs, j)
            )
    return acc + mixed * (2 * h)


def build_structure(sid, n):
    """Construct the named bivector at dimension n (n >= 2)."""
    if isinstance(sid, str):
        sid = StructureId.parse(sid)
    if n < 2:
        raise ValueError("structures need n >= 2, got %d" % (n,))
    vs = sid.varset(n)
    if sid.kind == "RMatrixSec1":
        return _rmatrix(vs)
    if sid.kind in ("SymplecticOmega", "KirillovViaH"):
        return _symplectic_like(vs)
    if sid.kind == "Pencil":
        return sid.a * _symplectic_like(vs) + sid.b * (-_rmatrix(vs))
    if sid.kind == "DrinfeldSklyanin":
        return _ds_weight0(vs) + _ds_raising(vs)
    if sid.kind == "Pi0OfDS":
        return _ds_weight0(vs)
    if sid.kind == "Pi1OfDS":
        return _ds_raising(vs)
    if sid.kind == "SkewPolyEx3":
        triples = []
        for i in range(n):
            for j in range(i + 1, n):
                triples.append((i, j, _zvar(vs, i) * _zvar(vs, j)))
        return _accum(vs, triples)
    if sid.kind == "SchubertDSEx4":
        return _schubert_weight0(vs) + _schubert_raising(vs)
    if sid.kind == "SchubertPi0Ex4":
        return _schubert_weight0(vs)
    if sid.kind == "SchubertPi1Ex4":
        return _schubert_raising(vs)
    raise ValueError("unknown structure id %r" % (sid,))


def weight_split(pv):
    """Weight-homogeneous components of a bivector (generators count
    negatively), as a dict weight -> PolyVector."""
    return pv.weight_parts()


WEIGHT_ZERO_PART = {
    "DrinfeldSklyanin": "Pi0OfDS",
    "Pi0OfDS": "Pi0OfDS",
    "SkewPolyEx3": "SkewPolyEx3",
    "SchubertDSEx4": "SchubertPi0Ex4",
    "SchubertPi0Ex4": "SchubertPi0Ex4",
}

DIAGONAL_KIND_BY_STRUCTURE = {
    "Pi0OfDS": "ds_pi0",
    "SkewPolyEx3": "skew_poly",
    "SchubertPi0Ex4": "schubert_pi0",
}


def euler_field(vs):
    """The weight field sum z_i d/dz_i - sum xi_i d/dxi_i."""
    if not vs.paired:
        raise ValueError("euler field needs a paired variable set")
    acc = PolyVector.zero(vs)
    for i in range(vs.n):
        acc = acc + PolyVector.term(vs, (i,), _zvar(vs, i))
        acc = acc + PolyVector.term(vs, (vs.n + i,), -_pvar(vs, i))
    return acc


def moment_map(vs):
    """Matrix of quadratic generators, entry (i, j) = z_i xi_j."""
    return [
        [_zvar(vs, i) * _pvar(vs, j) for j in range(vs.n)] for i in range(vs.n)
    ]


class OneFormBasis:
    """The pair forms on a paired variable set and their distinguished
    combinations used by the recursion-operator checks (0-based indices)."""

    def __init__(self, vs):
        if vs.kind != "cotangent":
            raise ValueError("pair forms live on the cotangent variable set")
        self.varset = vs

    def symmetric_pair(self, i):
        vs = self.varset
        return PolyForm.term(vs, (i,), _pvar(vs, i)) + PolyForm.term(
            vs, (vs.n + i,), _zvar(vs, i)
        )

    def antisymmetric_pair(self, i):
        vs = self.varset
        return PolyForm.term(vs, (i,), _pvar(vs, i)) - PolyForm.term(
            vs, (vs.n + i,), _zvar(vs, i)
        )

    def trace_differential(self):
        return d_of_polynomial(trace_pairing(self.varset))

    def partial_trace_differential(self, k):
        """d of sum_{i <= k} z_i xi_i."""
        vs = self.varset
        acc = Polynomial.zero(vs)
        for i in range(k + 1):
            acc = acc + _zvar(vs, i) * _pvar(vs, i)
        return d_of_polynomial(acc)

    def cleared_log_ratio(self, k):
        """Denominator-cleared difference of consecutive antisymmetric
        pairs: (z_k xi_k) psi_{k+1} - (z_{k+1} xi_{k+1}) psi_k."""
        vs = self.varset
        ak = _zvar(vs, k) * _pvar(vs, k)
        ak1 = _zvar(vs, k + 1) * _pvar(vs, k + 1)
        return self.antisymmetric_pair(k + 1) * ak - self.antisymmetric_pair(k) * ak1

    def eigenvalue(self, k):
        """sum_{j <= k} z_j xi_j - sum_{j > k} z_j xi_j."""
        vs = self.varset
        acc = Polynomial.zero(vs)
        for j in range(vs.n):
            t = _zvar(vs, j) * _pvar(vs, j)
            acc = acc + (t if j <= k else -t)
        return acc


def recursion_operator(pi, phi):
    """A(phi): contract the 1-form into the bivector, then flip the
    resulting field back to a 1-form with d/dxi_i -> dz_i, d/dz_i -> -dxi_i."""
    vs = pi.varset
    field = contract_form_into_vector(phi, pi)
    acc = PolyForm.zero(vs)
    for word, coef in field.terms.items():
        (g,) = word
        if g < vs.n:
            acc = acc + PolyForm.term(vs, (vs.n + g,), -coef)
        else:
            acc = acc + PolyForm.term(vs, (g - vs.n,), coef)
    return acc


def scalar_multiple_of_trace_differential(omega, basis):
    """Is omega = f * d(trace) for a polynomial f?  Returns (flag, f)."""
    vs = basis.varset
    if omega.is_zero():
        return True, Polynomial.zero(vs)
    cand = omega.coefficient((0,)).divide_by_variable(vs.n)
    if cand is None:
        return False, None
    if omega == basis.trace_differential() * cand:
        return True, cand
    return False, None


# ---------------------------------------------------------------------------
# homogenization of the balanced filtration


@dataclass(frozen=True)
class HomogenizationMap:
    """Send a balanced polynomial of filtration level k to its bihomogeneous
    representative: each bidegree-(j,j) component picks up (H/c)^(k-j),
    with H the trace pairing.  Kernel is exactly (H - c) times level k-1."""

    varset: VarSet
    level: int
    c: Fraction = Fraction(1)

    def apply(self, f):
        self.varset.check_same(f.varset)
        if not self.c:
            raise ValueError("homogenization needs a nonzero level value")
        h = trace_pairing(self.varset)
        acc = Polynomial.zero(self.varset)
        for (dz, dp), part in f.bidegree_parts().items():
            if dz != dp:
                raise ValueError("homogenization expects a balanced polynomial")
            if dz > self.level:
                raise ValueError(
                    "component degree %d above level %d" % (dz, self.level)
                )
            scale = Fraction(1) / as_scalar(self.c) ** (self.level - dz)
            acc = acc + part * h ** (self.level - dz) * scale
        return acc


def homogenize(f, level, c=1):
    return HomogenizationMap(f.varset, level, as_scalar(c)).apply(f)


# ---------------------------------------------------------------------------
# linear actions


def gl_field(vs, a, b):
    """z_a d/dz_b acting on the z-only polynomial algebra (0-based)."""
    if vs.kind != "plain":
        raise ValueError("this action lives on the plain variable set")
    return PolyVector.term(vs, (b,), Polynomial.variable(vs, a))


def cotangent_lift_field(vs, a, b):
    """z_a d/dz_b - xi_b d/dxi_a on the paired variable set (0-based)."""
    if vs.kind != "cotangent":
        raise ValueError("the lift lives on the cotangent variable set")
    return PolyVector.term(vs, (b,), _zvar(vs, a)) + PolyVector.term(
        vs, (vs.n + a,), -_pvar(vs, b)
    )


def chevalley_triples(vs, field_builder):
    """Simple-root triples (e_i, f_i, h_i) built from an E_ab field map."""
    out = []
    for i in range(vs.n - 1):
        e = field_builder(vs, i, i + 1)
        f = field_builder(vs, i + 1, i)
        h = field_builder(vs, i, i) - field_builder(vs, i + 1, i + 1)
        out.append((e, f, h))
    return out
