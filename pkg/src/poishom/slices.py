"""Finite graded pieces of the polynomial form complex.

A slice is a deterministic ordered basis for the k-forms cut out by a
grading constraint (fixed per-variable multidegree, or total weight up to
a bound) and optional filters: BalancedZXi keeps forms whose z-side and
partner-side degrees agree, KernelOfIH passes to the kernel of
contraction with the weight field.  The kernel filter turns a monomial
basis into one of monomial combinations; coordinates are still exact and
canonical (reduced-echelon kernel per multidegree block).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .catalog import euler_field
from .forms import PolyForm, interior_product
from .linalg import ExactMatrix
from .poly import Multidegree, Polynomial


class GradingViolation(Exception):
    """A form left the graded subspace an operation promised to preserve."""


BALANCED = "BalancedZXi"
KERNEL = "KernelOfIH"
_FILTERS = frozenset({BALANCED, KERNEL})


@dataclass(frozen=True)
class FixedMultidegree:
    multidegree: Multidegree


@dataclass(frozen=True)
class WeightAtMost:
    bound: int


@dataclass(frozen=True)
class SliceSpec:
    varset: object
    form_degree: int
    constraint: object
    filters: frozenset = frozenset()

    def __post_init__(self):
        bad = set(self.filters) - _FILTERS
        if bad:
            raise ValueError("unknown filters %r" % (sorted(bad),))
        if self.filters and not self.varset.paired:
            raise ValueError("filters need a paired variable set")

    def with_degree(self, k):
        return SliceSpec(self.varset, k, self.constraint, self.filters)


def _word_weight(vs, word):
    return sum(vs.weight(g) for g in word)


def _exp_vectors(weights, budget):
    """All exponent tuples with sum(w_i e_i) <= budget, lexicographic."""
    if not weights:
        yield ()
        return
    w = weights[0]
    for e in range(budget // w + 1):
        for rest in _exp_vectors(weights[1:], budget - w * e):
            yield (e,) + rest


def _counts_of(vs, word, exps):
    out = list(exps)
    for g in word:
        out[g] += 1
    return tuple(out)


def monomial_basis(vs, k, constraint):
    """Ordered (word, exps) pairs for the constraint, words lexicographic."""
    nv = vs.num_vars
    out = []
    if isinstance(constraint, FixedMultidegree):
        counts = constraint.multidegree.counts
        if len(counts) != nv:
            raise ValueError("multidegree does not match the variable set")
        for word in itertools.combinations(range(nv), k):
            exps = list(counts)
            ok = True
            for g in word:
                exps[g] -= 1
                if exps[g] < 0:
                    ok = False
                    break
            if ok:
                out.append((word, tuple(exps)))
    elif isinstance(constraint, WeightAtMost):
        weights = [vs.weight(i) for i in range(nv)]
        for word in itertools.combinations(range(nv), k):
            budget = constraint.bound - _word_weight(vs, word)
            if budget < 0:
                continue
            for exps in _exp_vectors(weights, budget):
                out.append((word, exps))
    else:
        raise ValueError("unknown constraint %r" % (constraint,))
    return out


def _is_balanced_counts(vs, counts):
    n = vs.n
    return sum(counts[:n]) == sum(counts[n:])


class Slice:
    """An ordered exact basis for one graded piece."""

    def __init__(self, spec, ambient, vectors, leads=None):
        self.spec = spec
        self.ambient = ambient
        self.index = {key: i for i, key in enumerate(ambient)}
        self.vectors = vectors
        # for a kernel basis: the ambient position each vector owns with
        # coefficient 1, zero in every other vector
        self.leads = leads if leads is not None else list(range(len(vectors)))

    @classmethod
    def build(cls, spec):
        vs = spec.varset
        ambient = monomial_basis(vs, spec.form_degree, spec.constraint)
        if BALANCED in spec.filters:
            ambient = [
                (w, e)
                for (w, e) in ambient
                if _is_balanced_counts(vs, _counts_of(vs, w, e))
            ]
        if KERNEL not in spec.filters:
            vectors = [{i: Fraction(1)} for i in range(len(ambient))]
            return cls(spec, ambient, vectors)

        # kernel of contraction with the weight field, block by multidegree
        weight_field = euler_field(vs)
        blocks = {}
        for i, (word, exps) in enumerate(ambient):
            blocks.setdefault(_counts_of(vs, word, exps), []).append(i)
        vectors = []
        leads = []
        for counts in sorted(blocks):
            members = blocks[counts]
            lower = {}
            cols = []
            for i in members:
                word, exps = ambient[i]
                img = interior_product(
                    weight_field, PolyForm.term(vs, word, Polynomial.monomial(vs, exps))
                )
                col = {}
                for w, p in img.term_items():
                    for e, c in p.terms.items():
                        key = (w, e)
                        pos = lower.setdefault(key, len(lower))
                        col[pos] = c
                cols.append(col)
            mat = ExactMatrix.from_columns(len(lower), cols)
            basis, free = mat.nullspace_info()
            for vec, fc in zip(basis, free):
                vectors.append({members[j]: c for j, c in enumerate(vec) if c})
                leads.append(members[fc])
        return cls(spec, ambient, vectors, leads)

    @property
    def dim(self):
        return len(self.vectors)

    def form(self, i):
        vs = self.spec.varset
        acc = PolyForm.zero(vs)
        for pos, c in self.vectors[i].items():
            word, exps = self.ambient[pos]
            acc = acc + PolyForm.term(vs, word, Polynomial.monomial(vs, exps, c))
        return acc

    def forms(self):
        return [self.form(i) for i in range(self.dim)]

    def ambient_coords(self, form):
        """Coordinates of a form in the ambient monomial basis."""
        vec = {}
        for word, poly in form.term_items():
            for exps, c in poly.terms.items():
                pos = self.index.get((word, exps))
                if pos is None:
                    raise GradingViolation(
                        "monomial %s outside the slice" % (str(PolyForm.term(
                            self.spec.varset, word,
                            Polynomial.monomial(self.spec.varset, exps))),)
                    )
                vec[pos] = c
        return vec

    def coords(self, form):
        """Coordinates in the slice basis; GradingViolation if outside."""
        vec = self.ambient_coords(form)
        if KERNEL not in self.spec.filters:
            out = [Fraction(0)] * self.dim
            for pos, c in vec.items():
                out[pos] = c
            return out
        # each kernel basis vector owns a free position with coefficient 1
        # that no other basis vector touches, so coordinates read off there
        out = []
        residue = dict(vec)
        for bvec, lead in zip(self.vectors, self.leads):
            c = residue.get(lead, Fraction(0))
            out.append(c)
            if c:
                for pos, v in bvec.items():
                    acc = residue.get(pos, Fraction(0)) - c * v
                    if acc:
                        residue[pos] = acc
                    else:
                        residue.pop(pos, None)
        if residue:
            raise GradingViolation("form outside the kernel-filtered slice")
        return out


def multidegrees_up_to_weight(vs, bound):
    """All per-variable count tuples with weight <= bound, sorted."""
    nv = vs.num_vars
    weights = [vs.weight(i) for i in range(nv)]
    n = vs.n
    out = []
    for exps in _exp_vectors(weights, bound):
        out.append(Multidegree(exps[:n], exps[n:]))
    return sorted(out, key=lambda md: (md.weight(vs), md.counts))
