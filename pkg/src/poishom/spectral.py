"""Weight filtration of the form complex: first-page tables, truncated
quotient homology, convergence comparison, and the closed-cocycle family
that represents classes of the full differential.

The increasing-weight part of a structure raises filtration degree, so
weight slices of the weight-zero part compute the first page.  Truncating
at a cutoff W gives a finite quotient complex of the full differential;
if the sequence degenerates at the first page, each cutoff increment of
the truncated homology must equal the first-page dimensions at that
weight.  convergence_check itemizes that comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import StructureId, build_structure, euler_field
from .forms import (
    PolyForm,
    bivector_form_pairing,
    d_of_polynomial,
    interior_product,
)
from .homology import HOMOLOGY_FILTERS, assemble_matrix, balanced_kernel_table
from .linalg import ExactMatrix
from .operators import classify_acyclicity, poisson_differential
from .poly import Polynomial
from .slices import Slice, SliceSpec, WeightAtMost


def filtration_decompose(form):
    """Weight-homogeneous components, ascending weight."""
    return dict(sorted(form.weight_parts().items()))


def truncate_to_weight(form, bound):
    acc = type(form).zero(form.varset)
    for w, part in form.weight_parts().items():
        if w <= bound:
            acc = acc + part
    return acc


def e1_page(sid, n, weight_cutoff):
    """First-page dimensions: rows keyed by (weight, form_degree).

    Aggregates the per-multidegree homology of the structure's
    weight-zero part over all slices of each weight."""
    table = balanced_kernel_table(sid, n, weight_cutoff)
    agg = {}
    for r in table.rows:
        key = (r.weight, r.form_degree)
        cur = agg.get(key, [0, 0, 0, 0])
        cur[0] += r.dim
        cur[1] += r.rank_in
        cur[2] += r.rank_out
        cur[3] += r.homology_dim
        agg[key] = cur
    return {key: tuple(v) for key, v in sorted(agg.items())}


def _vector_block_key(sl, vec):
    """Counts conserved by every structure term: per-pair differences on a
    paired ambient, the whole count vector on a plain one."""
    vs = sl.spec.varset
    pos = next(iter(vec))
    word, exps = sl.ambient[pos]
    counts = list(exps)
    for g in word:
        counts[g] += 1
    if not vs.paired:
        return tuple(counts)
    n = vs.n
    return tuple(counts[i] - counts[n + i] for i in range(n))


def _blockwise_rank(matrix, row_keys, col_keys):
    """Rank of a matrix that is block diagonal under the given keys."""
    by_key = {}
    for j, key in enumerate(col_keys):
        by_key.setdefault(key, []).append(j)
    row_pos = {}
    for i, key in enumerate(row_keys):
        row_pos.setdefault(key, {})
        row_pos[key][i] = len(row_pos[key])
    cols_by_row = {}
    for (i, j), v in matrix.entries.items():
        cols_by_row.setdefault(j, {})[i] = v
    total = 0
    for key, cols in by_key.items():
        rows_here = row_pos.get(key, {})
        sub = ExactMatrix(len(rows_here), len(cols))
        for local_j, j in enumerate(cols):
            for i, v in cols_by_row.get(j, {}).items():
                if i not in rows_here:
                    raise ArithmeticError(
                        "differential left its conserved-grading block"
                    )
                sub.set(rows_here[i], local_j, v)
        total += sub.rank()
    return total


def truncated_homology(sid, n, weight_cutoff):
    """Homology dimensions per form degree of the weight-truncated
    quotient complex of the full differential."""
    if isinstance(sid, str):
        sid = StructureId.parse(sid)
    filters = HOMOLOGY_FILTERS.get(sid.kind)
    if filters is None:
        raise ValueError("no truncated complex recipe for %s" % (sid,))
    pi = build_structure(sid, n)
    vs = pi.varset

    def apply_op(form):
        return truncate_to_weight(poisson_differential(pi, form), weight_cutoff)

    max_k = vs.num_vars
    spec0 = SliceSpec(vs, 0, WeightAtMost(weight_cutoff), filters)
    slices = {k: Slice.build(spec0.with_degree(k)) for k in range(max_k + 1)}
    keys = {
        k: [_vector_block_key(sl, vec) for vec in sl.vectors]
        for k, sl in slices.items()
    }
    matrices = {}
    ranks = {}
    for k in range(1, max_k + 1):
        matrices[k] = assemble_matrix(apply_op, slices[k], slices[k - 1])
        ranks[k] = _blockwise_rank(matrices[k], keys[k - 1], keys[k])
    for k in range(2, max_k + 1):
        if not matrices[k - 1].mul(matrices[k]).is_zero():
            raise ArithmeticError(
                "truncated differential does not square to zero at degree %d" % k
            )
    dims = {}
    for k in range(max_k + 1):
        dims[k] = slices[k].dim - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return dims


def convergence_check(sid, n, weight_cutoff):
    """Compare cutoff increments of truncated homology with the first page.

    Returns a dict with one comparison row per (weight, form_degree) and
    an overall flag."""
    if isinstance(sid, str):
        sid = StructureId.parse(sid)
    page = e1_page(sid, n, weight_cutoff)
    prev = {}
    rows = []
    passed = True
    for w in range(weight_cutoff + 1):
        dims = truncated_homology(sid, n, w)
        degrees = sorted(
            set(dims) | {k for (wt, k) in page if wt == w}
        )
        for k in degrees:
            increment = dims.get(k, 0) - prev.get(k, 0)
            expected = page.get((w, k), (0, 0, 0, 0))[3]
            if increment or expected:
                match = increment == expected
                passed = passed and match
                rows.append(
                    {
                        "weight": w,
                        "form_degree": k,
                        "truncation_increment": increment,
                        "first_page_dim": expected,
                        "match": match,
                    }
                )
        prev = dims
    return {
        "structure": str(sid),
        "n": n,
        "weight_cutoff": weight_cutoff,
        "rows": rows,
        "final_dims": {str(k): v for k, v in sorted(prev.items())},
        "passed": passed,
    }


# ---------------------------------------------------------------------------
# closed cocycles of the full differential


@dataclass(frozen=True)
class SigmaCocycle:
    """(z_i xi_j)^p d(z_i xi_j)^mu (sum_{k>=j} z_k xi_k)^q d(sum...)^nu
    with 1-based i >= j and mu, nu in {0, 1}."""

    i: int
    j: int
    p: int
    q: int
    mu: int
    nu: int

    def __post_init__(self):
        if not (self.i >= self.j >= 1):
            raise ValueError("need i >= j >= 1")
        if self.mu not in (0, 1) or self.nu not in (0, 1):
            raise ValueError("mu and nu are 0 or 1")

    def lead_weight(self):
        return self.i * (self.p + self.mu) + self.j * (
            self.p + self.mu + 2 * self.q + 2 * self.nu
        )

    def form_degree(self):
        return self.mu + self.nu

    def _pieces(self, vs):
        zi = Polynomial.variable(vs, self.i - 1)
        xj = Polynomial.variable(vs, vs.n + self.j - 1)
        head = zi * xj
        tail = Polynomial.zero(vs)
        for k in range(self.j - 1, vs.n):
            tail = tail + Polynomial.variable(vs, k) * Polynomial.variable(
                vs, vs.n + k
            )
        return head, tail

    def build(self, vs):
        head, tail = self._pieces(vs)
        acc = PolyForm.from_polynomial(head ** self.p * tail ** self.q)
        if self.mu:
            acc = acc ^ d_of_polynomial(head)
        if self.nu:
            acc = acc ^ d_of_polynomial(tail)
        return acc

    def lead_form(self, vs):
        """Same word with the tail replaced by its lowest-weight term."""
        head, _ = self._pieces(vs)
        diag = Polynomial.variable(vs, self.j - 1) * Polynomial.variable(
            vs, vs.n + self.j - 1
        )
        acc = PolyForm.from_polynomial(head ** self.p * diag ** self.q)
        if self.mu:
            acc = acc ^ d_of_polynomial(head)
        if self.nu:
            acc = acc ^ d_of_polynomial(diag)
        return acc


def pairing_identity_check(n):
    """The closure engine: the structure pairs to zero against
    d(z_i xi_j) ^ d(tail_j) for every i >= j."""
    sid = StructureId.parse("DrinfeldSklyanin")
    pi = build_structure(sid, n)
    vs = pi.varset
    failures = []
    for j in range(1, n + 1):
        tail = Polynomial.zero(vs)
        for k in range(j - 1, n):
            tail = tail + Polynomial.variable(vs, k) * Polynomial.variable(
                vs, vs.n + k
            )
        for i in range(j, n + 1):
            head = Polynomial.variable(vs, i - 1) * Polynomial.variable(
                vs, vs.n + j - 1
            )
            two_form = d_of_polynomial(head) ^ d_of_polynomial(tail)
            if two_form.is_zero():
                continue
            val = bivector_form_pairing(pi, two_form)
            if not val.is_zero():
                failures.append((i, j, str(val)))
    return failures


def sigma_cocycle_checks(n, p_max, q_max):
    """Per-cocycle verification rows: closed, filtration weight, leading
    term, kernel of the weight-field contraction."""
    sid = StructureId.parse("DrinfeldSklyanin")
    pi = build_structure(sid, n)
    vs = pi.varset
    weight_field = euler_field(vs)
    rows = []
    for j in range(1, n + 1):
        for i in range(j, n + 1):
            for p in range(p_max + 1):
                for q in range(q_max + 1):
                    for mu in (0, 1):
                        for nu in (0, 1):
                            sc = SigmaCocycle(i, j, p, q, mu, nu)
                            form = sc.build(vs)
                            w = sc.lead_weight()
                            if form.is_zero():
                                rows.append(
                                    {
                                        "cocycle": sc,
                                        "degenerate": True,
                                        "closed": True,
                                        "filtration_ok": True,
                                        "lead_ok": True,
                                        "kernel_ok": True,
                                    }
                                )
                                continue
                            closed = poisson_differential(pi, form).is_zero()
                            minw = form.min_weight()
                            filtration_ok = minw >= w
                            diff = sc.lead_form(vs) - form
                            lead_ok = diff.is_zero() or diff.min_weight() >= w + 1
                            kernel_ok = interior_product(
                                weight_field, form
                            ).is_zero()
                            rows.append(
                                {
                                    "cocycle": sc,
                                    "degenerate": False,
                                    "closed": closed,
                                    "filtration_ok": filtration_ok,
                                    "lead_ok": lead_ok,
                                    "kernel_ok": kernel_ok,
                                }
                            )
    return rows


def sigma_independence(n, weight_cutoff, p_max, q_max):
    """Rank test per leading weight: cocycles with distinct leading terms
    stay independent in the truncated quotient homology, and each leading
    term generates a classifier-certified non-acyclic slice."""
    sid = StructureId.parse("DrinfeldSklyanin")
    pi = build_structure(sid, n)
    vs = pi.varset
    filters = HOMOLOGY_FILTERS[sid.kind]

    def apply_op(form):
        return truncate_to_weight(poisson_differential(pi, form), weight_cutoff)

    def canonical_key(form):
        return tuple(
            sorted(
                (word, tuple(sorted(pl.terms.items())))
                for word, pl in form.terms.items()
            )
        )

    groups = {}
    seen_leads = set()
    for j in range(1, n + 1):
        for i in range(j, n + 1):
            for p in range(p_max + 1):
                for q in range(q_max + 1):
                    for mu in (0, 1):
                        for nu in (0, 1):
                            sc = SigmaCocycle(i, j, p, q, mu, nu)
                            w = sc.lead_weight()
                            if w == 0 or w > weight_cutoff:
                                continue
                            lead = sc.lead_form(vs)
                            if lead.is_zero():
                                continue
                            key = canonical_key(lead)
                            if key in seen_leads:
                                continue
                            seen_leads.add(key)
                            groups.setdefault(
                                (w, sc.form_degree()), []
                            ).append(sc)

    cached = {}

    def boundary_columns(k):
        if k not in cached:
            spec_k = SliceSpec(vs, k, WeightAtMost(weight_cutoff), filters)
            dom = Slice.build(spec_k)
            up = Slice.build(spec_k.with_degree(k + 1))
            boundary = assemble_matrix(apply_op, up, dom)
            cols = {}
            for (r, c), v in boundary.entries.items():
                cols.setdefault(c, {})[r] = v
            col_list = [cols.get(c, {}) for c in range(up.dim)]
            cached[k] = (dom, col_list, boundary.rank())
        return cached[k]

    out = []
    for (w, k), members in sorted(groups.items()):
        dom, col_list, r_base = boundary_columns(k)
        cols = list(col_list)
        certified = True
        for sc in members:
            lead = sc.lead_form(vs)
            (md,) = lead.multidegree_parts()
            if classify_acyclicity(md).acyclic:
                certified = False
            col = dom.coords(truncate_to_weight(sc.build(vs), weight_cutoff))
            cols.append({r: c for r, c in enumerate(col) if c})
        r_with = ExactMatrix.from_columns(dom.dim, cols).rank()
        out.append(
            {
                "weight": w,
                "form_degree": k,
                "count": len(members),
                "independent": r_with - r_base,
                "lead_certified": certified,
                "passed": certified and r_with - r_base == len(members),
            }
        )
    return out
