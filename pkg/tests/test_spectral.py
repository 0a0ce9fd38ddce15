"""Filtration pages, truncation convergence, and the cocycle family."""

import random

from poishom.forms import PolyForm
from poishom.poly import Multidegree, Polynomial, VarSet
from poishom.spectral import (
    SigmaCocycle,
    convergence_check,
    e1_page,
    filtration_decompose,
    pairing_identity_check,
    sigma_cocycle_checks,
    sigma_independence,
    truncate_to_weight,
)


def test_filtration_decompose_recombines():
    rng = random.Random(41)
    vs = VarSet("cotangent", 2)
    a = PolyForm.zero(vs)
    for _ in range(5):
        word = tuple(sorted(rng.sample(range(4), 2)))
        exps = tuple(rng.randrange(3) for _ in range(4))
        a = a + PolyForm.term(vs, word, Polynomial.monomial(vs, exps, rng.randrange(1, 5)))
    parts = filtration_decompose(a)
    back = PolyForm.zero(vs)
    for part in parts.values():
        back = back + part
    assert back == a
    low = truncate_to_weight(a, 4)
    for w, part in filtration_decompose(low).items():
        assert w <= 4


def test_e1_page_agrees_with_kernel_table_aggregation():
    from poishom.homology import balanced_kernel_table

    page = e1_page("DrinfeldSklyanin", 2, 6)
    homology_of = {k: v[3] for k, v in page.items() if v[3]}
    agg = {}
    for r in balanced_kernel_table("DrinfeldSklyanin", 2, 6).rows:
        key = (r.weight, r.form_degree)
        agg[key] = agg.get(key, 0) + r.homology_dim
    agg = {k: v for k, v in agg.items() if v}
    assert homology_of == agg


def test_convergence_frozen_values_unit_scale():
    conv = convergence_check("DrinfeldSklyanin", 2, 6)
    assert conv["passed"]
    assert conv["final_dims"] == {"0": 11, "1": 12, "2": 2, "3": 0, "4": 0}

    conv = convergence_check("SchubertDSEx4", 2, 4)
    assert conv["passed"]
    assert conv["final_dims"]["0"] == 13
    assert conv["final_dims"]["1"] == 12
    got = [(r["weight"], r["form_degree"], r["truncation_increment"]) for r in conv["rows"]]
    assert got == [
        (0, 0, 1),
        (1, 0, 2),
        (1, 1, 2),
        (2, 0, 4),
        (2, 1, 4),
        (3, 0, 2),
        (3, 1, 2),
        (4, 0, 4),
        (4, 1, 4),
    ]


def test_cell_final_dims_count_single_variable_monomials():
    """Degree 0 and 1 limits match one-variable series on the cell weights."""
    n, bound = 2, 4
    cell = VarSet("schubert", n)
    single_fun = set()
    single_one = 0
    for i in range(2 * n):
        w = cell.weight(i)
        single_fun.update((i, a) for a in range(1, bound // w + 1))
        single_one += sum(1 for a in range(0, bound // w) if w * (a + 1) <= bound)
    conv = convergence_check("SchubertDSEx4", n, bound)
    assert conv["final_dims"]["0"] == len(single_fun) + 1
    assert conv["final_dims"]["1"] == single_one


def test_sigma_pairing_identity():
    for n in (2, 3):
        assert pairing_identity_check(n) == []


def test_sigma_cocycles_all_verify():
    rows = sigma_cocycle_checks(2, 2, 2)
    assert rows
    for row in rows:
        assert row["closed"], row
        assert row["filtration_ok"], row
        assert row["lead_ok"], row
        assert row["kernel_ok"], row


def test_sigma_lead_weight_formula():
    c = SigmaCocycle(2, 1, 1, 1, 0, 1)
    assert c.lead_weight() == 2 * (1 + 0) + 1 * (1 + 0 + 2 * 1 + 2 * 1)
    assert c.form_degree() == 1


def test_sigma_independence_rows_pass():
    for row in sigma_independence(2, 5, 2, 2):
        assert row["passed"], row
        assert row["independent"] == row["count"]
