import random

import pytest
from hypothesis import given, settings

from romank.graph import (Graph, complete, complete_bipartite, cycle, disjoint_union,
                          empty, path)
from romank.solvers import solve_bnb
from romank.transforms import (GadgetParams, build_gadget, check_inequality_suite,
                               gadget_lower_bound_check, lift_roman, lift_strong,
                               normalize_strong)
from romank.weights import Variant, WeightFunction, validate

from .conftest import graph_and_function

R, S = Variant.ROMAN, Variant.STRONG


def repair(g, vals, k, rng):
    """Raise values until f is Roman- and strong-valid (raising only helps both)."""
    vals = list(vals)
    for u in g.isolated():
        vals[u] = k
    while True:
        f = WeightFunction(tuple(vals), k)
        rep = validate(g, f, S)
        if rep.ok:
            return f
        u = rep.first.vertex
        vals[rng.choice(g.neighbors(u))] = k


def test_normalize_identity_on_gap_free():
    g, _ = complete_bipartite(2, 2)
    f = WeightFunction((4, 0, 4, 0), 4)
    assert normalize_strong(g, f) == f


def test_normalize_k22_example():
    g, _ = complete_bipartite(2, 2)
    f = WeightFunction((3, 1, 3, 1), 4)
    assert validate(g, f, S)
    out = normalize_strong(g, f)
    assert out.values == (4, 0, 4, 0)
    assert out.is_gap_free() and out.weight <= f.weight and validate(g, out, S)


def test_normalize_zeroes_overcovered_vertex():
    g = path(3)
    f = WeightFunction((3, 1, 3), 3)
    assert normalize_strong(g, f).values == (3, 0, 3)


def test_normalize_rejects_invalid():
    with pytest.raises(ValueError):
        normalize_strong(path(3), WeightFunction((0, 0, 0), 2))


def test_lift_strong_example():
    g, _ = complete_bipartite(2, 2)
    out = lift_strong(g, WeightFunction((2, 1, 0, 0), 2))
    assert out.values == (3, 2, 0, 0) and out.k == 3 and out.weight == 5
    assert validate(g, out, S)
    assert lift_strong(empty(1), WeightFunction((2,), 2)).values == (3,)


def test_lift_strong_requires_gap_free():
    with pytest.raises(ValueError):
        lift_strong(path(3), WeightFunction((3, 1, 3), 3))


def test_lift_roman_examples():
    out = lift_roman(path(3), WeightFunction((0, 2, 0), 2))
    assert out.values == (1, 2, 1) and out.weight == 4 and validate(path(3), out, R)
    assert lift_roman(empty(1), WeightFunction((4,), 4)).values == (5,)
    # k odd, constant (k+1)/2: nothing is <= floor(k/2), nothing is low at k+1
    f = WeightFunction((3,) * 5, 5)
    assert lift_roman(cycle(5), f) == WeightFunction((3,) * 5, 6)


@settings(max_examples=300, deadline=None)
@given(graph_and_function(max_vertices=7, max_k=5))
def test_transforms_random(gkf):
    g, k, vals = gkf
    f = repair(g, vals, k, random.Random(sum(vals)))
    nf = normalize_strong(g, f)
    assert validate(g, nf, S) and nf.is_gap_free() and nf.weight <= f.weight
    ls = lift_strong(g, nf)
    assert validate(g, ls, S) and ls.weight == nf.weight + sum(1 for x in nf.values if x)
    lr = lift_roman(g, f)
    r = k // 2
    assert validate(g, lr, R)
    assert lr.weight == f.weight + sum(1 for x in f.values if x <= r) + len(g.isolated())


def test_gadget_shapes():
    g = build_gadget(GadgetParams(3, 2))
    assert g.n == 21 and g.num_edges() == 36
    assert build_gadget(GadgetParams(4, 2)).n == 32
    with pytest.raises(ValueError):
        GadgetParams(2, 2)
    with pytest.raises(ValueError):
        build_gadget(GadgetParams(3, 9))


@pytest.mark.parametrize("k,value", [(1, 12), (2, 15)])
def test_gadget_report(k, value):
    rep = gadget_lower_bound_check(GadgetParams(3, 2), k)
    assert rep["gamma_p"] == value
    assert rep["structural_bound_holds"]
    assert rep["target"] == "1"
    assert rep["ratio_vs_target"] < 1  # desk scale is far from the asymptotic regime


def test_suite_k22():
    rep = check_inequality_suite(complete_bipartite(2, 2)[0], 3, "K22")
    assert rep.ok
    rec = {(r.check, r.k): r for r in rep.records}
    lift = rec[("strong_next_le_lift", 2)]
    assert (lift.lhs, lift.rhs) == (4, 5)
    assert rec[("strong_lift_le_double", 2)].rhs == 6


def test_suite_component_bound_tight():
    g = disjoint_union([complete(3), complete(3)])
    rep = check_inequality_suite(g, 2, "2K3")
    assert rep.ok
    comp = [r for r in rep.records if r.check == "components_le_min" and r.k == 2][0]
    assert comp.lhs == comp.rhs == 4


def test_spanning_path_vs_cycle():
    assert solve_bnb(cycle(5), 2, R).value <= solve_bnb(path(5), 2, R).value


def test_suite_marks_budget_partial():
    from romank.solvers import Budget
    rep = check_inequality_suite(path(12), 3, "P12", method="bnb", budget=Budget(nodes=5))
    assert rep.partial and not rep.ok
