import math

import pytest

from randic_incidence import bounds
from randic_incidence.bounds import PreconditionError
from randic_incidence.energy import i_re
from randic_incidence.formats import parse_graph6
from randic_incidence.graph import (
    Graph,
    disjoint_union,
    empty_graph,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_path,
    gen_petersen,
    gen_star,
    is_complete,
    is_complete_bipartite,
)
from randic_incidence.trees import enumerate_trees

S2 = math.sqrt(2)


def test_lower_bound_examples():
    r = bounds.check_lower_bound(gen_complete(2))
    assert r.lhs == pytest.approx(S2) and r.rhs == pytest.approx(S2) and r.tight and r.holds
    r = bounds.check_lower_bound(gen_complete(4))
    assert r.lhs == pytest.approx(3.8637, abs=1e-4) and r.rhs == 2 and r.holds and not r.tight
    r = bounds.check_lower_bound(gen_star(5))
    assert r.holds and not r.tight and r.consistent


def test_upper_bound_examples():
    for n in range(2, 9):
        r = bounds.check_upper_bound(gen_complete(n))
        assert r.tight and r.holds and r.in_equality_class
    r = bounds.check_upper_bound(gen_path(4))
    assert r.lhs == pytest.approx(3.3461, abs=1e-4) and r.rhs == pytest.approx(3.8637, abs=1e-4)
    assert r.holds and not r.tight


def test_preconditions():
    with pytest.raises(PreconditionError):
        bounds.check_lower_bound(Graph(3, ((0, 1),)))
    with pytest.raises(PreconditionError):
        bounds.check_lower_bound(empty_graph(0))
    with pytest.raises(PreconditionError):
        bounds.check_upper_bound(empty_graph(1))
    with pytest.raises(PreconditionError):
        bounds.check_monotonicity(gen_path(3), [])
    with pytest.raises(PreconditionError):
        bounds.check_monotonicity(gen_path(3), [(0, 2)])
    with pytest.raises(PreconditionError):
        bounds.check_clique_bound(empty_graph(2))
    with pytest.raises(PreconditionError):
        bounds.check_edge_deletion(disjoint_union(gen_path(2), gen_path(2)), (0, 1))
    with pytest.raises(PreconditionError):
        bounds.check_bipartite_bound(gen_cycle(5))
    with pytest.raises(PreconditionError):
        bounds.check_regular_line_identity(gen_path(4))


def test_monotonicity_examples():
    r = bounds.check_monotonicity(gen_complete(3), [(0, 1)])
    assert r.lhs == pytest.approx(2 * S2) and r.rhs == pytest.approx(1 + S2) and r.holds
    r = bounds.check_monotonicity(gen_complete(2), [(0, 1)])
    assert r.lhs == pytest.approx(S2) and r.rhs == 0 and r.holds
    r = bounds.check_monotonicity(gen_star(5), [(0, 4)])
    assert r.lhs == pytest.approx(3 + S2) and r.rhs == pytest.approx(2 + S2) and r.holds
    assert r.witness["frozen_holds"]


def test_monotonicity_counterexample():
    # recomputing degrees after deletion can raise the energy
    g = parse_graph6("EhMg")
    r = bounds.check_monotonicity(g, [(0, 1)])
    assert not r.holds
    assert r.lhs == pytest.approx(5.66744, abs=1e-5) and r.rhs == pytest.approx(5.66846, abs=1e-5)
    assert r.witness["frozen_holds"] and r.witness["frozen_rhs"] < r.lhs


def test_clique_bound():
    for n in range(2, 8):
        r = bounds.check_clique_bound(gen_complete(n))
        assert r.tight and r.witness["clique_number"] == n and r.in_equality_class is None
    r = bounds.check_clique_bound(gen_cycle(5))
    assert r.rhs == pytest.approx(S2) and r.lhs == pytest.approx(4.5765, abs=1e-4) and r.holds


def test_edge_deletion_examples():
    r = bounds.check_edge_deletion(gen_complete(2), (0, 1))
    assert r.lhs == pytest.approx(S2) and r.rhs == pytest.approx(S2) and r.tight and r.consistent
    r = bounds.check_edge_deletion(gen_complete(3), (1, 0))
    assert r.lhs == pytest.approx(2 * S2)
    assert r.rhs == pytest.approx(math.sqrt(1 + (1 + S2) ** 2))  # 2.613126
    assert r.holds and not r.tight
    assert r.witness["edge"] == (0, 1)


def test_edge_deletion_unit_degrees():
    # with d(u) = d(v) = 1 on K2 the right side is sqrt(2 + 0)
    assert bounds.edge_deletion_rhs(gen_complete(2), (0, 1), du=1, dv=1) == pytest.approx(S2)


def test_edge_deletion_counterexample():
    r = bounds.check_edge_deletion(gen_complete(4), (0, 1))
    assert not r.holds
    assert r.lhs == pytest.approx(3.863703, abs=1e-6) and r.rhs == pytest.approx(3.894610, abs=1e-6)
    assert r.witness["frozen_holds"]


def test_frozen_forms_always_hold():
    for n in range(2, 7):
        for t in list(enumerate_trees(n)) + [gen_complete(n)]:
            for e in t.edges:
                assert bounds.check_edge_deletion(t, e).witness["frozen_holds"]
                assert bounds.check_monotonicity(t, [e]).witness["frozen_holds"]


def test_bipartite_bound():
    for x in range(1, 11):
        for y in range(x, 11):
            r = bounds.check_bipartite_bound(gen_complete_bipartite(x, y))
            assert r.tight and r.holds
    r = bounds.check_bipartite_bound(gen_path(4))
    assert r.lhs == pytest.approx(3.3461, abs=1e-4) and r.rhs == pytest.approx(2 + S2) and not r.tight
    for n in range(2, 10):
        assert bounds.check_bipartite_bound(gen_star(n)).tight


def test_tightness_characterisation(connected_corpus):
    for g in connected_corpus:
        up = bounds.check_upper_bound(g)
        assert up.holds and up.tight == is_complete(g)
        low = bounds.check_lower_bound(g)
        assert low.holds and low.tight == (g.n == 2)
        if (bip := bounds.applicable_checks(g)[bounds.T4_1]) and not isinstance(bip, str):
            assert bip.holds and bip.tight == is_complete_bipartite(g)


@pytest.mark.parametrize("g", [gen_cycle(4), gen_cycle(7), gen_complete(5), gen_petersen(), gen_complete(2)])
def test_regular_line_identity(g):
    r = bounds.check_regular_line_identity(g)
    assert r.holds and abs(r.gap) < 1e-10
    assert bounds.line_graph_energy(gen_cycle(4)) == pytest.approx(2 + S2, abs=1e-12)


def test_applicable_checks():
    c5 = bounds.applicable_checks(gen_cycle(5))
    assert c5[bounds.T4_1] == "skipped(not bipartite)"
    assert bounds.REG_LINE in c5
    iso = bounds.applicable_checks(empty_graph(3))
    assert all(isinstance(v, str) for v in iso.values())
    p4 = bounds.applicable_checks(gen_path(4))
    assert p4[bounds.T3_4].witness["edge"] == (0, 1)
    assert set(bounds.ALL_THEOREMS) <= set(p4)
    assert bounds.REG_LINE not in p4
    row = p4[bounds.T2_1].to_row()
    assert set(row) == {"theorem", "lhs", "rhs", "holds", "tight"}


def test_report_gap_sign():
    r = bounds.check_bipartite_bound(gen_path(5))
    assert r.gap == pytest.approx(i_re(gen_path(5)) - (3 + S2))
