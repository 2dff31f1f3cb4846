import pathlib

import pytest

import rbmg

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

P4 = "p cgraph 4 2\nv a A\nv b B\nv c A\nv d B\ne a b\ne b c\ne c d\n"


def test_graph_round_trip():
    g = rbmg.Graph.parse(P4)
    assert (g.vertex_count, g.edge_count, g.color_count) == (4, 3, 2)
    assert g.edges == [(0, 1), (1, 2), (2, 3)]
    assert rbmg.Graph.parse(g.to_text()) == g
    assert g.vertex_name(3) == "d"


def test_graph_from_lists():
    g = rbmg.Graph([1, 0, 1], [(1, 0), (1, 2)])
    assert g.colors == [0, 1, 0]
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)
    assert g.is_properly_colored()
    with pytest.raises(ValueError):
        rbmg.Graph([5, 7, 5], [])


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        rbmg.Graph.parse("p cgraph 2 1\nv a A\n")


def test_recognize_and_certificate():
    g = rbmg.Graph.parse(P4)
    report = rbmg.recognize(g, "bicluster")
    assert not report.verdict
    assert report.graph_class == "bicluster"
    assert "induced-p4" in rbmg.certificate_text(g, report)
    assert rbmg.verify_certificate(g, report)
    assert rbmg.recognize(g, "cograph").verdict is False
    with pytest.raises(ValueError):
        rbmg.recognize(g, "nope")


def test_tree_to_graph_matches_file():
    text = (DATA / "two_clusters.tree").read_text().splitlines()[-1]
    tree = rbmg.Tree.parse(text)
    assert tree.leaf_count == 5
    g = rbmg.tree_to_graph(tree)
    assert g == rbmg.Graph.parse((DATA / "two_clusters.cg").read_text())
    assert rbmg.recognize(g, "nrbmg")
    assert rbmg.tree_to_graph(tree, "orthology").vertex_count == 5


def test_solve_p4():
    g = rbmg.Graph.parse(P4)
    for mode in ("delete", "edit"):
        r = rbmg.solve(g, "bicluster", mode=mode)
        assert r.status == "solved"
        assert r.size == 1
        assert rbmg.recognize(r.apply(g), "bicluster").verdict
    r = rbmg.solve(g, "bicluster", mode="complete")
    assert r.status == "solved" and r.witness == [(0, 3)]


def test_solve_infeasible_and_budget():
    edgeless = rbmg.Graph([0, 1, 0, 1], [])
    assert rbmg.solve(edgeless, "2rbmg", mode="delete").status == "infeasible"
    assert rbmg.solve(edgeless, "2rbmg", mode="edit").size == 1
    r = rbmg.solve(rbmg.Graph.parse(P4), "bicluster", k_max=0)
    assert r.status == "budget-exhausted" and r.size is None


def test_generators_are_deterministic():
    t = rbmg.random_tree(8, 3, seed=11)
    assert t.to_newick() == rbmg.random_tree(8, 3, seed=11).to_newick()
    assert t.color_count == 3
    g = rbmg.random_graph(9, 2, seed=5, edge_probability=0.4)
    assert g == rbmg.random_graph(9, 2, seed=5, edge_probability=0.4)
    planted = rbmg.tree_to_graph(rbmg.random_tree(12, 2, seed=3))
    noisy = rbmg.perturb(planted, 2, seed=4)
    assert rbmg.solve(noisy, "2rbmg").size <= 2
