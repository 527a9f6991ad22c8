import json
from fractions import Fraction

import pytest

import paretoapx as pa


def test_pareto_filter_and_cover():
    P = [(1, 4), (2, 3), (3, 1), (3, 3), (2, 3)]
    front = pa.pareto_filter(P)
    assert front == [(1, 4), (2, 3), (3, 1)]
    assert all(isinstance(c, Fraction) for p in front for c in p)
    assert pa.is_eps_pareto(front, P, 0)
    assert not pa.is_eps_pareto([(3, 1)], P, Fraction(1, 2))


def test_two_approx_against_opt():
    for seed in range(1, 20):
        P = pa.random_points(10, 2, seed, 4)
        eps = Fraction(1, 2)
        opt = pa.opt_eps(P, eps)
        r = pa.two_approx(P, eps)
        assert r["certified"]
        assert len(r["points"]) <= 2 * opt
        assert r["calls"] <= 4 * opt + 4
        assert len(pa.greedy_exact(P, eps)["points"]) == opt


def test_chain_graph():
    G = pa.chain_instance([1, 2, 3], Fraction(1, 2))
    paths = pa.enumerate_paths(G)
    assert len(paths) == 8
    assert all(x + y == 54 for x, y in paths)
    r = pa.bsp_two_approx(G, Fraction(1, 2))
    assert r["certified"] and len(r["points"]) <= 2


def test_multi_and_dual():
    P = pa.random_points(9, 3, 7, 4)
    m = pa.eps_prime_pareto(P, Fraction(1, 2), 1)
    assert m["certified"]
    d = pa.dual_k(P, 2)
    assert len(d["points"]) <= 2
    assert d["ratio"] >= 1


def test_cli_roundtrip(tmp_path):
    code, text, _ = pa.run_cli("gen", family="chain", A=[1, 2, 3], eps=Fraction(1, 2))
    assert code == 0
    path = tmp_path / "chain.graph"
    path.write_text(text)
    code, out, _ = pa.run_cli("pareto2", instance=str(path), eps="1/2")
    assert code == 0
    rep = json.loads(out)
    assert rep["certificate"]["valid"]
    assert rep["bruteforce"]["opt_eps"] == 1


def test_errors(tmp_path):
    bad = tmp_path / "bad.pts"
    bad.write_text("1 2\n3 x\n")
    code, _, err = pa.run_cli("pareto2", instance=str(bad), eps="1/2")
    assert code == 3 and "line 2" in err
    with pytest.raises(ValueError):
        pa.two_approx([(1, 2), (2, 1)], Fraction(-1, 2))
