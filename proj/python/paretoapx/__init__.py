"""Approximate Pareto sets with exact rational arithmetic.

Points are sequences of numbers accepted by ``fractions.Fraction``; results come
back as tuples of ``Fraction``.
"""

from fractions import Fraction

from . import _paretoapx as _core
from ._paretoapx import ContractViolation, GuardExceeded, ParseError, Unsupported

__all__ = [
    "ContractViolation",
    "GuardExceeded",
    "ParseError",
    "Unsupported",
    "Graph",
    "pareto_filter",
    "is_eps_pareto",
    "opt_eps",
    "two_approx",
    "greedy_exact",
    "eps_prime_pareto",
    "dual_k",
    "bsp_two_approx",
    "enumerate_paths",
    "chain_instance",
    "cluster_instance",
    "random_points",
    "run_cli",
]


def _s(v):
    f = Fraction(v)
    return f"{f.numerator}/{f.denominator}"


def _raw(points):
    return [[_s(c) for c in p] for p in points]


def _dim(points, dim=None):
    if dim is not None:
        return dim
    points = list(points)
    return len(points[0]) if points else 2


def _pts(raw):
    return [tuple(Fraction(c) for c in p) for p in raw]


def _result(d):
    d = dict(d)
    d["points"] = _pts(d["points"])
    return d


class Graph:
    """Directed graph with (cost, delay) edge weights."""

    def __init__(self, node_count, source, sink, edges):
        self.node_count = node_count
        self.source = source
        self.sink = sink
        self.edges = [(u, v, Fraction(c), Fraction(d)) for u, v, c, d in edges]

    def _args(self):
        return (self.node_count, self.source, self.sink,
                [(u, v, _s(c), _s(d)) for u, v, c, d in self.edges])


def pareto_filter(points, dim=None):
    points = list(points)
    return _pts(_core.pareto_filter(_raw(points), _dim(points, dim)))


def is_eps_pareto(Q, P, eps):
    Q, P = list(Q), list(P)
    return _core.is_eps_pareto(_raw(Q), _raw(P), _s(eps), _dim(P or Q))


def opt_eps(points, eps):
    points = list(points)
    return _core.opt_eps(_raw(points), _s(eps), _dim(points))


def two_approx(points, eps):
    return _result(_core.two_approx(_raw(points), _s(eps)))


def greedy_exact(points, eps):
    return _result(_core.greedy_exact(_raw(points), _s(eps)))


def eps_prime_pareto(points, eps, eps_prime):
    points = list(points)
    return _result(_core.eps_prime_pareto(_raw(points), _dim(points), _s(eps), _s(eps_prime)))


def dual_k(points, k):
    points = list(points)
    d = _result(_core.dual_k(_raw(points), _dim(points), k))
    d["ratio"] = Fraction(d["ratio"])
    return d


def bsp_two_approx(graph, eps, exact=False):
    return _result(_core.bsp_two_approx(*graph._args(), _s(eps), exact))


def enumerate_paths(graph):
    return _pts(_core.enumerate_paths(*graph._args()))


def chain_instance(A, eps, k=1):
    return Graph(*_core.chain_instance(list(A), _s(eps), k))


def cluster_instance(A, eps, k=2):
    return Graph(*_core.cluster_instance(list(A), _s(eps), k))


def random_points(n, d, seed, bits):
    return _pts(_core.random_points(n, d, seed, bits))


def run_cli(command, **opts):
    """Runs one CLI command in-process; returns (exit status, stdout text, stderr text)."""
    conv = {k: _s(v) if k in ("eps", "eps_prime", "delta") else v for k, v in opts.items()}
    return _core.run_cli(command, conv)
