"""Plan sets that cover time/cost trade-offs, and diverse plan sets."""

import json
from fractions import Fraction

from . import _core
from ._core import ParseError, Problem, icp, pareto

__all__ = [
    "ParseError",
    "Problem",
    "distance",
    "evaluate",
    "generate",
    "hull",
    "icp",
    "load_problem",
    "pareto",
    "solve",
]


def load_problem(domain, problem, durations=""):
    return _core.load_problem(str(domain), str(problem), str(durations) if durations else "")


def hull(points):
    """Lower convex hull indices and the weight breakpoints as Fractions."""
    indices, breakpoints = _core.hull(points)
    return indices, [Fraction(b) for b in breakpoints]


def distance(problem, a, b, metric="action"):
    return Fraction(_core.distance(problem, list(a), list(b), metric))


def solve(problem, w=None, seed=1, noise=0.0):
    out = _core.solve(problem, w, seed, noise)
    return None if out is None else json.loads(out)


def generate(problem, method="hybrid", k=4, d="1/2", metric="action", dist="uniform", k0=3,
             timeout=600.0, seed=1, noise=0.0):
    return json.loads(_core.generate(problem, method, k, str(d), metric, dist, k0, timeout, seed, noise))


def evaluate(problem, plans, dist="uniform"):
    return json.loads(_core.evaluate(problem, [list(p) for p in plans], dist))
