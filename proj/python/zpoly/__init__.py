"""Integer minimization of bivariate polynomials over rational polyhedra."""

import json

from . import _zpoly
from ._zpoly import SplitMix64, ZpolyError

__all__ = ["minimize", "regions", "oracle", "is_translatable", "problem_json", "SplitMix64", "ZpolyError"]


def problem_json(objective, constraints=(), mode="auto"):
    """objective: {(i, j): int}; constraints: [(a, b, c)] meaning a*x + b*y <= c."""
    return json.dumps({
        "objective": [{"i": i, "j": j, "c": str(c)} for (i, j), c in objective.items()],
        "constraints": [{"a": str(a), "b": str(b), "c": str(c)} for a, b, c in constraints],
        "mode": mode,
    })


def minimize(objective, constraints=(), mode="auto", box_radius=0, oracle=False):
    return json.loads(_zpoly.run(problem_json(objective, constraints, mode), box_radius=box_radius, oracle=oracle))


def regions(objective, constraints=(), mode="auto", box_radius=0, omega=""):
    return json.loads(_zpoly.regions(problem_json(objective, constraints, mode), box_radius=box_radius, omega=str(omega)))


def oracle(seed, count, box_radius=6):
    return [json.loads(line) for line in _zpoly.oracle(seed, count, box_radius).splitlines()]


def is_translatable(objective):
    return _zpoly.is_translatable(problem_json(objective))
