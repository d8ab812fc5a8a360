"""Path ideals of trees.

Trees are passed as edge-list text ("u v" per line, '#' comments allowed).
Use family("Lnk:5,3") or random_tree(n, seed) to build one.
"""

import json

from . import _core
from ._core import PathIdealError, family, random_tree, run_cli, trim

__all__ = [
    "PathIdealError",
    "betti",
    "classify",
    "error_code",
    "family",
    "generators",
    "linear_quotients_order",
    "random_tree",
    "regularity",
    "run_cli",
    "trim",
]


def error_code(exc):
    """Error code name carried in a PathIdealError message."""
    return str(exc).split(":", 1)[0]


def generators(edges, n):
    """Minimal generators of J_n as lists of vertex labels."""
    return json.loads(_core.generators(edges, n))


def betti(edges, n, hom_cap=12):
    """Graded Betti numbers as {(i, j): count} plus the regularity."""
    doc = json.loads(_core.betti(edges, n, hom_cap))
    table = {tuple(int(x) for x in key.split(",")): v for key, v in doc["betti"].items()}
    return table, doc["regularity"]


def regularity(edges, n, hom_cap=12):
    return betti(edges, n, hom_cap)[1]


def linear_quotients_order(edges, n, cap=22):
    """An order with linear quotients, or None."""
    return json.loads(_core.linear_quotients_order(edges, n, cap))


def classify(edges, n, legacy_n23=False):
    """Classification document (same fields as `pathideal classify --json`)."""
    return json.loads(_core.classify(edges, n, legacy_n23))
