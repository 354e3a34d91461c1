"""Frobenius pushforward matrices, matrix factorizations and F-signatures over F_p."""

import json
from fractions import Fraction

from . import _core
from ._core import ResourceLimitError, eta, fedder_membership, free_rank_z2, parse_poly, verify_presentation

__all__ = [
    "ResourceLimitError",
    "decomposition_report",
    "empirical_sequence",
    "eta",
    "fedder_membership",
    "free_rank_uv",
    "free_rank_uv_report",
    "free_rank_z2",
    "fsignature",
    "matrix_of_relations",
    "parse_poly",
    "run_cli",
    "sum_powers",
    "verify_presentation",
    "w_values",
]


def matrix_of_relations(f, p, e=1, n=None, power=1, max_size=1_000_000):
    """M(f^power, e) as {"rows", "cols", "entries": [[i, j, poly], ...]}."""
    return json.loads(_core.matrix_json(f, p, e, n, power, max_size))


def free_rank_uv_report(f, p, e=1, n=None):
    return json.loads(_core.free_rank_uv_json(f, p, e, n))


def free_rank_uv(f, p, e=1, n=None):
    return free_rank_uv_report(f, p, e, n)["free_rank_total"]


def fsignature(dvec, target="uv"):
    return Fraction(_core.fsignature_closed(list(dvec), target))


def empirical_sequence(f, p, emax, target="uv", n=None):
    rep = json.loads(_core.empirical_json(f, p, emax, target, n))
    for row in rep["empirical"]:
        row["s"] = Fraction(row["s"])
        if "gap" in row:
            row["gap"] = Fraction(row["gap"])
    if "closed_form" in rep:
        rep["closed_form"] = Fraction(rep["closed_form"])
    return rep


def decomposition_report(dvec, p, e=1):
    return json.loads(_core.decomposition_json(list(dvec), p, e))


def w_values(dvec):
    return [int(w) for w in _core.w_values(list(dvec))]


def sum_powers(delta, s):
    return int(_core.sum_powers(delta, s))


def run_cli(*args):
    """(exit code, stdout, stderr) of one CLI command."""
    return _core.run_cli([str(a) for a in args])
