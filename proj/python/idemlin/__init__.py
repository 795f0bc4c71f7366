"""Linear systems over idempotent semirings and the polynomial key-exchange attack.

Indices in results are 0-based. Matrices are lists of rows; the
orientation argument says whether rows are unknowns ("xa") or equations ("ax").
"""

import json as _json

from . import _idemlin
from ._idemlin import FiniteSemiring, IdemlinError, IncompatibleSystem, ParseError, minimal_hitting_sets

__all__ = [
    "FiniteSemiring",
    "IdemlinError",
    "IncompatibleSystem",
    "ParseError",
    "attack",
    "finite_semiring",
    "minimal_hitting_sets",
    "simulate",
    "solve_finite",
    "solve_tropical",
    "validate_table",
]


def _spec(semiring):
    return _json.dumps(semiring)


def finite_semiring(spec="mmr6"):
    """A built-in name ("mmr6", "boolean") or a table dict."""
    return FiniteSemiring.from_json(_spec(spec))


def validate_table(table):
    return _json.loads(_idemlin.validate_table(_json.dumps(table)))


def solve_tropical(a, y, semiring="max-plus-int", orientation="xa"):
    return _json.loads(_idemlin.solve_tropical(semiring, _json.dumps({"A": a, "Y": y}), orientation))


def solve_finite(a, y, semiring="mmr6", orientation="xa", enumerate=False):
    return _json.loads(_idemlin.solve_finite(_spec(semiring), _json.dumps({"A": a, "Y": y}), orientation, enumerate))


def attack(instance, k=None):
    return _json.loads(_idemlin.attack(_json.dumps(instance), k))


def simulate(instance, seed, k=None):
    return _json.loads(_idemlin.simulate(_json.dumps(instance), seed, k))
