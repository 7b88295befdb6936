"""Exact cohomology of current Lie algebras g ⊗ S.

Rationals cross the boundary as canonical strings ("3", "-1/2"); algebra
and report documents are returned as parsed JSON.
"""

import json

from . import _curlie
from ._curlie import Error, HypothesisFailed, ParseError, ValidationError, image, kernel, rank, run_cli

__all__ = [
    "Error",
    "HypothesisFailed",
    "ParseError",
    "ValidationError",
    "cohomology",
    "current_algebra",
    "export_assoc",
    "export_lie",
    "export_representation",
    "image",
    "kernel",
    "rank",
    "run_cli",
    "validate_lie",
    "verify",
]


def export_lie(g):
    return json.loads(_curlie.export_lie(g))


def export_assoc(s):
    return json.loads(_curlie.export_assoc(s))


def export_representation(g, rep):
    return json.loads(_curlie.export_representation(g, rep))


def current_algebra(g, s):
    return json.loads(_curlie.current_algebra(g, s))


def validate_lie(document):
    """List of (kind, indices) violations for a Lie algebra document."""
    if not isinstance(document, str):
        document = json.dumps(document)
    return _curlie.validate_lie_json(document)


def cohomology(g, rep, s=None, max_degree=None):
    return json.loads(_curlie.cohomology_table(g, rep, s, max_degree))


def verify(g, s, rep, suite="all", seed=42, trials=None):
    """Returns (exit_status, report) for one verification suite."""
    status, report = _curlie.verify(g, s, rep, suite, seed, trials)
    return status, json.loads(report)
