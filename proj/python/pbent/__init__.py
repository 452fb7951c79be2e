"""Exact analysis and construction of vectorial p-ary bent and plateaued functions."""

import json as _json

from . import _core
from ._core import PbentError, __version__, dual, has_pu, is_bent, walsh

__all__ = [
    "PbentError",
    "__version__",
    "build",
    "classify",
    "dual",
    "has_pu",
    "is_bent",
    "negative",
    "reproduce_example",
    "search_pu",
    "walsh",
]


def _manifest(recipe):
    return recipe if isinstance(recipe, str) else _json.dumps(recipe)


def classify(values, p, n, m=1):
    """Classify F: Z_p^n -> Z_p^m given as a table of codomain indices."""
    return _json.loads(_core.classify_json(list(values), p, n, m))


def build(recipe, verify=True):
    """Build from a manifest (dict or JSON text); returns {"values", "report"}."""
    return _json.loads(_core.build_json(_manifest(recipe), verify))


def search_pu(recipe, t, limit=10):
    """Admissible t-element U for the G part of a manifest, as pair-space indices."""
    return _json.loads(_core.search_pu_json(_manifest(recipe), t, limit))


def negative(kind, p, m):
    """Run the empty-admissible-set check for x^2 ("square") or x^(p^m+1) ("kasami")."""
    return _json.loads(_core.negative_json(kind, p, m))


def reproduce_example(reading="consistent"):
    """Classification report of the worked GF(3^8) example."""
    return _json.loads(_core.reproduce_example_json(reading))
