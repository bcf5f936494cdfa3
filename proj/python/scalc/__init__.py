"""Python bindings for the scalc verifier."""

import json

from ._scalc import ScalcError, check_law, export_smt, fnv1a64, list_laws, run, splitmix64
from ._scalc import verify_json as _verify_json

__all__ = [
    "ScalcError",
    "check_law",
    "export_smt",
    "fnv1a64",
    "list_laws",
    "run",
    "splitmix64",
    "verify",
]


def verify(text, mode=None):
    """Verify the spec file contents in `text` and return the report as a dict."""
    return json.loads(_verify_json(text, mode))
