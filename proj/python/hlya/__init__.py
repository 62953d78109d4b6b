"""Exact arithmetic toolkit for algebras carrying a twisted binary and ternary
bracket.

Operations take algebra document paths (or ``fixture:<name>``) and return
``(exit_code, certificate_json)``; ``certificate`` parses the JSON for you.
"""

import json as _json

from ._core import (
    ConstructionError,
    Error,
    InconclusiveError,
    MathError,
    ParseError,
    check,
    corpus,
    decompose,
    direct_sum,
    factor_set,
    fixture_names,
    isoclinic_search,
    isoclinic_verify,
    quotient,
    version,
)

__all__ = [
    "Error",
    "ParseError",
    "MathError",
    "ConstructionError",
    "InconclusiveError",
    "certificate",
    "check",
    "corpus",
    "decompose",
    "direct_sum",
    "factor_set",
    "fixture_names",
    "isoclinic_search",
    "isoclinic_verify",
    "quotient",
    "version",
]


def certificate(result):
    """Parse the certificate half of an operation's (exit_code, json) result."""
    _, text = result
    return _json.loads(text)
