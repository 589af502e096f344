"""JSON object forms shared by the CLI and the file formats.

Every representation serializes to an object with a "kind" discriminator:
asm, em, csm, mt or cem.  Integers travel as JSON numbers; counts and
rationals elsewhere in the CLI travel as strings to avoid any width
assumption.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .core import (
    AsmMatrix,
    ComplementaryEdgePair,
    CornerSumMatrix,
    EdgeMatrixPair,
    MonotoneTriangle,
)
from .errors import BadShape
from .polytope import PolytopePoint

KINDS = ("asm", "em", "csm", "mt", "cem")


def to_obj(value) -> dict:
    if isinstance(value, AsmMatrix):
        return {
            "kind": "asm",
            "n": value.n,
            "r": value.r,
            "entries": value.to_lists(),
        }
    if isinstance(value, EdgeMatrixPair):
        return {
            "kind": "em",
            "n": value.n,
            "r": value.r,
            "H": [list(row) for row in value.H],
            "V": [list(row) for row in value.V],
        }
    if isinstance(value, CornerSumMatrix):
        return {
            "kind": "csm",
            "n": value.n,
            "r": value.r,
            "C": [list(row) for row in value.C],
        }
    if isinstance(value, MonotoneTriangle):
        return {
            "kind": "mt",
            "n": value.n,
            "r": value.r,
            "rows": [list(row) for row in value.rows],
        }
    if isinstance(value, ComplementaryEdgePair):
        return {
            "kind": "cem",
            "n": value.n,
            "r": value.r,
            "Hbar": [list(row) for row in value.Hbar],
            "Vbar": [list(row) for row in value.Vbar],
        }
    raise BadShape(f"cannot serialize {type(value).__name__}")


def from_obj(obj: dict):
    try:
        kind = obj["kind"]
        n = obj["n"]
        r = obj["r"]
    except (KeyError, TypeError) as exc:
        raise BadShape("object needs 'kind', 'n' and 'r' fields") from exc
    if kind == "asm":
        return AsmMatrix(n, r, obj["entries"])
    if kind == "em":
        return EdgeMatrixPair(n, r, obj["H"], obj["V"])
    if kind == "csm":
        return CornerSumMatrix(n, r, obj["C"])
    if kind == "mt":
        return MonotoneTriangle(n, r, obj["rows"])
    if kind == "cem":
        return ComplementaryEdgePair(n, r, obj["Hbar"], obj["Vbar"])
    raise BadShape(f"unknown kind {kind!r}, expected one of {KINDS}")


def dumps(value) -> str:
    return json.dumps(to_obj(value), separators=(",", ":"))


def loads(text: str):
    return from_obj(json.loads(text))


def point_from_obj(obj: dict) -> PolytopePoint:
    """Parse {"n": ..., "entries": [["3/10", "0.1", ...], ...]}.

    Entries may be "p/q" strings, exact decimal strings, or numbers with
    an exact rational meaning (integers).
    """
    try:
        n = obj["n"]
        raw = obj["entries"]
    except (KeyError, TypeError) as exc:
        raise BadShape("point object needs 'n' and 'entries'") from exc
    entries = [[Fraction(str(x)) for x in row] for row in raw]
    return PolytopePoint(n, entries)


def fraction_str(x: Fraction) -> str:
    return str(Fraction(x))


def decomposition_to_obj(dec) -> dict:
    return {
        "terms": [
            {"lambda": fraction_str(lam), "asm": a.to_lists()}
            for lam, a in dec.terms
        ]
    }
