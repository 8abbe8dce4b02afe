"""Instance documents: ``{"name": ..., "vertices": [...], "edges": [[...], ...]}``."""

from __future__ import annotations

import json

from .core import Hypergraph, validate
from .errors import ValidationError


def to_document(H: Hypergraph) -> dict:
    return {
        "name": H.name,
        "vertices": list(H.vertices),
        "edges": [H.edge_labels(i) for i in range(H.m)],
    }


def dumps(H: Hypergraph) -> str:
    return json.dumps(to_document(H), indent=2) + "\n"


def parse_document(doc: str | dict) -> Hypergraph:
    """Parse and validate an instance document.

    Errors are :class:`ValidationError` with a message naming the JSON line or
    the offending field.
    """
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ValidationError("document must be a JSON object")
    for key in ("vertices", "edges"):
        if key not in doc:
            raise ValidationError(f"field {key!r} is missing")
        if not isinstance(doc[key], list):
            raise ValidationError(f"field {key!r} must be an array")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ValidationError("field 'name' must be a string")
    for i, v in enumerate(doc["vertices"]):
        if not isinstance(v, str):
            raise ValidationError(f"vertices[{i}]: labels must be strings, got {v!r}")
    for i, e in enumerate(doc["edges"]):
        if not isinstance(e, list) or not all(isinstance(x, str) for x in e):
            raise ValidationError(f"edges[{i}]: must be an array of vertex labels")
        if len(set(e)) != len(e):
            raise ValidationError(f"edges[{i}]: repeated label")
    return validate(doc["vertices"], doc["edges"], name)
