"""Canonical JSON interchange formats.

Complex files: ``{"facets": [[int, ...], ...], "vertices": [int, ...]}``
with every facet ascending and the facet list sorted; this is byte-stable
under read/write round trips.  Cochain files: ``{"edges": [[u, v], ...],
"values": [...]}`` aligned by index, edges sorted, covering every edge of
the complex they belong to.
"""

from __future__ import annotations

import json
from pathlib import Path

from .cochains import RING_Z, RING_Z2, Cochain1
from .complexes import SimplicialComplex, build_complex
from .errors import ParameterError


def _require_int_labels(X: SimplicialComplex):
    if any(not isinstance(v, int) or isinstance(v, bool) for v in X.vertices):
        raise ParameterError("serialization needs integer vertex labels")


def dumps_complex(X: SimplicialComplex) -> str:
    _require_int_labels(X)
    doc = {
        "facets": [list(f) for f in sorted(X.facets)],
        "vertices": list(X.vertices),
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def loads_complex(text: str) -> SimplicialComplex:
    doc = json.loads(text)
    if not isinstance(doc, dict) or "facets" not in doc:
        raise ParameterError("complex document needs a 'facets' field")
    X = build_complex([tuple(f) for f in doc["facets"]])
    declared = doc.get("vertices")
    if declared is not None:
        extra = set(declared) - set(X.vertices)
        if extra:
            raise ParameterError(
                f"declared vertices missing from every facet: {sorted(extra)!r}")
    return X


def write_complex(X: SimplicialComplex, path) -> None:
    Path(path).write_text(dumps_complex(X))


def read_complex(path) -> SimplicialComplex:
    return loads_complex(Path(path).read_text())


def dumps_cochain(c: Cochain1) -> str:
    _require_int_labels(c.complex)
    edges = sorted(c.complex.faces(1))
    doc = {
        "edges": [list(e) for e in edges],
        "values": [c.values.get(e, 0) for e in edges],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def loads_cochain(text: str, X: SimplicialComplex, ring: str = RING_Z2) -> Cochain1:
    doc = json.loads(text)
    if not isinstance(doc, dict) or "edges" not in doc or "values" not in doc:
        raise ParameterError("cochain document needs 'edges' and 'values' fields")
    edges = [tuple(e) for e in doc["edges"]]
    values = doc["values"]
    if len(edges) != len(values):
        raise ParameterError("'edges' and 'values' have different lengths")
    return Cochain1(X, dict(zip(edges, values)), ring)


def write_cochain(c: Cochain1, path) -> None:
    Path(path).write_text(dumps_cochain(c))


def read_cochain(path, X: SimplicialComplex, ring: str = RING_Z2) -> Cochain1:
    return loads_cochain(Path(path).read_text(), X, ring)
