"""JSON documents for graphs, fan specs, composite specs and reports."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .fans import CompositeSpec, FanGraphSpec, FanSpecError
from .graph import GraphError, SimpleGraph

Input = Union[FanGraphSpec, CompositeSpec, SimpleGraph]


def graph_to_dict(g: SimpleGraph) -> dict[str, Any]:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.sorted_edges()]}


def graph_from_dict(doc: dict[str, Any]) -> SimpleGraph:
    try:
        vertices = doc["vertices"]
        edges = doc["edges"]
    except (KeyError, TypeError):
        raise GraphError("graph document needs 'vertices' and 'edges'") from None
    if not all(isinstance(v, int) for v in vertices):
        raise GraphError("vertex labels must be integers")
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphError(f"edge {e!r} is not a pair of integers")
    return SimpleGraph.strict(vertices, edges)


def parse_input(doc: dict[str, Any]) -> Input:
    """Tell a composite spec, a fan spec and a raw graph apart by their keys."""
    if not isinstance(doc, dict):
        raise FanSpecError("input document must be a JSON object")
    if "op" in doc:
        return CompositeSpec.from_dict(doc)
    if "n" in doc:
        return FanGraphSpec.from_dict(doc)
    if "edges" in doc:
        return graph_from_dict(doc)
    raise FanSpecError("unrecognised document: expected a fan spec, composite spec or graph")


def read_json(path: Union[str, Path]) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def load_input(path: Union[str, Path]) -> Input:
    return parse_input(read_json(path))


def dumps(doc: Any) -> str:
    """Canonical JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def write_json(path: Union[str, Path], doc: Any) -> None:
    Path(path).write_text(dumps(doc), encoding="utf-8")
