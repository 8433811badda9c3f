"""JSON documents read and written by the command-line tool.

Input documents describe what to build, using exactly one of these forms:

``{"elements": [...], "covers": [...], "value_elements": [...], ...}``
    a full poset problem: ``covers`` and ``value_covers`` are cover pairs
    of ``X`` and ``Y``, ``chains`` lists the allowed values of each element
    (aligned with ``elements``, increasing), ``strict_pairs`` are the pairs
    forced to increase strictly, and ``ambient`` (optional, aligned with
    ``elements``) fixes the relation ``E``;
``{"shape": [2, 1], "flags": [2, 3]}``
    a Young shape with a flagging, or ``"max": n`` for a uniform bound;
    ``"inner_shape"`` makes it skew;
``{"permutation": [2, 1]}``
    a vexillary permutation in one-line notation;
``{"points": [...], "facets": [[...], ...]}``
    an explicit facet list (aligned with ``points``), optional ``ambient``;
``{"vertices": [...], "facets": [[...], ...]}``
    an abstract simplicial complex.

Any form may carry ``"options"``.  Lists used as labels become tuples, so
``[1, 2]`` names the box ``(1, 2)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import jsonschema

from .complexes import Face, TableauComplex, build_complex, complex_from_problem
from .errors import ValidationError
from .labels import freeze, label_key, label_str, thaw
from .poset import DEFAULT_MAX_TABLEAUX, PosetTableauProblem, build_poset
from .structure import AbstractComplex
from .young import Partition, SkewShape, shape_to_problem
from .vexillary import shape_and_flagging_of

__all__ = [
    "PROBLEM_SCHEMA",
    "RESULT_SCHEMA",
    "Request",
    "parse_document",
    "load_document",
    "face_to_json",
    "result_document",
    "dumps",
]

_pairs = {
    "type": "array",
    "items": {"type": "array", "minItems": 2, "maxItems": 2},
}
_positive_ints = {"type": "array", "items": {"type": "integer", "minimum": 1}}
_options = {
    "type": "object",
    "properties": {
        "max_faces": {"type": "integer", "minimum": 1},
        "max_tableaux": {"type": "integer", "minimum": 1},
        "method": {"type": "string"},
        "specialize": {"type": "string"},
        "epsilon": {"type": "array"},
        "assume_shellable": {"type": "boolean"},
    },
}

PROBLEM_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {"options": _options},
    "oneOf": [
        {
            "required": ["elements", "value_elements", "chains"],
            "properties": {
                "elements": {"type": "array", "minItems": 1},
                "covers": _pairs,
                "value_elements": {"type": "array", "minItems": 1},
                "value_covers": _pairs,
                "chains": {"type": "array", "items": {"type": "array"}},
                "strict_pairs": _pairs,
                "ambient": {"type": "array", "items": {"type": "array"}},
            },
            "not": {"anyOf": [{"required": k} for k in (["shape"], ["permutation"], ["facets"])]},
        },
        {
            "required": ["shape"],
            "properties": {
                "shape": {**_positive_ints, "minItems": 1},
                "inner_shape": _positive_ints,
                "flags": {**_positive_ints, "minItems": 1},
                "max": {"type": "integer", "minimum": 1},
            },
            "oneOf": [{"required": ["flags"]}, {"required": ["max"]}],
            "not": {"anyOf": [{"required": k} for k in (["elements"], ["permutation"], ["facets"])]},
        },
        {
            "required": ["permutation"],
            "properties": {"permutation": {**_positive_ints, "minItems": 1}},
            "not": {"anyOf": [{"required": k} for k in (["elements"], ["shape"], ["facets"])]},
        },
        {
            "required": ["points", "facets"],
            "properties": {
                "points": {"type": "array", "minItems": 1},
                "facets": {"type": "array", "minItems": 1, "items": {"type": "array"}},
                "ambient": {"type": "array", "items": {"type": "array"}},
            },
            "not": {"anyOf": [{"required": k} for k in (["elements"], ["shape"], ["permutation"], ["vertices"])]},
        },
        {
            "required": ["vertices", "facets"],
            "properties": {
                "vertices": {"type": "array"},
                "facets": {"type": "array", "minItems": 1, "items": {"type": "array"}},
            },
            "not": {"anyOf": [{"required": k} for k in (["elements"], ["shape"], ["permutation"], ["points"])]},
        },
    ],
}

_polynomial = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["coefficient", "monomial"],
        "properties": {"coefficient": {"type": "integer"}, "monomial": {"type": "string"}},
        "additionalProperties": False,
    },
}

RESULT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "request", "result", "versions"],
    "properties": {
        "command": {
            "enum": ["tableaux", "complex", "faces", "decompose", "kpoly", "groth", "recognize", "render"]
        },
        "request": {"type": "object"},
        "result": {
            "type": "object",
            "properties": {
                "polynomial": _polynomial,
                "h_vector": {"type": "array", "items": {"type": "integer"}},
                "f_vector": {"type": "array", "items": {"type": "integer"}},
            },
        },
        "versions": {"type": "object", "additionalProperties": {"type": "string"}},
        "timing": {"type": "object", "additionalProperties": {"type": "number"}},
    },
    "additionalProperties": False,
}


@dataclass
class Request:
    """A parsed input document."""

    kind: str  # problem | shape | permutation | facets | abstract
    document: dict
    problem: PosetTableauProblem | None = None
    shape: Partition | SkewShape | None = None
    flags: tuple | None = None
    permutation: tuple | None = None
    facets: list | None = None
    points: tuple | None = None
    ambient: list | None = None
    abstract: AbstractComplex | None = None
    options: dict = field(default_factory=dict)

    def tableau_complex(self, max_tableaux: int = DEFAULT_MAX_TABLEAUX) -> TableauComplex:
        if self.kind == "facets":
            return build_complex(self.facets, self.ambient, points=self.points)
        if self.problem is None:
            raise ValidationError(f"a {self.kind} document does not describe a tableau complex")
        return complex_from_problem(self.problem, max_tableaux)


def _aligned(rows, points, what: str) -> dict:
    if len(rows) != len(points):
        raise ValidationError(f"{what} must list one entry per element ({len(points)}), got {len(rows)}")
    return {x: tuple(freeze(v) for v in row) for x, row in zip(points, rows)}


def _parse_problem(doc: dict) -> PosetTableauProblem:
    points = [freeze(p) for p in doc["elements"]]
    values = [freeze(v) for v in doc["value_elements"]]
    X = build_poset(points, [tuple(freeze(p) for p in pair) for pair in doc.get("covers", [])])
    Y = build_poset(values, [tuple(freeze(v) for v in pair) for pair in doc.get("value_covers", [])])
    chains = _aligned(doc["chains"], points, "chains")
    strict = tuple(tuple(freeze(p) for p in pair) for pair in doc.get("strict_pairs", []))
    ambient = None
    if "ambient" in doc:
        ambient = {x: frozenset(vs) for x, vs in _aligned(doc["ambient"], points, "ambient").items()}
    return PosetTableauProblem(X, Y, chains, strict, ambient)


def parse_document(doc: Any) -> Request:
    """Validate a document against :data:`PROBLEM_SCHEMA` and build its objects."""
    try:
        jsonschema.validate(doc, PROBLEM_SCHEMA)
    except jsonschema.ValidationError as err:
        raise ValidationError(f"invalid document: {err.message}") from None
    options = dict(doc.get("options", {}))
    if "elements" in doc:
        return Request("problem", doc, problem=_parse_problem(doc), options=options)
    if "shape" in doc:
        outer = Partition(tuple(doc["shape"]))
        shape = SkewShape(outer, Partition(tuple(doc["inner_shape"]))) if doc.get("inner_shape") else outer
        bound = doc["flags"] if "flags" in doc else doc["max"]
        problem = shape_to_problem(shape, bound)
        flags = tuple(bound) if isinstance(bound, list) else (bound,) * shape.rows
        return Request("shape", doc, problem=problem, shape=shape, flags=flags, options=options)
    if "permutation" in doc:
        perm = tuple(doc["permutation"])
        shape, flags = shape_and_flagging_of(perm)
        problem = shape_to_problem(shape, flags) if shape.size else None
        return Request(
            "permutation", doc, problem=problem, shape=shape, flags=flags, permutation=perm, options=options
        )
    if "points" in doc:
        points = tuple(freeze(p) for p in doc["points"])
        facets = [tuple(freeze(v) for v in f) for f in doc["facets"]]
        ambient = None
        if "ambient" in doc:
            ambient = [frozenset(freeze(v) for v in vs) for vs in doc["ambient"]]
        return Request("facets", doc, points=points, facets=facets, ambient=ambient, options=options)
    abstract = AbstractComplex(
        tuple(freeze(v) for v in doc["vertices"]),
        tuple(frozenset(freeze(v) for v in f) for f in doc["facets"]),
    )
    return Request("abstract", doc, abstract=abstract, options=options)


def load_document(text: str) -> Request:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ValidationError(f"input is not valid JSON: {err}") from None
    return parse_document(doc)


def face_to_json(cx: TableauComplex, F: Face) -> dict:
    """A face as ``{"point": [values...]}`` with values in canonical order.

    Tuple points are keyed by their text form, e.g. ``"(1,2)"``.
    """
    return {label_str(x): [thaw(y) for y in cx.sorted_values(s)] for x, s in zip(cx.points, F)}


def _canonical(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canonical(v) for v in obj]
    if isinstance(obj, (frozenset, set)):
        return [_canonical(v) for v in sorted(obj, key=label_key)]
    return obj


def result_document(command: str, request: Request, result: dict, timing: dict | None = None) -> dict:
    from . import __version__

    doc = {
        "command": command,
        "request": _canonical(request.document),
        "result": _canonical(result),
        "versions": {"tabcomplex": __version__, "schema": "1"},
    }
    if timing is not None:
        doc["timing"] = timing
    jsonschema.validate(doc, RESULT_SCHEMA)
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
