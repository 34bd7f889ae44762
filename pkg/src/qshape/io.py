"""JSON schemas for categories, representations, morphisms, and reports.

The wire format is bit-exact: matrices are {"rows", "cols", "entries"}
with row-major entries, written as strings for Z and Q (arbitrary
precision, "p/q" form for rationals) and as plain integers for mod-m
rings.  Vertices serialize as "q" (double) or "q@i" (repetitive);
arrows as "a{q}" / "a{q}*" and "a{q}@{i}" / "a{q}*@{i}".
"""

from __future__ import annotations

import json

from .errors import InvalidParameter
from .exactalg import BaseRing, Matrix, PresentedModule
from .meshcat import MeshCategory
from .quiver import (build_double_an, build_repetitive_an, format_vertex,
                     parse_vertex)
from .repmod import Representation, RepMorphism


class SchemaError(InvalidParameter):
    """Bad input with a JSON-pointer-ish path to the offending field."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


def parse_category(data, path="") -> MeshCategory:
    if not isinstance(data, dict):
        raise SchemaError(path or "/", "category spec must be an object")
    try:
        ring = BaseRing.from_json(data.get("ring", "Z"))
    except InvalidParameter as exc:
        raise SchemaError(path + "/ring", str(exc)) from None
    flavor = data.get("flavor")
    n = data.get("n")
    if not isinstance(n, int):
        raise SchemaError(path + "/n", "n must be an integer")
    if flavor == "double_an":
        try:
            return MeshCategory(build_double_an(n), ring)
        except InvalidParameter as exc:
            raise SchemaError(path + "/n", str(exc)) from None
    if flavor == "repetitive_an":
        window = data.get("window")
        if (not isinstance(window, (list, tuple)) or len(window) != 2
                or not all(isinstance(x, int) for x in window)):
            raise SchemaError(path + "/window", "window must be [i_min, i_max]")
        try:
            return MeshCategory(build_repetitive_an(n, tuple(window)), ring)
        except InvalidParameter as exc:
            raise SchemaError(path + "/window", str(exc)) from None
    raise SchemaError(path + "/flavor",
                      "flavor must be double_an or repetitive_an")


def _parse_matrix(ring, data, path) -> Matrix:
    try:
        return Matrix.from_json(ring, data)
    except InvalidParameter as exc:
        raise SchemaError(path, str(exc)) from None


def parse_value(ring, data, path) -> PresentedModule:
    if not isinstance(data, dict) or "rank" not in data:
        raise SchemaError(path, "value must be an object with a rank")
    rank = data["rank"]
    if not isinstance(rank, int) or rank < 0:
        raise SchemaError(path + "/rank", "rank must be a nonnegative integer")
    relations = None
    if "relations" in data:
        relations = _parse_matrix(ring, data["relations"], path + "/relations")
        if relations.rows != rank:
            raise SchemaError(path + "/relations",
                              f"relations must have {rank} rows")
    return PresentedModule(ring, rank, relations)


def parse_representation(data, path="", category=None) -> Representation:
    if not isinstance(data, dict):
        raise SchemaError(path or "/", "representation must be an object")
    if category is None:
        category = parse_category(data.get("category"), path + "/category")
    ring = category.ring
    values = {}
    for key, val in (data.get("values") or {}).items():
        try:
            v = parse_vertex(key)
        except ValueError:
            raise SchemaError(f"{path}/values/{key}", "bad vertex id") from None
        if not category.quiver.has_vertex(v):
            raise SchemaError(f"{path}/values/{key}", "vertex outside the quiver")
        values[v] = parse_value(ring, val, f"{path}/values/{key}")
    arrows = {}
    for key, val in (data.get("arrows") or {}).items():
        try:
            arrow = category.quiver.arrow(key)
        except KeyError:
            raise SchemaError(f"{path}/arrows/{key}", "unknown arrow") from None
        M = _parse_matrix(ring, val, f"{path}/arrows/{key}")
        tgt = values.get(arrow.target)
        src = values.get(arrow.source)
        trows = tgt.generators if tgt else 0
        tcols = src.generators if src else 0
        if M.rows != trows or M.cols != tcols:
            raise SchemaError(f"{path}/arrows/{key}",
                              f"expected a {trows}x{tcols} matrix")
        arrows[key] = M
    return Representation(category, values, arrows)


def parse_morphism(data, path="") -> RepMorphism:
    if not isinstance(data, dict):
        raise SchemaError(path or "/", "morphism must be an object")
    category = parse_category(data.get("category"), path + "/category")
    X = parse_representation(data.get("source"), path + "/source", category)
    Y = parse_representation(data.get("target"), path + "/target", category)
    comps = {}
    for key, val in (data.get("components") or {}).items():
        try:
            v = parse_vertex(key)
        except ValueError:
            raise SchemaError(f"{path}/components/{key}", "bad vertex id") from None
        M = _parse_matrix(category.ring, val, f"{path}/components/{key}")
        rows = Y.value(v).generators
        cols = X.value(v).generators
        if M.rows != rows or M.cols != cols:
            raise SchemaError(f"{path}/components/{key}",
                              f"expected a {rows}x{cols} matrix")
        comps[v] = M
    return RepMorphism(X, Y, comps)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def value_json(module: PresentedModule):
    out = {"rank": module.generators}
    if module.relations.cols:
        out["relations"] = module.relations.to_json()
    return out


def representation_json(X: Representation):
    return {
        "category": X.category.quiver.spec_json() | {"ring": X.ring.to_json()},
        "values": {format_vertex(v): value_json(m)
                   for v, m in sorted(X.values.items(), key=lambda kv: format_vertex(kv[0]))},
        "arrows": {name: M.to_json()
                   for name, M in sorted(X.arrow_maps.items())
                   if M.rows and M.cols},
    }


def morphism_json(phi: RepMorphism):
    return {
        "category": phi.source.category.quiver.spec_json()
                    | {"ring": phi.source.ring.to_json()},
        "source": {k: v for k, v in representation_json(phi.source).items()
                   if k != "category"},
        "target": {k: v for k, v in representation_json(phi.target).items()
                   if k != "category"},
        "components": {format_vertex(v): M.to_json()
                       for v, M in sorted(phi.components.items(),
                                          key=lambda kv: format_vertex(kv[0]))},
    }


def category_bundle(C: MeshCategory):
    """Bases, graded dimensions, multiplication tables, and Serre data."""
    verts = [format_vertex(v) for v in C.vertices]
    bases = {}
    for p in C.vertices:
        for q in C.vertices:
            basis = C.hom_basis(p, q)
            if basis:
                bases[f"{format_vertex(p)}->{format_vertex(q)}"] = \
                    [b.degree for b in basis]
    mult = {}
    for a in C.quiver.arrows:
        for p in C.vertices:
            M = C.arrow_left_mult(a, p)
            if M.rows and M.cols:
                mult[f"{a.name}|{format_vertex(p)}"] = M.to_json()
    serre = C.serre_report()
    serre.pop("checked_squares", None)
    serre.pop("checked_pairings", None)
    return {
        "category": C.quiver.spec_json() | {"ring": C.ring.to_json()},
        "vertices": verts,
        "hom_bases": bases,
        "nilpotency_index": C.nilpotency_index(),
        "left_multiplication": mult,
        "serre": serre,
    }


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2)
