"""Strict JSON input format for cover descriptions.

A document pins the group, the components with their lattice models, the
named curves with per-side classes, the declared points, the branch data per
component and the inertia element of every double curve.  Unknown keys are
rejected everywhere: a silently ignored typo in a group element would
corrupt every downstream number.

Group elements and characters serialize as integer arrays; rational numbers
as two-element [numerator, denominator] arrays.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from .covers import BranchDatum, BuildingData
from .groups import CyclicPair, FiniteAbelianGroup, GroupElement
from .gluing import GluingProblem, make_problem
from .surfaces import (
    BRANCH,
    DOUBLE,
    LATTICE,
    P1XP1,
    P2,
    CurveDecl,
    CurveSide,
    GdcSurface,
    PointDecl,
    QDivisorClass,
    SmoothSurfaceModel,
    lattice_surface,
    p1xp1,
    p2,
)

SCHEMA_VERSION = "1"


class SchemaError(ValueError):
    """Malformed or out-of-contract input document."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _require_keys(obj: Mapping[str, Any], path: str, required: set[str], optional: set[str] = frozenset()):
    if not isinstance(obj, dict):
        raise SchemaError(path, f"expected an object, got {type(obj).__name__}")
    missing = required - set(obj)
    if missing:
        raise SchemaError(path, f"missing keys {sorted(missing)}")
    unknown = set(obj) - required - optional
    if unknown:
        raise SchemaError(path, f"unknown keys {sorted(unknown)}")


def _int(value: Any, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaError(path, f"expected an integer, got {value!r}")
    return value


def _str(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise SchemaError(path, f"expected a string, got {value!r}")
    return value


def _rational(value: Any, path: str) -> Fraction:
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(v, int) and not isinstance(v, bool) for v in value)
    ):
        if value[1] == 0:
            raise SchemaError(path, "zero denominator")
        return Fraction(value[0], value[1])
    raise SchemaError(path, f"expected an integer or [num, den], got {value!r}")


def _int_list(value: Any, path: str) -> list[int]:
    if not isinstance(value, list):
        raise SchemaError(path, f"expected an array, got {value!r}")
    return [_int(v, f"{path}[{i}]") for i, v in enumerate(value)]


@dataclass(frozen=True)
class InputDocument:
    """A parsed and cross-referenced document, ready to become a problem."""

    problem: GluingProblem


def _parse_model(obj: Any, path: str) -> SmoothSurfaceModel:
    _require_keys(obj, path, {"id", "kind"}, {"gram", "canonical", "chi_o"})
    kind = _str(obj["kind"], f"{path}.kind")
    if kind == P2:
        return p2()
    if kind == P1XP1:
        return p1xp1()
    if kind == LATTICE:
        for key in ("gram", "canonical", "chi_o"):
            if key not in obj:
                raise SchemaError(path, f"LATTICE components need {key!r}")
        gram = [
            _int_list(row, f"{path}.gram[{i}]") for i, row in enumerate(obj["gram"])
        ]
        return lattice_surface(gram, _int_list(obj["canonical"], f"{path}.canonical"),
                               _int(obj["chi_o"], f"{path}.chi_o"))
    raise SchemaError(f"{path}.kind", f"unknown kind {kind!r}")


def _parse_class(value: Any, model: SmoothSurfaceModel, path: str) -> QDivisorClass:
    if not isinstance(value, list):
        raise SchemaError(path, "expected an array of coefficients")
    coeffs = [_rational(v, f"{path}[{i}]") for i, v in enumerate(value)]
    if len(coeffs) != model.rank:
        raise SchemaError(path, f"expected {model.rank} coefficients, got {len(coeffs)}")
    return model.divisor(coeffs)


def parse_document(text: str | bytes) -> InputDocument:
    """Parse and validate a document; raises :class:`SchemaError` with the
    offending location on any problem."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"malformed JSON: {exc}") from None
    _require_keys(
        raw,
        "$",
        {"version", "group", "components", "curves", "points", "branch_data", "double_elements"},
        {"line_bundles"},
    )
    if raw["version"] != SCHEMA_VERSION:
        raise SchemaError("$.version", f"unsupported version {raw['version']!r}; this tool reads {SCHEMA_VERSION!r}")
    group = FiniteAbelianGroup(tuple(_int_list(raw["group"], "$.group")))

    models: dict[str, SmoothSurfaceModel] = {}
    components = []
    for i, comp in enumerate(raw["components"]):
        path = f"$.components[{i}]"
        model = _parse_model(comp, path)
        cid = _str(comp["id"], f"{path}.id")
        if cid in models:
            raise SchemaError(path, f"duplicate component id {cid!r}")
        models[cid] = model
        components.append((cid, model))

    curves = []
    curve_roles: dict[str, str] = {}
    for i, cobj in enumerate(raw["curves"]):
        path = f"$.curves[{i}]"
        _require_keys(cobj, path, {"id", "role", "sides"}, {"rational"})
        cid = _str(cobj["id"], f"{path}.id")
        role = _str(cobj["role"], f"{path}.role").upper()
        if role not in (BRANCH, DOUBLE):
            raise SchemaError(f"{path}.role", f"expected 'branch' or 'double', got {cobj['role']!r}")
        if cid in curve_roles:
            raise SchemaError(path, f"duplicate curve id {cid!r}")
        curve_roles[cid] = role
        sides = []
        for j, sobj in enumerate(cobj["sides"]):
            spath = f"{path}.sides[{j}]"
            _require_keys(sobj, spath, {"component", "class"})
            comp = _str(sobj["component"], f"{spath}.component")
            if comp not in models:
                raise SchemaError(f"{spath}.component", f"unknown component {comp!r}")
            sides.append(CurveSide(comp, _parse_class(sobj["class"], models[comp], f"{spath}.class")))
        rational = cobj.get("rational", True)
        if not isinstance(rational, bool):
            raise SchemaError(f"{path}.rational", "expected a boolean")
        curves.append(CurveDecl(cid, role, tuple(sides), rational))

    points = []
    for i, pobj in enumerate(raw["points"]):
        path = f"$.points[{i}]"
        _require_keys(pobj, path, {"id", "on"}, {"incident_mults", "c_singular", "cycle"})
        pid = _str(pobj["id"], f"{path}.id")
        on = tuple(_str(c, f"{path}.on[{j}]") for j, c in enumerate(pobj["on"]))
        for cid in on:
            if cid not in curve_roles:
                raise SchemaError(f"{path}.on", f"unknown curve {cid!r}")
        mults = ()
        if "incident_mults" in pobj:
            if not isinstance(pobj["incident_mults"], dict):
                raise SchemaError(f"{path}.incident_mults", "expected an object")
            mults = tuple(
                (cid, _int(m, f"{path}.incident_mults.{cid}"))
                for cid, m in sorted(pobj["incident_mults"].items())
            )
        c_singular = pobj.get("c_singular", False)
        if not isinstance(c_singular, bool):
            raise SchemaError(f"{path}.c_singular", "expected a boolean")
        cycle = ()
        if "cycle" in pobj:
            entries = []
            for j, entry in enumerate(pobj["cycle"]):
                epath = f"{path}.cycle[{j}]"
                if not (isinstance(entry, list) and len(entry) == 2):
                    raise SchemaError(epath, "expected [component, curve]")
                entries.append((_str(entry[0], epath), _str(entry[1], epath)))
            cycle = tuple(entries)
        points.append(PointDecl(pid, on, mults, c_singular, cycle))

    surface = GdcSurface(tuple(components), tuple(curves), tuple(points))

    _require_keys(raw["branch_data"], "$.branch_data", set(), set(models))
    doubles_raw = raw["double_elements"]
    if not isinstance(doubles_raw, dict):
        raise SchemaError("$.double_elements", "expected an object")
    double_elements: dict[str, GroupElement] = {}
    for cid, coeffs in sorted(doubles_raw.items()):
        if curve_roles.get(cid) != DOUBLE:
            raise SchemaError(f"$.double_elements.{cid}", "not a declared double curve")
        double_elements[cid] = group.element(_int_list(coeffs, f"$.double_elements.{cid}"))
    for cid, role in curve_roles.items():
        if role == DOUBLE and cid not in double_elements:
            raise SchemaError("$.double_elements", f"double curve {cid!r} has no inertia element")

    bundles_raw = raw.get("line_bundles")
    building: dict[str, BuildingData] = {}
    for comp, model in components:
        data = []
        for j, dobj in enumerate(raw["branch_data"].get(comp, [])):
            path = f"$.branch_data.{comp}[{j}]"
            _require_keys(dobj, path, {"curve", "element"}, {"psi_exponent"})
            cid = _str(dobj["curve"], f"{path}.curve")
            role = curve_roles.get(cid)
            if role is None:
                raise SchemaError(f"{path}.curve", f"unknown curve {cid!r}")
            if role == DOUBLE:
                raise SchemaError(
                    f"{path}.curve",
                    "double-curve data come from double_elements, not branch_data",
                )
            if not surface.curve_sides_on(cid, comp):
                raise SchemaError(f"{path}.curve", f"curve {cid!r} has no side on {comp}")
            element = group.element(_int_list(dobj["element"], f"{path}.element"))
            if element.is_zero:
                raise SchemaError(f"{path}.element", "branch elements must be nonzero")
            psi = dobj.get("psi_exponent", 1)
            data.append(BranchDatum(cid, CyclicPair.from_element(element, _int(psi, f"{path}.psi_exponent"))))
        for curve in surface.double_curves():
            g_l = double_elements[curve.id]
            if g_l.is_zero:
                continue
            for side in curve.sides:
                if side.component == comp:
                    data.append(BranchDatum(curve.id, CyclicPair.from_element(g_l)))
        bd = BuildingData(group, comp, tuple(data))
        if bundles_raw is not None:
            bd = _attach_bundles(bd, bundles_raw, comp, models[comp], group)
        building[comp] = bd

    problem = make_problem(surface, group, building, double_elements)
    return InputDocument(problem)


def _attach_bundles(bd, bundles_raw, comp, model, group):
    path = f"$.line_bundles.{comp}"
    if not isinstance(bundles_raw, dict):
        raise SchemaError("$.line_bundles", "expected an object keyed by component")
    entries = bundles_raw.get(comp)
    if entries is None:
        return bd
    mapping = {}
    for j, entry in enumerate(entries):
        epath = f"{path}[{j}]"
        _require_keys(entry, epath, {"character", "class"})
        chi = group.character(_int_list(entry["character"], f"{epath}.character"))
        if chi.is_trivial:
            raise SchemaError(f"{epath}.character", "the trivial character is implicit")
        mapping[chi] = _parse_class(entry["class"], model, f"{epath}.class")
    expected = sum(1 for chi in group.characters() if not chi.is_trivial)
    if len(mapping) != expected:
        raise SchemaError(path, f"expected {expected} classes, got {len(mapping)}")
    return bd.with_line_bundles(mapping)


def _class_json(cls: QDivisorClass) -> list:
    return [
        int(c) if c.denominator == 1 else [c.numerator, c.denominator] for c in cls.coeffs
    ]


def render_document(problem: GluingProblem) -> dict:
    """The canonical JSON form of a problem; parse(render(p)) rebuilds p."""
    surface = problem.surface
    components = []
    for cid, model in surface.components:
        entry: dict[str, Any] = {"id": cid, "kind": model.kind}
        if model.kind == LATTICE:
            entry["gram"] = [list(row) for row in model.gram]
            entry["canonical"] = list(model.canonical)
            entry["chi_o"] = model.chi_o
        components.append(entry)
    curves = []
    for curve in surface.curves:
        curves.append(
            {
                "id": curve.id,
                "role": curve.role.lower(),
                "rational": curve.rational,
                "sides": [
                    {"component": s.component, "class": _class_json(s.cls)}
                    for s in curve.sides
                ],
            }
        )
    points = []
    for point in surface.points:
        entry = {"id": point.id, "on": list(point.on)}
        if point.mults:
            entry["incident_mults"] = {cid: m for cid, m in point.mults}
        if point.c_singular:
            entry["c_singular"] = True
            entry["cycle"] = [list(pair) for pair in point.cycle]
        points.append(entry)
    doubles = {c.id for c in surface.double_curves()}
    branch_data = {}
    explicit_bundles = {}
    for comp, bd in problem.building:
        entries = []
        for datum in bd.branches:
            if datum.curve in doubles:
                continue
            entry = {"curve": datum.curve, "element": list(datum.pair.generator.coeffs)}
            if datum.pair.psi_exponent != 1:
                entry["psi_exponent"] = datum.pair.psi_exponent
            entries.append(entry)
        branch_data[comp] = entries
        if bd.line_bundles is not None:
            explicit_bundles[comp] = [
                {"character": list(chi.coeffs), "class": _class_json(cls)}
                for chi, cls in bd.line_bundles
            ]
    document = {
        "version": SCHEMA_VERSION,
        "group": list(problem.group.orders),
        "components": components,
        "curves": curves,
        "points": points,
        "branch_data": branch_data,
        "double_elements": {
            cid: list(g.coeffs) for cid, g in problem.double_elements
        },
    }
    if explicit_bundles:
        document["line_bundles"] = explicit_bundles
    return document


def dumps_document(problem: GluingProblem) -> str:
    return json.dumps(render_document(problem), indent=2, sort_keys=False) + "\n"
