"""Gluing component covers over the double curves of a g.d.c. surface.

Everything here is specific to groups of exponent two, where gluability of
standard covers along a rational double curve reduces to two checkable
conditions: each double curve carries the same inertia generator seen from
both sides, and at every point of it the weighted sums of incident branch
elements on the two sides agree modulo that generator.  Cycle points of the
double curve additionally need the consecutive-generator conditions that
make the cover a cone over a cycle of rational curves there.

The point sets A, B, N, T and the eigensheaf degrees on the double curves
feed the global invariants; points where the branch divisor does not meet
the double curve in the transverse two-lines-per-side pattern belong to no
A/B set and are reported in a diagnostics list instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping

from .covers import BuildingData, curve_class_on, solve_line_bundles
from .groups import Character, FiniteAbelianGroup, GroupElement, Subgroup, subgroup_generated
from .surfaces import DOUBLE, CurveDecl, GdcSurface, PointDecl, QDivisorClass, intersect, validate_surface


class UnsupportedGroupError(ValueError):
    """Gluing feasibility is only decidable here for groups of exponent 2."""


class IncompleteInputError(ValueError):
    """The declared surface or building data lack required pieces."""


class SideDegreeMismatchError(ValueError):
    """The two sides of a double curve induce different covers of it."""


@dataclass(frozen=True)
class GluingProblem:
    surface: GdcSurface
    group: FiniteAbelianGroup
    building: tuple[tuple[str, BuildingData], ...]
    double_elements: tuple[tuple[str, GroupElement], ...]

    def building_for(self, component: str) -> BuildingData:
        for cid, bd in self.building:
            if cid == component:
                return bd
        raise IncompleteInputError(f"no building data for component {component!r}")

    def building_map(self) -> dict[str, BuildingData]:
        return dict(self.building)

    def double_element(self, curve_id: str) -> GroupElement:
        for cid, g in self.double_elements:
            if cid == curve_id:
                return g
        raise IncompleteInputError(f"no inertia element recorded for double curve {curve_id!r}")


def make_problem(
    surface: GdcSurface,
    group: FiniteAbelianGroup,
    building: Mapping[str, BuildingData],
    double_elements: Mapping[str, GroupElement],
) -> GluingProblem:
    return GluingProblem(
        surface,
        group,
        tuple(sorted(building.items())),
        tuple(sorted(double_elements.items())),
    )


@lru_cache(maxsize=None)
def resolved_bundles(problem: GluingProblem, component: str):
    """Line-bundle classes for one component: the explicit map when present,
    otherwise solved from the branch data."""
    bd = problem.building_for(component)
    if bd.line_bundles is not None:
        return bd.bundle_map()
    return solve_line_bundles(problem.surface, bd)


def _germ_elements(
    problem: GluingProblem, point: PointDecl, component: str, double_id: str
) -> list[tuple[str, GroupElement, int]]:
    """Branch data germs (curve, element, multiplicity) at a point, one side."""
    bd = problem.building_for(component)
    germs = []
    for datum in bd.branches:
        if datum.curve == double_id:
            continue
        if datum.curve in point.on:
            germs.append((datum.curve, datum.pair.generator, point.mult(datum.curve)))
    return germs


def _double_curves_at(problem: GluingProblem, point: PointDecl) -> list[CurveDecl]:
    return [
        problem.surface.curve(cid)
        for cid in point.on
        if problem.surface.curve(cid).role == DOUBLE
    ]


@dataclass(frozen=True)
class GlueFailure:
    curve: str | None
    point: str | None
    reason: str


@dataclass(frozen=True)
class GlueResult:
    ok: bool
    failures: tuple[GlueFailure, ...]


def glue_check(problem: GluingProblem) -> GlueResult:
    """Decide whether the component covers glue to a cover of the whole surface."""
    if not problem.group.is_two_torsion:
        raise UnsupportedGroupError(
            "gluing feasibility is implemented for groups of exponent 2 only"
        )
    report = validate_surface(problem.surface)
    if not report.ok:
        raise IncompleteInputError("; ".join(report.findings))
    failures: list[GlueFailure] = []
    for curve in problem.surface.double_curves():
        failures.extend(_check_double_curve(problem, curve))
    for point in problem.surface.points:
        if point.c_singular:
            failures.extend(_check_cycle_point(problem, point))
    return GlueResult(not failures, tuple(failures))


def _check_double_curve(problem: GluingProblem, curve: CurveDecl) -> Iterator[GlueFailure]:
    if not curve.rational:
        yield GlueFailure(curve.id, None, "double curve is not rational")
        return
    g_l = problem.double_element(curve.id)
    comps = [side.component for side in curve.sides]
    if len(set(comps)) != len(comps):
        yield GlueFailure(curve.id, None, "self-glued component is not supported")
        return
    for comp in comps:
        bd = problem.building_for(comp)
        data_on_curve = [b for b in bd.branches if b.curve == curve.id]
        if g_l.is_zero:
            if data_on_curve:
                yield GlueFailure(
                    curve.id, None, f"component {comp} is branched along an etale double curve"
                )
        else:
            if len(data_on_curve) != 1 or data_on_curve[0].pair.generator != g_l:
                yield GlueFailure(
                    curve.id,
                    None,
                    f"component {comp} does not carry the inertia generator {g_l}",
                )
    for point in problem.surface.points:
        if point.c_singular or curve.id not in point.on:
            continue
        side_sums = []
        side_weights = []
        for comp in comps:
            total = problem.group.zero()
            weight = 0
            for _, g, m in _germ_elements(problem, point, comp, curve.id):
                total = total + m * g
                weight += m
            side_sums.append(total)
            side_weights.append(weight)
        if side_weights[0] != side_weights[1]:
            yield GlueFailure(
                curve.id,
                point.id,
                f"branch multiplicities differ across the double curve "
                f"({side_weights[0]} vs {side_weights[1]}); the pair (Y, D) is not 2-Cartier",
            )
        diff = side_sums[0] - side_sums[1]
        if not diff.is_zero and diff != g_l:
            yield GlueFailure(
                curve.id,
                point.id,
                f"gluing congruence fails: side sums differ by {diff} mod {g_l}",
            )


def _check_cycle_point(problem: GluingProblem, point: PointDecl) -> Iterator[GlueFailure]:
    q = len(point.cycle)
    elements = [problem.double_element(cid) for _, cid in point.cycle]
    inertia = subgroup_generated(problem.group, elements)
    for i in range(q):
        g_prev, g_cur, g_next = elements[i - 1], elements[i], elements[(i + 1) % q]
        diff = g_prev - g_next
        if not diff.is_zero and diff != g_cur:
            yield GlueFailure(
                point.cycle[i][1],
                point.id,
                f"cycle condition fails: adjacent generators differ by {diff} mod {g_cur}",
            )
        pair_order = g_cur.order * g_next.order
        span = subgroup_generated(problem.group, [g_cur, g_next])
        if span.order != pair_order or span.order != inertia.order:
            yield GlueFailure(
                point.cycle[i][1],
                point.id,
                "consecutive generators do not split the inertia subgroup",
            )


@dataclass
class SideSets:
    """The point sets of the double curves, per (curve, character)."""

    a_sets: dict[tuple[str, Character], frozenset[str]]
    b_sets: dict[tuple[str, Character], frozenset[str]]
    t_sets: dict[Character, frozenset[str]]
    diagnostics: tuple[tuple[str, str, str], ...]

    def a(self, curve_id: str, chi: Character) -> frozenset[str]:
        return self.a_sets.get((curve_id, chi), frozenset())

    def b(self, curve_id: str, chi: Character) -> frozenset[str]:
        return self.b_sets.get((curve_id, chi), frozenset())

    def n(self, curve_id: str, chi: Character) -> frozenset[str]:
        return self.a(curve_id, chi) & self.b(curve_id, chi)

    def t(self, chi: Character) -> frozenset[str]:
        return self.t_sets.get(chi, frozenset())


@lru_cache(maxsize=None)
def incidence_sets(problem: GluingProblem) -> SideSets:
    """A, B and T point sets; eligible points carry exactly two transverse
    branch data on each side of their double curve."""
    a_sets: dict[tuple[str, Character], set[str]] = {}
    b_sets: dict[tuple[str, Character], set[str]] = {}
    diagnostics: list[tuple[str, str, str]] = []
    for curve in problem.surface.double_curves():
        g_l = problem.double_element(curve.id)
        comps = [side.component for side in curve.sides]
        for point in problem.surface.points:
            if point.c_singular or curve.id not in point.on:
                continue
            germs = [_germ_elements(problem, point, comp, curve.id) for comp in comps]
            counts = tuple(len(g) for g in germs)
            if counts == (0, 0):
                continue
            if counts != (2, 2):
                diagnostics.append(
                    (curve.id, point.id, f"branch multiplicity {counts} is not (2, 2)")
                )
                continue
            if any(m != 1 for side in germs for _, _, m in side):
                diagnostics.append((curve.id, point.id, "non-transverse branch line"))
                continue
            for chi in problem.group.characters():
                if not chi.is_trivial_on(g_l):
                    continue
                for target, side in ((a_sets, germs[0]), (b_sets, germs[1])):
                    if all(not chi.is_trivial_on(g) for _, g, _ in side):
                        target.setdefault((curve.id, chi), set()).add(point.id)
    t_sets: dict[Character, set[str]] = {}
    for point in problem.surface.points:
        if not point.c_singular:
            continue
        inertia = subgroup_generated(
            problem.group, [problem.double_element(cid) for _, cid in point.cycle]
        )
        for chi in problem.group.characters():
            if all(chi.is_trivial_on(h) for h in inertia.elements):
                t_sets.setdefault(chi, set()).add(point.id)
    return SideSets(
        {k: frozenset(v) for k, v in a_sets.items()},
        {k: frozenset(v) for k, v in b_sets.items()},
        {k: frozenset(v) for k, v in t_sets.items()},
        tuple(sorted(diagnostics)),
    )


def m_degree(problem: GluingProblem, curve_id: str, chi: Character) -> int:
    """deg M_{l, chi} for a character trivial on the double curve's element,
    computed from either side and required to agree."""
    curve = problem.surface.curve(curve_id)
    if curve.role != DOUBLE:
        raise ValueError(f"curve {curve_id} is not a double curve")
    g_l = problem.double_element(curve_id)
    if not chi.is_trivial_on(g_l):
        raise ValueError(f"character {chi} is nontrivial on the inertia element of {curve_id}")
    sets = incidence_sets(problem)
    values = []
    for side, points in zip(curve.sides, (sets.a(curve_id, chi), sets.b(curve_id, chi))):
        if chi.is_trivial:
            restricted = Fraction(0)
        else:
            bundles = resolved_bundles(problem, side.component)
            restricted = intersect(bundles[chi], side.cls)
        if restricted.denominator != 1:
            raise SideDegreeMismatchError(
                f"{curve_id}: non-integral restriction degree {restricted}"
            )
        values.append(int(restricted) - len(points))
    if values[0] != values[1]:
        raise SideDegreeMismatchError(
            f"{curve_id}, chi={chi}: side degrees {values[0]} != {values[1]}; "
            "the two sides induce different covers of the double curve"
        )
    return values[0]


def point_inertia(problem: GluingProblem, point_id: str) -> Subgroup:
    """Inertia subgroup at a declared point: all branch data through it,
    double-curve generators included."""
    point = problem.surface.point(point_id)
    gens: list[GroupElement] = []
    for _, bd in problem.building:
        for datum in bd.branches:
            if datum.curve in point.on:
                gens.append(datum.pair.generator)
    return subgroup_generated(problem.group, gens)


def local_config_at_point(problem: GluingProblem, point_id: str):
    """The table germ at a declared point: a DC configuration on a smooth
    point of the double curve, a smooth-base configuration elsewhere.  Cycle
    points are not table germs and are rejected."""
    from .classifier import DC as DC_BASE
    from .classifier import SMOOTH as SMOOTH_BASE
    from .classifier import LocalConfig

    point = problem.surface.point(point_id)
    if point.c_singular:
        raise ValueError(
            f"point {point_id} is a cycle point of the double curve; "
            "its germ is a degenerate cusp, not a table configuration"
        )
    doubles = _double_curves_at(problem, point)
    if len(doubles) > 1:
        raise ValueError(f"point {point_id} lies on several double curves")

    def side_tuple(component: str, double_id: str):
        by_curve: dict[str, list[GroupElement]] = {}
        for cid, g, _ in _germ_elements(problem, point, component, double_id):
            by_curve.setdefault(cid, []).append(g)
        dup_curves = sorted(cid for cid, gs in by_curve.items() if len(gs) == 2)
        singles = sorted(cid for cid, gs in by_curve.items() if len(gs) == 1)
        lines: list[GroupElement] = []
        for cid in dup_curves + singles:
            lines.extend(by_curve[cid])
        return tuple(lines), bool(dup_curves)

    if doubles:
        curve = doubles[0]
        g_l = problem.double_element(curve.id)
        comps = [side.component for side in curve.sides]
        (side1, dup1) = side_tuple(comps[0], curve.id)
        (side2, dup2) = side_tuple(comps[1], curve.id)
        return LocalConfig(problem.group, DC_BASE, side1, side2, g_l, dup1, dup2)
    comps = problem.surface.components_at(point)
    if len(comps) != 1:
        raise ValueError(
            f"point {point_id} has germs on {len(comps)} components but no double curve"
        )
    by_curve: dict[str, list[GroupElement]] = {}
    for cid, g, _ in _germ_elements(problem, point, comps[0], ""):
        by_curve.setdefault(cid, []).append(g)
    dup_curves = sorted(cid for cid, gs in by_curve.items() if len(gs) == 2)
    singles = sorted(cid for cid, gs in by_curve.items() if len(gs) == 1)
    lines: list[GroupElement] = []
    for cid in dup_curves + singles:
        lines.extend(by_curve[cid])
    return LocalConfig(
        problem.group,
        SMOOTH_BASE,
        tuple(lines),
        dup1=len(dup_curves) >= 1,
        dup2=len(dup_curves) == 2,
    )


def relevant_points(problem: GluingProblem) -> tuple[tuple[str, int], ...]:
    """Points over which the glued cover is Gorenstein but not d.c., with
    their fibre sizes [G : H_y]: the singular points of the double curve plus
    every point of some N_{l, chi}."""
    sets = incidence_sets(problem)
    relevant: set[str] = set()
    for point in problem.surface.points:
        if point.c_singular:
            relevant.add(point.id)
    for curve in problem.surface.double_curves():
        g_l = problem.double_element(curve.id)
        for chi in problem.group.characters():
            if chi.is_trivial_on(g_l):
                relevant |= sets.n(curve.id, chi)
    weighted = []
    for pid in sorted(relevant):
        h = point_inertia(problem, pid)
        weighted.append((pid, problem.group.order // h.order))
    return tuple(weighted)
