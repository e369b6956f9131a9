"""Global numerical invariants of a glued cover.

K^2 comes straight from the lattice; chi(O_X) comes from the component
covers, the normalized double locus and the relevant points, and is always
cross-checked against the per-character Euler characteristics assembled from
the gluing exact sequences.  Cohomology of the eigensheaves is reported
exactly only when the catalog vanishing forces it through those sequences;
otherwise the entry is left indeterminate rather than guessed, and the same
policy applies to the Cartier index at points outside the tree-graph and
cycle-point criteria.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .covers import hurwitz_divisor
from .groups import Character, GroupElement
from .gluing import (
    GluingProblem,
    glue_check,
    incidence_sets,
    m_degree,
    relevant_points,
    resolved_bundles,
)
from .surfaces import (
    DOUBLE,
    PointDecl,
    UnsupportedKindError,
    cohomology,
    euler_char_inverse,
    intersect,
    p1_cohomology,
)

#: Sentinel for Cartier indices and cohomology entries the sufficient
#: criteria do not decide.
INDETERMINATE = "indeterminate"


class CrossCheckError(AssertionError):
    """Two independent routes to the same invariant disagree."""


def k_square(problem: GluingProblem) -> Fraction:
    """K_X^2 = sum over components of 2^r (K + nu*D + double locus)^2."""
    total = Fraction(0)
    doubles = {c.id for c in problem.surface.double_curves()}
    for comp, bd in problem.building:
        model = problem.surface.component_model(comp)
        cls = model.canonical_class()
        divisor = hurwitz_divisor(bd, doubles)
        for cid, mult in divisor.mults:
            for side in problem.surface.curve(cid).sides:
                if side.component == comp:
                    cls = cls + mult * side.cls
        for curve in problem.surface.double_curves():
            for side in curve.sides:
                if side.component == comp:
                    cls = cls + side.cls
        total += problem.group.order * intersect(cls, cls)
    return total


def chi_normalized_B(problem: GluingProblem) -> int:
    """chi(O) of the normalized double locus of the cover: one rational curve
    cover per double curve, summed over the characters trivial on its element."""
    total = 0
    for curve in problem.surface.double_curves():
        if not curve.rational:
            raise UnsupportedKindError(f"double curve {curve.id} is not rational")
        g_l = problem.double_element(curve.id)
        for chi in problem.group.characters():
            if chi.is_trivial_on(g_l):
                total += 1 - m_degree(problem, curve.id, chi)
    return total


@dataclass(frozen=True)
class EigensheafReport:
    chi: Character
    chi_f: int
    chi_im_alpha: int
    h: tuple[int | None, int | None, int | None]

    @property
    def h_exact(self) -> bool:
        return all(v is not None for v in self.h)


def _sum_h(pieces: Iterable[tuple[int, ...] | None], width: int):
    total = [0] * width
    for piece in pieces:
        if piece is None:
            return None
        for i in range(width):
            total[i] += piece[i]
    return tuple(total)


def _component_cohomology(problem: GluingProblem, chi: Character):
    """(h0, h1, h2) of the direct sum of the component eigensheaves, or None."""
    pieces = []
    for comp, _ in problem.building:
        model = problem.surface.component_model(comp)
        if chi.is_trivial:
            bundle = model.zero()
        else:
            bundle = -resolved_bundles(problem, comp)[chi]
        try:
            pieces.append(cohomology(bundle))
        except UnsupportedKindError:
            pieces.append(None)
    return _sum_h(pieces, 3)


def _curve_pieces(problem: GluingProblem, chi: Character):
    """Degrees of the middle-term summands M_{l,chi}^{-1}(-N_{l,chi}), per curve."""
    sets = incidence_sets(problem)
    degrees: dict[str, int] = {}
    for curve in problem.surface.double_curves():
        g_l = problem.double_element(curve.id)
        if chi.is_trivial_on(g_l):
            degrees[curve.id] = -m_degree(problem, curve.id, chi) - len(
                sets.n(curve.id, chi)
            )
    return degrees


def _t_points(problem: GluingProblem, chi: Character) -> list[PointDecl]:
    sets = incidence_sets(problem)
    return [problem.surface.point(pid) for pid in sorted(sets.t(chi))]


def _match_t_points(
    t_points: list[PointDecl], degrees: Mapping[str, int]
) -> bool:
    """Try to assign each cycle point a private incident summand, with at most
    deg+1 points per summand; success certifies surjectivity onto O_T because
    the evaluation components of the cokernel map are units on every incident
    germ and sections of O(d) interpolate any d+1 distinct points."""
    loads: dict[str, int] = {}

    def backtrack(i: int) -> bool:
        if i == len(t_points):
            return True
        point = t_points[i]
        for cid in sorted({cid for _, cid in point.cycle}):
            if cid not in degrees or degrees[cid] < 0:
                continue
            if loads.get(cid, 0) + 1 > degrees[cid] + 1:
                continue
            loads[cid] = loads.get(cid, 0) + 1
            if backtrack(i + 1):
                return True
            loads[cid] -= 1
        return False

    return backtrack(0)


def chi_eigensheaf(problem: GluingProblem, chi: Character) -> EigensheafReport:
    """Euler characteristics of the chi-eigensheaf of the glued cover, with
    cohomology pinned down when the two gluing sequences force it."""
    degrees = _curve_pieces(problem, chi)
    t_points = _t_points(problem, chi)
    chi_im_alpha = sum(1 + d for d in degrees.values()) - len(t_points)

    chi_p_total = 0
    for comp, _ in problem.building:
        model = problem.surface.component_model(comp)
        if chi.is_trivial:
            chi_p_total += model.chi_o
        else:
            chi_p_total += euler_char_inverse(resolved_bundles(problem, comp)[chi])
    chi_f = chi_p_total - chi_im_alpha

    h_p = _component_cohomology(problem, chi)
    h_m = _sum_h((p1_cohomology(d) for d in degrees.values()), 2)
    h_q: tuple[int, int] | None
    if h_m is None:
        h_q = None
    elif not t_points:
        h_q = h_m
    elif _match_t_points(t_points, degrees):
        h_q = (h_m[0] - len(t_points), h_m[1])
    else:
        h_q = None

    h = _assemble_h(problem, chi, chi_f, h_p, h_q)
    return EigensheafReport(chi, chi_f, chi_im_alpha, h)


def _assemble_h(problem, chi, chi_f, h_p, h_q):
    """Chase 0 -> F -> P -> Q -> 0; only ranks the vanishing forces are kept."""
    if h_p is None:
        return (None, None, None)
    h0p, h1p, h2p = h_p
    h0q, h1q = h_q if h_q is not None else (None, None)

    if chi.is_trivial:
        rank0 = h0p - _component_count(problem)
    elif h0p == 0 or h0q == 0:
        rank0 = 0
    else:
        rank0 = None

    h0 = h0p - rank0 if rank0 is not None else None
    if rank0 is not None and h0q is not None:
        coker0 = h0q - rank0
        if h1q == 0:
            h1 = coker0 + h1p
        elif h1p == 0:
            h1 = coker0
        else:
            h1 = None
    else:
        h1 = None
    if h1q == 0:
        h2 = h2p
    elif h1p == 0 and h1q is not None:
        h2 = h2p + h1q
    else:
        h2 = None
    if h0 is not None and h1 is not None and h2 is not None and h0 - h1 + h2 != chi_f:
        raise CrossCheckError(
            f"chi={chi}: forced cohomology ({h0},{h1},{h2}) contradicts chi(F) = {chi_f}"
        )
    return (h0, h1, h2)


def _component_count(problem: GluingProblem) -> int:
    """Connected components of the component/double-curve incidence graph."""
    parent = {comp: comp for comp, _ in problem.building}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for curve in problem.surface.double_curves():
        comps = [side.component for side in curve.sides]
        if len(comps) == 2 and all(c in parent for c in comps):
            parent[find(comps[0])] = find(comps[1])
    return len({find(c) for c in parent})


def chi_OX(problem: GluingProblem) -> int:
    """chi(O_X) = chi(O_X') - chi(O of the normalized double locus) + relevant
    weights; cross-checked against the per-character sum."""
    chi_components = 0
    for comp, _ in problem.building:
        model = problem.surface.component_model(comp)
        chi_components += model.chi_o
        for chi in problem.group.characters():
            if not chi.is_trivial:
                chi_components += euler_char_inverse(resolved_bundles(problem, comp)[chi])
    total = chi_components - chi_normalized_B(problem)
    total += sum(weight for _, weight in relevant_points(problem))
    by_characters = sum(
        chi_eigensheaf(problem, chi).chi_f for chi in problem.group.characters()
    )
    if by_characters != total:
        raise CrossCheckError(
            f"chi(O_X) = {total} from the gluing formula but {by_characters} "
            "from the eigensheaf decomposition"
        )
    return total


def global_cartier_index(problem: GluingProblem, point_id: str):
    """Cartier index of K_X over a declared point: 2 when the product of the
    branch characters is not a pullback; 1 when it is and the branch graph at
    the point is a tree; the cycle-point value when the point is a validated
    cycle point; otherwise indeterminate."""
    point = problem.surface.point(point_id)
    line_data: list[tuple[GroupElement, Fraction]] = []
    double_elements: list[GroupElement] = []
    doubles = {c.id for c in problem.surface.double_curves()}
    for _, bd in problem.building:
        for datum in bd.branches:
            if datum.curve not in point.on:
                continue
            if datum.curve in doubles:
                double_elements.append(datum.pair.generator)
            else:
                line_data.append((datum.pair.generator, datum.pair.psi_value))
    pullback = any(
        all(chi.pairing(g) == v for g, v in line_data)
        and all(chi.is_trivial_on(g) for g in double_elements)
        for chi in problem.group.characters()
    )
    if not pullback:
        return 2
    vertices = set(problem.surface.components_at(point))
    edges = []
    for cid in point.on:
        curve = problem.surface.curve(cid)
        if curve.role == DOUBLE:
            edges.append(tuple(side.component for side in curve.sides))
    if len(edges) == len(vertices) - 1 or not edges:
        return 1
    if point.c_singular and glue_check(problem).ok:
        return 1
    return INDETERMINATE


@dataclass(frozen=True)
class InvariantReport:
    k_square: Fraction
    chi_ox: int
    eigensheaves: tuple[EigensheafReport, ...]
    relevant: tuple[tuple[str, int], ...]
    cartier: tuple[tuple[str, object], ...]


def compute_report(problem: GluingProblem) -> InvariantReport:
    eigen = tuple(
        chi_eigensheaf(problem, chi) for chi in problem.group.characters()
    )
    return InvariantReport(
        k_square(problem),
        chi_OX(problem),
        eigen,
        relevant_points(problem),
        tuple(
            (p.id, global_cartier_index(problem, p.id)) for p in problem.surface.points
        ),
    )
