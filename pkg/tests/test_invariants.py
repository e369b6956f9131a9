"""Global invariants on the two worked examples and structural identities."""

from fractions import Fraction

import pytest

from abelcover.classifier import classify
from abelcover.covers import BranchDatum, BuildingData
from abelcover.gluing import local_config_at_point, make_problem, relevant_points
from abelcover.groups import CyclicPair, FiniteAbelianGroup
from abelcover.invariants import (
    INDETERMINATE,
    chi_OX,
    chi_eigensheaf,
    chi_normalized_B,
    compute_report,
    global_cartier_index,
    k_square,
)
from abelcover.surfaces import GdcSurface, PointDecl, p2
from abelcover.worked_examples import plane_cycle_cover, two_component_cover

Z2Z2 = FiniteAbelianGroup((2, 2))


def test_two_component_invariants():
    problem = two_component_cover()
    assert k_square(problem) == 6
    assert chi_normalized_B(problem) == 4
    assert chi_OX(problem) == 1


def test_plane_cycle_invariants():
    problem = plane_cycle_cover()
    assert k_square(problem) == 6
    assert chi_normalized_B(problem) == 6
    assert chi_OX(problem) == 1


def test_eigensheaf_details_two_component():
    problem = two_component_cover()
    for chi in problem.group.characters():
        report = chi_eigensheaf(problem, chi)
        if chi.is_trivial:
            assert report.chi_f == 1 and report.chi_im_alpha == 1
            assert report.h == (1, 0, 0)
        else:
            # (im alpha)_chi is a degree -1 sheaf on the double curve
            assert report.chi_f == 0 and report.chi_im_alpha == 0
            assert report.h == (0, 0, 0)


def test_eigensheaf_details_plane_cycle():
    problem = plane_cycle_cover()
    for chi in problem.group.characters():
        report = chi_eigensheaf(problem, chi)
        if chi.is_trivial:
            assert report.chi_f == 1 and report.chi_im_alpha == 5
        else:
            assert report.chi_f == 0 and report.chi_im_alpha == 0
        assert report.h[1] == 0 and report.h[2] == 0


def test_unbranched_double_plane():
    """A disjoint unbranched double cover of the plane alone: K^2 = 2 K^2(P2),
    chi = 2."""
    plane = p2()
    surface = GdcSurface((("Y", plane),), (), ())
    z2 = FiniteAbelianGroup((2,))
    problem = make_problem(surface, z2, {"Y": BuildingData(z2, "Y", ())}, {})
    assert k_square(problem) == 18
    assert chi_OX(problem) == 2


def test_k_square_invariant_under_side_swap():
    problem = two_component_cover()
    surface = problem.surface
    flipped_curves = []
    for curve in surface.curves:
        sides = tuple(reversed(curve.sides)) if curve.role == "DOUBLE" else curve.sides
        flipped_curves.append(type(curve)(curve.id, curve.role, sides, curve.rational))
    flipped = GdcSurface(surface.components, tuple(flipped_curves), surface.points)
    swapped = make_problem(
        flipped, problem.group, problem.building_map(), dict(problem.double_elements)
    )
    assert k_square(swapped) == k_square(problem)


def test_local_chi_matches_relevant_weight():
    problem = two_component_cover()
    weights = dict(relevant_points(problem))
    for pid in ("y1", "y2", "y3"):
        cls = classify(local_config_at_point(problem, pid))
        assert cls.row.label == "E4.2"
        assert cls.chi_weight == weights[pid] == 1
    cycle = plane_cycle_cover()
    cycle_weights = dict(relevant_points(cycle))
    for i in range(1, 7):
        for pid in (f"q{i}", f"r{i}"):
            cls = classify(local_config_at_point(cycle, pid))
            assert cls.chi_weight == 0
            assert pid not in cycle_weights


def test_global_cartier_indices():
    problem = two_component_cover()
    for pid in ("y1", "y2", "y3"):
        assert global_cartier_index(problem, pid) == 1
    cycle = plane_cycle_cover()
    assert global_cartier_index(cycle, "y") == 1
    for i in range(1, 7):
        local = classify(local_config_at_point(cycle, f"q{i}")).iota
        assert global_cartier_index(cycle, f"q{i}") == local == 2
        assert global_cartier_index(cycle, f"r{i}") == 1


def test_report_assembly():
    report = compute_report(two_component_cover())
    assert report.k_square == 6 and report.chi_ox == 1
    assert report.relevant == (("y1", 1), ("y2", 1), ("y3", 1))
    assert all(v == 1 for _, v in report.cartier)
    assert sum(e.chi_f for e in report.eigensheaves) == report.chi_ox
