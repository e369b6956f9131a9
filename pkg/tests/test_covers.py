"""Building data: fundamental relations, solver, Hurwitz weights, inertia,
structure flags, the slc criterion and symbolic local equations."""

from fractions import Fraction

import pytest

from abelcover.covers import (
    BranchDatum,
    BuildingData,
    NoSolutionError,
    check_fundamental_relations,
    hurwitz_divisor,
    inertia_at_point,
    local_equations,
    slc_check,
    solve_line_bundles,
    structure_flags,
)
from abelcover.groups import CyclicPair, FiniteAbelianGroup, character_exponent
from abelcover.surfaces import (
    BRANCH,
    DOUBLE,
    CurveDecl,
    CurveSide,
    GdcSurface,
    PointDecl,
    p2,
)
from abelcover.worked_examples import two_component_cover

Z2Z2 = FiniteAbelianGroup((2, 2))
Z2 = FiniteAbelianGroup((2,))
Z4 = FiniteAbelianGroup((4,))


def plane_surface(curve_ids, points=()):
    plane = p2()
    curves = tuple(
        CurveDecl(cid, BRANCH, (CurveSide("Y", plane.divisor((1,))),)) for cid in curve_ids
    )
    return GdcSurface((("Y", plane),), curves, tuple(points))


def test_solve_line_bundles_on_worked_example():
    problem = two_component_cover()
    for comp, expected in (("Y1", (1, 1)), ("Y2", (2,))):
        bd = problem.building_for(comp)
        bundles = solve_line_bundles(problem.surface, bd)
        for chi, cls in bundles.items():
            assert tuple(cls.coeffs) == tuple(Fraction(c) for c in expected)
        check = check_fundamental_relations(
            problem.surface, bd.with_line_bundles(bundles)
        )
        assert check.ok


def test_fundamental_relations_trivial_data_pass():
    surface = plane_surface([])
    bd = BuildingData(Z2Z2, "Y", ()).with_line_bundles(
        {chi: p2().zero() for chi in Z2Z2.characters() if not chi.is_trivial}
    )
    assert check_fundamental_relations(surface, bd).ok


def test_fundamental_relations_detect_perturbation():
    problem = two_component_cover()
    bd = problem.building_for("Y1")
    bundles = solve_line_bundles(problem.surface, bd)
    chi1 = Z2Z2.character((0, 1))  # the first nontrivial character
    bundles[chi1] = problem.surface.component_model("Y1").divisor((2, 1))
    check = check_fundamental_relations(problem.surface, bd.with_line_bundles(bundles))
    assert not check.ok
    assert check.first_violation == (chi1, chi1)


def test_solver_reports_indivisible_class():
    surface = plane_surface(["D"])
    bd = BuildingData(Z2, "Y", (BranchDatum("D", CyclicPair.from_element(Z2.element((1,)))),))
    with pytest.raises(NoSolutionError) as err:
        solve_line_bundles(surface, bd)
    assert err.value.fractional.coeffs == (Fraction(1, 2),)


def test_hurwitz_divisor():
    problem = two_component_cover()
    divisor = hurwitz_divisor(problem.building_for("Y1"), ["C"])
    assert all(m == Fraction(1, 2) for _, m in divisor.mults)

    g = Z2Z2.element((1, 0))
    doubled = BuildingData(
        Z2Z2, "Y",
        (BranchDatum("D", CyclicPair.from_element(g)), BranchDatum("D", CyclicPair.from_element(g))),
    )
    assert hurwitz_divisor(doubled).mult("D") == 1

    z4_line = BuildingData(Z4, "Y", (BranchDatum("D", CyclicPair.from_element(Z4.element((1,)))),))
    assert hurwitz_divisor(z4_line).mult("D") == Fraction(3, 4)


def test_structure_flags():
    problem = two_component_cover()
    flags = structure_flags(problem.building_for("Y1"), ["C"])
    assert flags.normal and flags.gdc and flags.standardable

    g, h = Z2Z2.element((1, 0)), Z2Z2.element((0, 1))
    doubled = BuildingData(
        Z2Z2, "Y",
        (BranchDatum("D", CyclicPair.from_element(g)), BranchDatum("D", CyclicPair.from_element(h))),
    )
    flags = structure_flags(doubled)
    assert not flags.normal and flags.gdc and flags.standardable

    tripled = BuildingData(
        Z2Z2, "Y", tuple(BranchDatum("D", CyclicPair.from_element(g)) for _ in range(3))
    )
    flags = structure_flags(tripled)
    assert not flags.normal and not flags.gdc


def test_inertia_at_point():
    problem = two_component_cover()
    building = problem.building_map()
    assert inertia_at_point(problem.surface, building, "y1").order == 4

    surface = plane_surface(["D"], [PointDecl("p", ()), PointDecl("q", ("D",))])
    building = {
        "Y": BuildingData(Z4, "Y", (BranchDatum("D", CyclicPair.from_element(Z4.element((1,)))),))
    }
    assert inertia_at_point(surface, building, "p").order == 1
    assert inertia_at_point(surface, building, "q").order == 4


def halves_through_point(count):
    names = [f"D{i}" for i in range(count)]
    surface = plane_surface(names, [PointDecl("p", tuple(names))])
    g = Z2Z2.element((1, 0))
    building = {
        "Y": BuildingData(
            Z2Z2, "Y", tuple(BranchDatum(n, CyclicPair.from_element(g)) for n in names)
        )
    }
    return surface, building


def test_slc_point_multiplicity():
    surface, building = halves_through_point(4)
    assert slc_check(surface, building).ok
    surface, building = halves_through_point(5)
    result = slc_check(surface, building)
    assert not result.ok
    assert result.violations[0].multiplicity == Fraction(5, 2)


def test_slc_double_curve_side():
    plane = p2()
    curves = [
        CurveDecl(
            "C", DOUBLE,
            (CurveSide("Y1", plane.divisor((1,))), CurveSide("Y2", plane.divisor((1,)))),
        )
    ]
    names = ["D1", "D2", "D3"]
    for n in names:
        curves.append(CurveDecl(n, BRANCH, (CurveSide("Y1", plane.divisor((1,))),)))
    surface = GdcSurface(
        (("Y1", plane), ("Y2", plane)),
        tuple(curves),
        (PointDecl("p", ("C",) + tuple(names)),),
    )
    g = Z2Z2.element((1, 0))
    building = {
        "Y1": BuildingData(
            Z2Z2, "Y1", tuple(BranchDatum(n, CyclicPair.from_element(g)) for n in names)
        ),
        "Y2": BuildingData(Z2Z2, "Y2", ()),
    }
    result = slc_check(surface, building)
    assert not result.ok
    assert result.violations[0].multiplicity == Fraction(5, 2)


def test_local_equations_single_z2_line():
    system = local_equations(Z2, [("s", CyclicPair.from_element(Z2.element((1,))))])
    assert len(system.power_relations) == 1
    rel = system.power_relations[0]
    assert rel.degree == 2 and rel.sigma_exponents == (1,)
    assert "z[1]^2 = s" in system.render()


def test_local_equations_double_line_case():
    group = FiniteAbelianGroup((2, 2, 2, 2))
    basis = [group.element(tuple(int(i == j) for i in range(4))) for j in range(4)]
    data = [
        ("s1", CyclicPair.from_element(basis[0])),
        ("s1", CyclicPair.from_element(basis[1])),
        ("s2", CyclicPair.from_element(basis[2])),
        ("s3", CyclicPair.from_element(basis[3])),
    ]
    system = local_equations(group, data)
    powers = {
        rel.chi.coeffs: rel.sigma_exponents for rel in system.power_relations
    }
    # the four dual basis characters see exactly one branch germ each
    assert powers[(1, 0, 0, 0)] == (1, 0, 0, 0)
    assert powers[(0, 1, 0, 0)] == (0, 1, 0, 0)
    assert powers[(0, 0, 1, 0)] == (0, 0, 1, 0)
    assert powers[(0, 0, 0, 1)] == (0, 0, 0, 1)


def test_local_equations_z4_power():
    system = local_equations(Z4, [("s", CyclicPair.from_element(Z4.element((1,))))])
    quartic = [rel for rel in system.power_relations if rel.degree == 4]
    assert any(rel.sigma_exponents == (1,) for rel in quartic)


def test_local_equation_exponent_bookkeeping():
    group = FiniteAbelianGroup((2, 4))
    data = [
        ("u", CyclicPair.from_element(group.element((1, 0)))),
        ("v", CyclicPair.from_element(group.element((0, 1)))),
        ("w", CyclicPair.from_element(group.element((1, 2)))),
    ]
    system = local_equations(group, data)
    pairs = [pair for _, pair in data]
    for rel in system.pair_relations:
        for i, pair in enumerate(pairs):
            a = character_exponent(rel.chi, pair)
            b = character_exponent(rel.chi_prime, pair)
            c = character_exponent(rel.product, pair)
            assert a + b == c + pair.order * rel.sigma_exponents[i]
