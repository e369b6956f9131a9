"""Two built-in Z2xZ2-covers of reducible surfaces, ready for the invariant
pipeline.

``two_component_cover``: the quadric and the plane glued along a curve of
bidegree (1,1) / a line, with three branch lines of each nonzero group
element on either side arranged so that the three declared points of the
double curve all become relevant.  K^2 = 6, chi(O) = 1.

``plane_cycle_cover``: six planes glued in a cycle along lines through one
common point (the cone point over a cycle of six rational curves).  Each
plane carries three branch lines: a pair sharing the previous double line's
element, concurrent at a declared point of the next double line, plus one
line of the remaining element.  The cone point is the only relevant point.
K^2 = 6, chi(O) = 1.
"""

from __future__ import annotations

from .covers import BranchDatum, BuildingData
from .groups import CyclicPair, FiniteAbelianGroup
from .gluing import GluingProblem, make_problem
from .surfaces import (
    BRANCH,
    DOUBLE,
    CurveDecl,
    CurveSide,
    GdcSurface,
    PointDecl,
    p1xp1,
    p2,
)

Z2Z2 = FiniteAbelianGroup((2, 2))


def two_component_cover() -> GluingProblem:
    group = Z2Z2
    a, b, c = group.element((1, 0)), group.element((0, 1)), group.element((1, 1))
    elements = {1: a, 2: b, 3: c}
    quadric = p1xp1()
    plane = p2()

    curves = [
        CurveDecl(
            "C",
            DOUBLE,
            (
                CurveSide("Y1", quadric.divisor((1, 1))),
                CurveSide("Y2", plane.divisor((1,))),
            ),
        )
    ]
    points = {m: [] for m in (1, 2, 3)}  # point index -> incident curve ids
    y1_data = []
    y2_data = []
    for j in (1, 2, 3):
        # a fibre and a section through y_{j-1} on the quadric
        for name, cls in ((f"f{j}", (1, 0)), (f"s{j}", (0, 1))):
            curves.append(CurveDecl(name, BRANCH, (CurveSide("Y1", quadric.divisor(cls)),)))
            y1_data.append(BranchDatum(name, CyclicPair.from_element(elements[j])))
            points[(j - 2) % 3 + 1].append(name)
        # a pair of lines through y_{j+1} on the plane
        for tag in ("a", "b"):
            name = f"l{j}{tag}"
            curves.append(CurveDecl(name, BRANCH, (CurveSide("Y2", plane.divisor((1,))),)))
            y2_data.append(BranchDatum(name, CyclicPair.from_element(elements[j])))
            points[j % 3 + 1].append(name)

    surface = GdcSurface(
        (("Y1", quadric), ("Y2", plane)),
        tuple(curves),
        tuple(
            PointDecl(f"y{m}", ("C",) + tuple(sorted(points[m]))) for m in (1, 2, 3)
        ),
    )
    building = {
        "Y1": BuildingData(group, "Y1", tuple(y1_data)),
        "Y2": BuildingData(group, "Y2", tuple(y2_data)),
    }
    return make_problem(surface, group, building, {"C": group.zero()})


def plane_cycle_cover() -> GluingProblem:
    group = Z2Z2
    a, b, c = group.element((1, 0)), group.element((0, 1)), group.element((1, 1))
    g = {1: a, 2: b, 3: c, 4: a, 5: b, 6: c}  # double-line elements, period 3
    plane = p2()

    def missing(i: int):
        (value,) = {a, b, c} - {g[(i - 2) % 6 + 1], g[i]}
        return value

    components = tuple((f"Y{i}", plane) for i in range(1, 7))
    curves = []
    for i in range(1, 7):
        nxt = i % 6 + 1
        curves.append(
            CurveDecl(
                f"F{i}",
                DOUBLE,
                (
                    CurveSide(f"Y{i}", plane.divisor((1,))),
                    CurveSide(f"Y{nxt}", plane.divisor((1,))),
                ),
            )
        )
    building: dict[str, BuildingData] = {}
    incidence: dict[str, list[str]] = {f"q{i}": [f"F{i}"] for i in range(1, 7)}
    incidence.update({f"r{i}": [f"F{i}"] for i in range(1, 7)})
    for i in range(1, 7):
        prev = (i - 2) % 6 + 1
        # two lines with the previous double element: both through q_{prev},
        # crossing F_i separately (one at q_i together with m_i, one at r_i)
        pair1, pair2, mline = f"p{i}a", f"p{i}b", f"m{i}"
        data = []
        for name, element in ((pair1, g[prev]), (pair2, g[prev]), (mline, missing(i))):
            curves.append(CurveDecl(name, BRANCH, (CurveSide(f"Y{i}", plane.divisor((1,))),)))
            data.append(BranchDatum(name, CyclicPair.from_element(element)))
        # both adjacent double curves are branch data on this component too,
        # listed in declaration order to match the document round trip
        for l in sorted((prev, i)):
            data.append(BranchDatum(f"F{l}", CyclicPair.from_element(g[l])))
        building[f"Y{i}"] = BuildingData(group, f"Y{i}", tuple(data))
        incidence[f"q{prev}"] += [pair1, pair2]
        incidence[f"q{i}"] += [pair1, mline]
        incidence[f"r{i}"].append(pair2)
        # m_i meets F_{i-1} at r_{i-1}, paired with Y_{i-1}'s second pair line
        incidence[f"r{prev}"].append(mline)
    points = [
        PointDecl(
            "y",
            tuple(f"F{i}" for i in range(1, 7)),
            c_singular=True,
            cycle=tuple((f"Y{i}", f"F{i}") for i in range(1, 7)),
        )
    ]
    for i in range(1, 7):
        points.append(PointDecl(f"q{i}", tuple(sorted(incidence[f"q{i}"]))))
        points.append(PointDecl(f"r{i}", tuple(sorted(incidence[f"r{i}"]))))
    surface = GdcSurface(components, tuple(curves), tuple(points))
    doubles = {f"F{i}": g[i] for i in range(1, 7)}
    return make_problem(surface, group, building, doubles)
