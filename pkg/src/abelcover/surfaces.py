"""Intersection-lattice surface models and the incidence skeleton of a g.d.c. surface.

Components are smooth projective surfaces known only through their Picard
lattice, canonical class and chi(O); the two catalog kinds (the plane and the
smooth quadric) additionally know their line-bundle cohomology.  Curves and
points are pure incidence declarations: there is no coordinate geometry here,
so callers must declare every intersection point they care about.

Linear equivalence is identified with lattice equality throughout; torsion
Picard groups are not representable and are rejected at input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

P2 = "P2"
P1XP1 = "P1xP1"
LATTICE = "LATTICE"

BRANCH = "BRANCH"
DOUBLE = "DOUBLE"


class SurfaceMismatchError(ValueError):
    """Divisor classes on different surface models were combined."""


class ParityError(ValueError):
    """Riemann-Roch produced a non-integral Euler characteristic."""


class UnsupportedKindError(ValueError):
    """Cohomology was requested for a kind outside the catalog."""


@dataclass(frozen=True)
class SmoothSurfaceModel:
    kind: str
    gram: tuple[tuple[int, ...], ...]
    canonical: tuple[int, ...]
    chi_o: int

    def __post_init__(self) -> None:
        n = len(self.gram)
        if any(len(row) != n for row in self.gram):
            raise ValueError("intersection form must be square")
        if any(self.gram[i][j] != self.gram[j][i] for i in range(n) for j in range(n)):
            raise ValueError("intersection form must be symmetric")
        if len(self.canonical) != n:
            raise ValueError("canonical class has the wrong rank")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def divisor(self, coeffs: Sequence[Fraction | int]) -> "QDivisorClass":
        if len(coeffs) != self.rank:
            raise ValueError(f"expected {self.rank} coefficients, got {len(coeffs)}")
        return QDivisorClass(self, tuple(Fraction(c) for c in coeffs))

    def zero(self) -> "QDivisorClass":
        return self.divisor((0,) * self.rank)

    def canonical_class(self) -> "QDivisorClass":
        return self.divisor(self.canonical)


def p2() -> SmoothSurfaceModel:
    """The projective plane: rank 1, H^2 = 1, K = -3H."""
    return SmoothSurfaceModel(P2, ((1,),), (-3,), 1)


def p1xp1() -> SmoothSurfaceModel:
    """The smooth quadric: hyperbolic rank-2 lattice, K = (-2,-2)."""
    return SmoothSurfaceModel(P1XP1, ((0, 1), (1, 0)), (-2, -2), 1)


def lattice_surface(
    gram: Sequence[Sequence[int]], canonical: Sequence[int], chi_o: int
) -> SmoothSurfaceModel:
    return SmoothSurfaceModel(
        LATTICE, tuple(tuple(row) for row in gram), tuple(canonical), chi_o
    )


@dataclass(frozen=True)
class QDivisorClass:
    surface: SmoothSurfaceModel
    coeffs: tuple[Fraction, ...]

    def _check(self, other: "QDivisorClass") -> None:
        if self.surface != other.surface:
            raise SurfaceMismatchError("divisor classes live on different surfaces")

    def __add__(self, other: "QDivisorClass") -> "QDivisorClass":
        self._check(other)
        return QDivisorClass(self.surface, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "QDivisorClass") -> "QDivisorClass":
        self._check(other)
        return QDivisorClass(self.surface, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "QDivisorClass":
        return QDivisorClass(self.surface, tuple(-a for a in self.coeffs))

    def __rmul__(self, k: Fraction | int) -> "QDivisorClass":
        k = Fraction(k)
        return QDivisorClass(self.surface, tuple(k * a for a in self.coeffs))

    @property
    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coeffs)

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.coeffs) + ")"


def intersect(a: QDivisorClass, b: QDivisorClass) -> Fraction:
    """The intersection pairing a^T . gram . b."""
    a._check(b)
    gram = a.surface.gram
    return sum(
        (a.coeffs[i] * gram[i][j] * b.coeffs[j] for i in range(len(gram)) for j in range(len(gram))),
        Fraction(0),
    )


def euler_char_inverse(bundle: QDivisorClass) -> int:
    """chi(O(-L)) for an integral class L, via Riemann-Roch: chi(O) + L.(L+K)/2."""
    if not bundle.is_integral:
        raise ParityError(f"class {bundle} is not integral")
    k = bundle.surface.canonical_class()
    value = bundle.surface.chi_o + Fraction(1, 2) * intersect(bundle, bundle + k)
    if value.denominator != 1:
        raise ParityError(f"Riemann-Roch of {bundle} is not an integer; not a divisor class")
    return int(value)


def p1_cohomology(degree: int) -> tuple[int, int]:
    """(h0, h1) of O(degree) on a smooth rational curve."""
    if degree >= 0:
        return degree + 1, 0
    return 0, -degree - 1


def cohomology(bundle: QDivisorClass) -> tuple[int, int, int]:
    """Exact cohomology of O(bundle) for the catalog kinds.

    The plane has no h^1 at all; on the quadric h^1 vanishes except for
    mixed-sign bidegrees, where the Kunneth product produces it.
    """
    if not bundle.is_integral:
        raise ParityError(f"class {bundle} is not integral")
    kind = bundle.surface.kind
    coeffs = tuple(int(c) for c in bundle.coeffs)
    if kind == P2:
        (d,) = coeffs
        h0 = comb(d + 2, 2) if d >= 0 else 0
        dual = -3 - d
        h2 = comb(dual + 2, 2) if dual >= 0 else 0
        return h0, 0, h2
    if kind == P1XP1:
        a, b = coeffs
        ha = p1_cohomology(a)
        hb = p1_cohomology(b)
        h0 = ha[0] * hb[0]
        h1 = ha[0] * hb[1] + ha[1] * hb[0]
        h2 = ha[1] * hb[1]
        return h0, h1, h2
    raise UnsupportedKindError(f"no cohomology catalog for kind {kind}")


@dataclass(frozen=True)
class CurveSide:
    component: str
    cls: QDivisorClass


@dataclass(frozen=True)
class CurveDecl:
    """A named irreducible curve: one side if it is a branch curve, two sides
    (one per adjacent component, possibly the same component) if it is a
    component of the double locus."""

    id: str
    role: str
    sides: tuple[CurveSide, ...]
    rational: bool = True


@dataclass(frozen=True)
class PointDecl:
    """A declared point, usually on the double curve.

    ``mults`` records intersection multiplicities of incident curves with the
    double curve (1 under the transverse-lines assumption).  A c-singular
    point is a cycle point of the double curve; ``cycle`` lists the
    (component, double-curve) germs around it in cyclic order.
    """

    id: str
    on: tuple[str, ...]
    mults: tuple[tuple[str, int], ...] = ()
    c_singular: bool = False
    cycle: tuple[tuple[str, str], ...] = ()

    def mult(self, curve_id: str) -> int:
        for cid, m in self.mults:
            if cid == curve_id:
                return m
        return 1


@dataclass(frozen=True)
class GdcSurface:
    components: tuple[tuple[str, SmoothSurfaceModel], ...]
    curves: tuple[CurveDecl, ...]
    points: tuple[PointDecl, ...]

    def component_model(self, cid: str) -> SmoothSurfaceModel:
        for name, model in self.components:
            if name == cid:
                return model
        raise KeyError(f"unknown component {cid!r}")

    def curve(self, cid: str) -> CurveDecl:
        for curve in self.curves:
            if curve.id == cid:
                return curve
        raise KeyError(f"unknown curve {cid!r}")

    def point(self, pid: str) -> PointDecl:
        for point in self.points:
            if point.id == pid:
                return point
        raise KeyError(f"unknown point {pid!r}")

    def double_curves(self) -> Iterator[CurveDecl]:
        return (c for c in self.curves if c.role == DOUBLE)

    def branch_curves(self) -> Iterator[CurveDecl]:
        return (c for c in self.curves if c.role == BRANCH)

    def curve_sides_on(self, cid: str, component: str) -> list[CurveSide]:
        return [s for s in self.curve(cid).sides if s.component == component]

    def components_at(self, point: PointDecl) -> list[str]:
        """Components carrying a germ of some incident curve, in declaration order."""
        seen: list[str] = []
        for cid in point.on:
            for side in self.curve(cid).sides:
                if side.component not in seen:
                    seen.append(side.component)
        return seen


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.findings


def validate_surface(surface: GdcSurface) -> ValidationReport:
    """Check the incidence skeleton; group-theoretic conditions live elsewhere."""
    findings: list[str] = []
    component_ids = [cid for cid, _ in surface.components]
    if len(set(component_ids)) != len(component_ids):
        findings.append("duplicate component ids")
    curve_ids = [c.id for c in surface.curves]
    if len(set(curve_ids)) != len(curve_ids):
        findings.append("duplicate curve ids")
    point_ids = [p.id for p in surface.points]
    if len(set(point_ids)) != len(point_ids):
        findings.append("duplicate point ids")

    for curve in surface.curves:
        if curve.role not in (BRANCH, DOUBLE):
            findings.append(f"curve {curve.id}: unknown role {curve.role!r}")
            continue
        expected = 1 if curve.role == BRANCH else 2
        if len(curve.sides) != expected:
            findings.append(
                f"curve {curve.id}: {curve.role} curve must have {expected} side(s), "
                f"has {len(curve.sides)}"
            )
        if curve.role == DOUBLE and not curve.rational:
            findings.append(f"curve {curve.id}: double curves must be smooth rational")
        for side in curve.sides:
            if side.component not in component_ids:
                findings.append(f"curve {curve.id}: dangling component {side.component!r}")
            elif side.cls.surface != surface.component_model(side.component):
                findings.append(f"curve {curve.id}: class not on component {side.component}")

    curve_set = set(curve_ids)
    for point in surface.points:
        for cid in point.on:
            if cid not in curve_set:
                findings.append(f"point {point.id}: dangling curve {cid!r}")
        for cid, m in point.mults:
            if cid not in point.on:
                findings.append(f"point {point.id}: multiplicity for non-incident curve {cid!r}")
            if m < 1:
                findings.append(f"point {point.id}: non-positive multiplicity on {cid!r}")
        incident_doubles = [
            cid for cid in point.on if cid in curve_set and surface.curve(cid).role == DOUBLE
        ]
        if point.c_singular:
            non_double = [cid for cid in point.on if cid not in incident_doubles]
            if non_double:
                findings.append(
                    f"point {point.id}: c-singular point lies on non-double curves {non_double}"
                )
            findings.extend(_validate_cycle(surface, point, component_ids))
        elif len(incident_doubles) > 1:
            findings.append(
                f"point {point.id}: smooth point of the double curve lies on "
                f"{len(incident_doubles)} double curves"
            )
    return ValidationReport(tuple(findings))


def _validate_cycle(
    surface: GdcSurface, point: PointDecl, component_ids: list[str]
) -> list[str]:
    findings: list[str] = []
    q = len(point.cycle)
    if q < 2:
        findings.append(f"point {point.id}: cycle must list at least two germs, has {q}")
        return findings
    cycle_curves = [cid for _, cid in point.cycle]
    if set(cycle_curves) != set(point.on) or len(set(cycle_curves)) != q:
        findings.append(f"point {point.id}: cycle curves do not match the incidence list")
    for i, (comp, cid) in enumerate(point.cycle):
        nxt_comp = point.cycle[(i + 1) % q][0]
        if comp not in component_ids:
            findings.append(f"point {point.id}: cycle references unknown component {comp!r}")
            continue
        try:
            curve = surface.curve(cid)
        except KeyError:
            findings.append(f"point {point.id}: cycle references unknown curve {cid!r}")
            continue
        side_comps = sorted(s.component for s in curve.sides)
        if sorted((comp, nxt_comp)) != side_comps:
            findings.append(
                f"point {point.id}: cycle edge {cid} does not join {comp} and {nxt_comp}"
            )
    return findings
