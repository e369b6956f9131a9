"""Building data for standard abelian covers of the smooth components.

A cover is handled purely through its building data: branch curves labelled
with cyclic pairs, and one divisor class per nontrivial character subject to
the fundamental relations.  Covers with identical building data are never
distinguished (their isomorphism class over a projective base depends on
nothing else, and every quantity computed here depends only on the data).

In the reducible-base setting the double-curve components carry branch data
too (with the inertia generator of the double curve); they are excluded from
the Hurwitz divisor, which weighs genuine branch curves only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .groups import (
    Character,
    CyclicPair,
    FiniteAbelianGroup,
    Subgroup,
    character_exponent,
    epsilon,
    subgroup_generated,
)
from .surfaces import BRANCH, DOUBLE, GdcSurface, QDivisorClass


class MissingBundleError(KeyError):
    """A line-bundle map omits a nontrivial character."""


class NoSolutionError(ValueError):
    """The fundamental relations have no integral solution."""

    def __init__(self, character: Character, fractional: QDivisorClass):
        self.character = character
        self.fractional = fractional
        super().__init__(
            f"no integral class for character {character}: candidate {fractional} is fractional"
        )


@dataclass(frozen=True)
class BranchDatum:
    curve: str
    pair: CyclicPair


@dataclass(frozen=True)
class BuildingData:
    """Branch data of the standard cover of one component, with the eigensheaf
    classes when they are pinned explicitly (otherwise solve for them)."""

    group: FiniteAbelianGroup
    component: str
    branches: tuple[BranchDatum, ...]
    line_bundles: tuple[tuple[Character, QDivisorClass], ...] | None = None

    def bundle_map(self) -> dict[Character, QDivisorClass]:
        if self.line_bundles is None:
            raise MissingBundleError(f"component {self.component}: no line bundles recorded")
        return dict(self.line_bundles)

    def with_line_bundles(
        self, bundles: Mapping[Character, QDivisorClass]
    ) -> "BuildingData":
        items = tuple(sorted(bundles.items(), key=lambda kv: kv[0].coeffs))
        return BuildingData(self.group, self.component, self.branches, items)


def curve_class_on(surface: GdcSurface, component: str, curve_id: str) -> QDivisorClass:
    sides = surface.curve_sides_on(curve_id, component)
    if len(sides) != 1:
        raise ValueError(
            f"curve {curve_id} has {len(sides)} sides on component {component}; need exactly one"
        )
    return sides[0].cls


def _bundle(bundles: Mapping[Character, QDivisorClass], chi: Character, zero: QDivisorClass):
    if chi.is_trivial:
        return zero
    if chi not in bundles:
        raise MissingBundleError(f"no class recorded for character {chi}")
    return bundles[chi]


@dataclass(frozen=True)
class RelationCheck:
    ok: bool
    first_violation: tuple[Character, Character] | None = None


def check_fundamental_relations(surface: GdcSurface, bd: BuildingData) -> RelationCheck:
    """Verify L_chi + L_chi' = L_{chi chi'} + sum_i eps^i . [D_i] as lattice equalities."""
    bundles = bd.bundle_map()
    model = surface.component_model(bd.component)
    zero = model.zero()
    classes = [curve_class_on(surface, bd.component, b.curve) for b in bd.branches]
    chars = [chi for chi in bd.group.characters() if not chi.is_trivial]
    for i, chi in enumerate(chars):
        for chi_prime in chars[i:]:
            lhs = _bundle(bundles, chi, zero) + _bundle(bundles, chi_prime, zero)
            rhs = _bundle(bundles, chi * chi_prime, zero)
            for datum, cls in zip(bd.branches, classes):
                eps = epsilon(chi, chi_prime, datum.pair)
                if eps:
                    rhs = rhs + eps * cls
            if lhs != rhs:
                return RelationCheck(False, (chi, chi_prime))
    return RelationCheck(True)


def solve_line_bundles(
    surface: GdcSurface, bd: BuildingData
) -> dict[Character, QDivisorClass]:
    """Solve the fundamental relations for the eigensheaf classes.

    In a torsion-free lattice the class of order-d character chi is pinned by
    d . L_chi = sum_i (d a^i_chi / m_i) [D_i]; integrality of the division by
    d is exactly solvability.
    """
    model = surface.component_model(bd.component)
    classes = [curve_class_on(surface, bd.component, b.curve) for b in bd.branches]
    solution: dict[Character, QDivisorClass] = {}
    for chi in bd.group.characters():
        if chi.is_trivial:
            continue
        d = chi.order
        total = model.zero()
        for datum, cls in zip(bd.branches, classes):
            a = character_exponent(chi, datum.pair)
            coeff = Fraction(d * a, datum.pair.order)
            assert coeff.denominator == 1, "character exponent inconsistent with order"
            total = total + int(coeff) * cls
        candidate = Fraction(1, d) * total
        if not candidate.is_integral:
            raise NoSolutionError(chi, candidate)
        solution[chi] = candidate
    return solution


@dataclass(frozen=True)
class HurwitzDivisor:
    """Per-curve multiplicities of the Hurwitz divisor.  Double-locus
    components carry rho = 0 and are listed separately."""

    mults: tuple[tuple[str, Fraction], ...]
    double_locus: tuple[str, ...] = ()

    def mult(self, curve_id: str) -> Fraction:
        for cid, m in self.mults:
            if cid == curve_id:
                return m
        return Fraction(0)

    def items(self) -> tuple[tuple[str, Fraction], ...]:
        return self.mults


def hurwitz_divisor(
    bd: BuildingData, double_curves: Iterable[str] = ()
) -> HurwitzDivisor:
    """Accumulate (m_i - 1)/m_i over the branch data; coincident curves add up."""
    doubles = set(double_curves)
    acc: dict[str, Fraction] = {}
    seen_doubles: list[str] = []
    for datum in bd.branches:
        if datum.curve in doubles:
            if datum.curve not in seen_doubles:
                seen_doubles.append(datum.curve)
            continue
        m = datum.pair.order
        acc[datum.curve] = acc.get(datum.curve, Fraction(0)) + Fraction(m - 1, m)
    ordered = tuple(sorted(acc.items()))
    return HurwitzDivisor(ordered, tuple(seen_doubles))


@dataclass(frozen=True)
class StructureFlags:
    normal: bool
    gdc: bool
    standardable: bool


def structure_flags(bd: BuildingData, double_curves: Iterable[str] = ()) -> StructureFlags:
    """Normality / g.d.c. / standard-along-singular-divisors from the Hurwitz weights."""
    divisor = hurwitz_divisor(bd, double_curves)
    mults = dict(divisor.mults)
    normal = all(m < 1 for m in mults.values())
    gdc = all(m <= 1 for m in mults.values())
    standardable = True
    for cid, m in mults.items():
        if m == 1:
            data = [b for b in bd.branches if b.curve == cid]
            if len(data) != 2 or any(b.pair.order != 2 for b in data):
                standardable = False
    return StructureFlags(normal, gdc, standardable)


@dataclass(frozen=True)
class SlcViolation:
    component: str
    locus: str
    multiplicity: Fraction


@dataclass(frozen=True)
class SlcResult:
    ok: bool
    violations: tuple[SlcViolation, ...]


def slc_check(surface: GdcSurface, building: Mapping[str, BuildingData]) -> SlcResult:
    """The numeric slc criterion on the normalization: every component of
    nu*D + C' has multiplicity <= 1 and every declared point multiplicity <= 2.

    Uses declared points only; callers must declare every intersection point
    among branch and double curves.
    """
    violations: list[SlcViolation] = []
    for comp, bd in sorted(building.items()):
        doubles = {c.id for c in surface.double_curves()}
        divisor = hurwitz_divisor(bd, doubles)
        for cid, m in divisor.mults:
            if m > 1:
                violations.append(SlcViolation(comp, cid, m))
    for point in surface.points:
        for comp in surface.components_at(point):
            total = Fraction(0)
            for cid in point.on:
                curve = surface.curve(cid)
                germs = len(surface.curve_sides_on(cid, comp))
                if germs == 0:
                    continue
                if curve.role == DOUBLE:
                    total += germs
                else:
                    bd = building.get(comp)
                    if bd is None:
                        continue
                    for datum in bd.branches:
                        if datum.curve == cid:
                            m = datum.pair.order
                            total += Fraction(m - 1, m)
            if total > 2:
                violations.append(SlcViolation(comp, point.id, total))
    violations.sort(key=lambda v: (v.component, v.locus))
    return SlcResult(not violations, tuple(violations))


def inertia_at_point(
    surface: GdcSurface, building: Mapping[str, BuildingData], point_id: str
) -> Subgroup:
    """Subgroup generated by every branch datum through the point, double-curve
    germs included (their generators sit in the building data of each side)."""
    point = surface.point(point_id)
    group = next(iter(building.values())).group
    gens = []
    for comp in sorted(building):
        for datum in building[comp].branches:
            if datum.curve in point.on:
                gens.append(datum.pair.generator)
    return subgroup_generated(group, gens)


@dataclass(frozen=True)
class PairRelation:
    chi: Character
    chi_prime: Character
    sigma_exponents: tuple[int, ...]
    product: Character


@dataclass(frozen=True)
class PowerRelation:
    chi: Character
    degree: int
    sigma_exponents: tuple[int, ...]


@dataclass(frozen=True)
class LocalEquationSystem:
    symbols: tuple[str, ...]
    pair_relations: tuple[PairRelation, ...]
    power_relations: tuple[PowerRelation, ...]

    def render(self) -> str:
        lines = []
        for rel in self.power_relations:
            rhs = _monomial(self.symbols, rel.sigma_exponents)
            lines.append(f"z{rel.chi}^{rel.degree} = {rhs}")
        for rel in self.pair_relations:
            parts = []
            mono = _monomial(self.symbols, rel.sigma_exponents)
            if mono != "1":
                parts.append(mono)
            if not rel.product.is_trivial:
                parts.append(f"z{rel.product}")
            rhs = " ".join(parts) if parts else "1"
            lines.append(f"z{rel.chi} z{rel.chi_prime} = {rhs}")
        return "\n".join(lines)


def _monomial(symbols: Sequence[str], exponents: Sequence[int]) -> str:
    parts = []
    for sym, e in zip(symbols, exponents):
        if e == 1:
            parts.append(sym)
        elif e > 1:
            parts.append(f"{sym}^{e}")
    return "*".join(parts) if parts else "1"


def local_equations(
    group: FiniteAbelianGroup, branch_symbols: Sequence[tuple[str, CyclicPair]]
) -> LocalEquationSystem:
    """Symbolic local model of the cover at a point where the named branch
    germs meet: the pairwise products z_chi z_chi' and the eliminated powers
    z_chi^d in terms of the germ equations sigma_i."""
    symbols = tuple(sym for sym, _ in branch_symbols)
    pairs = [pair for _, pair in branch_symbols]
    chars = [chi for chi in group.characters() if not chi.is_trivial]
    pair_rels = []
    for i, chi in enumerate(chars):
        for chi_prime in chars[i:]:
            exps = tuple(epsilon(chi, chi_prime, p) for p in pairs)
            pair_rels.append(PairRelation(chi, chi_prime, exps, chi * chi_prime))
    power_rels = []
    for chi in chars:
        d = chi.order
        exps = []
        for p in pairs:
            a = character_exponent(chi, p)
            coeff = Fraction(d * a, p.order)
            assert coeff.denominator == 1
            exps.append(int(coeff))
        power_rels.append(PowerRelation(chi, d, tuple(exps)))
    return LocalEquationSystem(symbols, tuple(pair_rels), tuple(power_rels))
