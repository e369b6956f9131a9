"""Exact arithmetic for finite abelian groups, their characters and cyclic pairs.

A group is fixed by an explicit cyclic decomposition ``Z_{n_1} x ... x Z_{n_s}``;
no Smith-normal-form reduction is ever applied, so element and character
coordinates keep the meaning the caller gave them.  Character values live in
Q/Z and are represented by reduced fractions (:class:`Residue`), never floats.

Everything here is immutable and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, lcm, prod
from typing import Iterable, Iterator, Sequence

#: Hard cap on eager subgroup/kernel enumeration.
SUBGROUP_LIMIT = 2**16


class ShapeError(ValueError):
    """An element or character does not match the group's cyclic decomposition."""


class SizeError(ValueError):
    """An enumeration request exceeds :data:`SUBGROUP_LIMIT`."""


@dataclass(frozen=True)
class Residue:
    """A value in Q/Z stored as a reduced fraction ``num/den`` with ``0 <= num < den``."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den <= 0 or not 0 <= self.num < self.den:
            raise ValueError(f"not a normalized residue: {self.num}/{self.den}")
        if self.num and gcd(self.num, self.den) != 1:
            raise ValueError(f"not reduced: {self.num}/{self.den}")
        if self.num == 0 and self.den != 1:
            raise ValueError("zero residue must be 0/1")

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> "Residue":
        frac = Fraction(value) % 1
        return cls(frac.numerator, frac.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    def __add__(self, other: "Residue") -> "Residue":
        return Residue.from_fraction(self.fraction + other.fraction)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """``Z_{n_1} x ... x Z_{n_s}`` with the given cyclic decomposition.

    The empty decomposition is the trivial group.
    """

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(n < 2 for n in self.orders):
            raise ValueError(f"cyclic orders must be >= 2, got {self.orders}")

    @property
    def order(self) -> int:
        return prod(self.orders)

    @property
    def exponent(self) -> int:
        return lcm(*self.orders) if self.orders else 1

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def is_two_torsion(self) -> bool:
        return all(n == 2 for n in self.orders)

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * len(self.orders))

    def element(self, coeffs: Sequence[int]) -> "GroupElement":
        if len(coeffs) != len(self.orders):
            raise ShapeError(f"expected {len(self.orders)} coordinates, got {len(coeffs)}")
        return GroupElement(self, tuple(c % n for c, n in zip(coeffs, self.orders)))

    def elements(self) -> Iterator["GroupElement"]:
        for coeffs in product(*(range(n) for n in self.orders)):
            yield GroupElement(self, coeffs)

    def trivial_character(self) -> "Character":
        return Character(self, (0,) * len(self.orders))

    def character(self, coeffs: Sequence[int]) -> "Character":
        if len(coeffs) != len(self.orders):
            raise ShapeError(f"expected {len(self.orders)} coordinates, got {len(coeffs)}")
        return Character(self, tuple(c % n for c, n in zip(coeffs, self.orders)))

    def characters(self) -> Iterator["Character"]:
        for coeffs in product(*(range(n) for n in self.orders)):
            yield Character(self, coeffs)

    def nontrivial_characters(self) -> Iterator["Character"]:
        return (chi for chi in self.characters() if not chi.is_trivial)

    def __str__(self) -> str:
        if not self.orders:
            return "0"
        return " x ".join(f"Z{n}" for n in self.orders)


def _coordinate_order(coeffs: tuple[int, ...], orders: tuple[int, ...]) -> int:
    return lcm(*(n // gcd(c, n) for c, n in zip(coeffs, orders))) if orders else 1


@dataclass(frozen=True)
class GroupElement:
    group: FiniteAbelianGroup
    coeffs: tuple[int, ...]

    def _check(self, other: "GroupElement") -> None:
        if self.group != other.group:
            raise ShapeError("elements of different groups")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return self.group.element(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "GroupElement":
        return self.group.element(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __rmul__(self, k: int) -> "GroupElement":
        return self.group.element(tuple(k * a for a in self.coeffs))

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    @property
    def order(self) -> int:
        return _coordinate_order(self.coeffs, self.group.orders)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coeffs)) + ")"


@dataclass(frozen=True)
class Character:
    """A character of the group, written additively into Q/Z.

    ``chi(g) = sum_j coeffs[j] * g[j] / n_j mod 1``.
    """

    group: FiniteAbelianGroup
    coeffs: tuple[int, ...]

    def __mul__(self, other: "Character") -> "Character":
        if self.group != other.group:
            raise ShapeError("characters of different groups")
        return self.group.character(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def inverse(self) -> "Character":
        return self.group.character(tuple(-a for a in self.coeffs))

    @property
    def is_trivial(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    @property
    def order(self) -> int:
        return _coordinate_order(self.coeffs, self.group.orders)

    def pairing(self, g: GroupElement) -> Fraction:
        """The value chi(g) as a fraction normalized into [0, 1)."""
        if g.group != self.group:
            raise ShapeError("element of a different group")
        total = sum(
            (Fraction(a * c, n) for a, c, n in zip(self.coeffs, g.coeffs, self.group.orders)),
            Fraction(0),
        )
        return total % 1

    def value(self, g: GroupElement) -> Residue:
        return Residue.from_fraction(self.pairing(g))

    def is_trivial_on(self, g: GroupElement) -> bool:
        return self.pairing(g) == 0

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.coeffs)) + "]"


@dataclass(frozen=True)
class CyclicPair:
    """A cyclic subgroup ``H = <generator>`` of order ``m`` together with a
    primitive character ``psi`` of ``H``, pinned by ``psi(generator) = psi_exponent/m``."""

    generator: GroupElement
    order: int
    psi_exponent: int = 1

    def __post_init__(self) -> None:
        if self.generator.order != self.order:
            raise ValueError(
                f"generator {self.generator} has order {self.generator.order}, not {self.order}"
            )
        if gcd(self.psi_exponent, self.order) != 1:
            raise ValueError(f"psi exponent {self.psi_exponent} is not prime to {self.order}")

    @classmethod
    def from_element(cls, g: GroupElement, psi_exponent: int = 1) -> "CyclicPair":
        return cls(g, g.order, psi_exponent)

    @property
    def group(self) -> FiniteAbelianGroup:
        return self.generator.group

    @property
    def psi_value(self) -> Fraction:
        """psi evaluated at the generator, in [0, 1)."""
        return Fraction(self.psi_exponent % self.order, self.order)


@dataclass(frozen=True)
class Subgroup:
    group: FiniteAbelianGroup
    generators: tuple[GroupElement, ...]
    elements: frozenset[GroupElement]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.elements


def subgroup_generated(group: FiniteAbelianGroup, gens: Iterable[GroupElement]) -> Subgroup:
    """The smallest subgroup containing ``gens``, with its elements enumerated."""
    gens = tuple(gens)
    for g in gens:
        if g.group != group:
            raise ShapeError(f"element {g} does not belong to {group}")
    closure = {group.zero()}
    frontier = [group.zero()]
    while frontier:
        current = frontier.pop()
        for g in gens:
            nxt = current + g
            if nxt not in closure:
                if len(closure) >= SUBGROUP_LIMIT:
                    raise SizeError(f"subgroup enumeration exceeds {SUBGROUP_LIMIT} elements")
                closure.add(nxt)
                frontier.append(nxt)
    return Subgroup(group, gens, frozenset(closure))


def character_exponent(chi: Character, pair: CyclicPair) -> int:
    """The unique ``a`` in ``[0, m)`` with ``chi|_H = psi^a``.

    Found by linear scan; ``m`` stays small in every supported scenario.
    """
    target = chi.pairing(pair.generator)
    step = pair.psi_value
    for a in range(pair.order):
        if (a * step) % 1 == target:
            return a
    raise ValueError(f"chi({pair.generator}) = {target} is not a multiple of psi; corrupted pair")


def epsilon(chi: Character, chi_prime: Character, pair: CyclicPair) -> int:
    """The carry term of character exponents along ``pair``; always 0 or 1."""
    a = character_exponent(chi, pair)
    b = character_exponent(chi_prime, pair)
    return (a + b) // pair.order


@dataclass(frozen=True)
class ComponentSumHom:
    """The evaluation map ``Gbar = Z_{m_1} x ... x Z_{m_k} -> G`` sending the
    j-th standard generator to ``images[j]``, with its kernel enumerated."""

    source: FiniteAbelianGroup
    images: tuple[GroupElement, ...]
    psi_exponents: tuple[int, ...]
    kernel: Subgroup

    @property
    def target(self) -> FiniteAbelianGroup:
        return self.images[0].group

    def image_of(self, v: GroupElement) -> GroupElement:
        if v.group != self.source:
            raise ShapeError("vector does not live in the source group")
        total = self.target.zero()
        for c, img in zip(v.coeffs, self.images):
            total = total + c * img
        return total


def component_sum_hom(group: FiniteAbelianGroup, pairs: Sequence[CyclicPair]) -> ComponentSumHom:
    """Assemble ``Gbar = (+) H_i -> G`` from cyclic pairs and enumerate its kernel."""
    if not pairs:
        raise ValueError("at least one cyclic pair is required")
    for pair in pairs:
        if pair.group != group:
            raise ShapeError("pair generator lives in a different group")
    source = FiniteAbelianGroup(tuple(p.order for p in pairs))
    if source.order > SUBGROUP_LIMIT:
        raise SizeError(f"kernel enumeration over {source.order} elements exceeds the limit")
    images = tuple(p.generator for p in pairs)
    kernel_elements = []
    for v in source.elements():
        total = group.zero()
        for c, img in zip(v.coeffs, images):
            total = total + c * img
        if total.is_zero:
            kernel_elements.append(v)
    kernel = Subgroup(source, tuple(kernel_elements), frozenset(kernel_elements))
    return ComponentSumHom(source, images, tuple(p.psi_exponent for p in pairs), kernel)


def residual_index(hom: ComponentSumHom, barchi_mask: Iterable[int]) -> int:
    """``|N / (N ∩ ker chibar)|`` where ``chibar`` is the product of the masked psi's.

    ``barchi_mask`` holds 0-based indices into the hom's components.
    """
    mask = set(barchi_mask)
    if not mask <= set(range(len(hom.images))):
        raise ValueError(f"mask {sorted(mask)} out of range")
    steps = [
        Fraction(a, m) if j in mask else Fraction(0)
        for j, (a, m) in enumerate(zip(hom.psi_exponents, hom.source.orders))
    ]
    in_kernel_of_chibar = 0
    for v in hom.kernel.elements:
        total = sum((c * s for c, s in zip(v.coeffs, steps)), Fraction(0))
        if total % 1 == 0:
            in_kernel_of_chibar += 1
    size = hom.kernel.order
    assert size % in_kernel_of_chibar == 0
    return size // in_kernel_of_chibar
