"""Automorphism groups of the classified surfaces.

For each class we give two groups: the normalizer of the order-p cyclic
subgroup (written aut' below) and the full automorphism group.  The two
agree whenever the cyclic subgroup is normal, which holds for every class
here except three famous curves:

* the Klein quartic (p = 7, three fixed points, class of k = 2), full
  group of order 168;
* Bring's curve (p = 5, square tiling, the k5 class), full group S_5 of
  order 120;
* the genus-2 curve with 48 automorphisms (p = 3, GL(2, F_3)).  This one
  sits at a single non-special value of the tiling parameter, not at any
  equilateral or square class, so it is reported as family metadata rather
  than as a class-level group: the p = 3 square class of (-1, -1) is the
  genus-2 curve y^2 = x^6 - 1 with the expected group of order 8p = 24.

Group descriptors are structural tags with orders, not element-wise group
objects.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gimel import KappaCase, LambdaClass, TilingFlavor, TilingShape
from .lefschetz import CardinalityCase, OmegaClass
from .modular import AtlasError


class FlavorMismatch(AtlasError):
    """The class and the tiling shape disagree on the flavor."""


@dataclass(frozen=True)
class AutGroupDescriptor:
    """A structural group description: tag, order, parameters, provenance."""

    kind: str  # cyclic | dihedral | semidirect_cyclic | two_two_semidirect | exceptional
    order: int
    params: tuple[int, ...] = ()
    source: str = "paper"

    @property
    def structure(self) -> str:
        """Compact structure tag; a colon marks a semidirect product."""
        if self.kind == "cyclic":
            return f"Z/{self.order}Z"
        if self.kind == "dihedral":
            return f"D_{self.params[0]}"
        if self.kind == "semidirect_cyclic":
            a, b = self.params
            return f"Z/{a}Z:Z/{b}Z"
        if self.kind == "two_two_semidirect":
            (p,) = self.params
            return f"(Z/2ZxZ/{2 * p}Z):Z/2Z"
        if self.kind == "exceptional":
            return {48: "GL(2,F_3)", 120: "S_5", 168: "PSL(2,F_7)"}[self.order]
        raise AssertionError(self.kind)

    def is_cyclic_of(self, n: int) -> bool:
        return self.kind == "cyclic" and self.order == n

    def to_json(self) -> dict:
        return {"structure": self.structure, "order": self.order, "source": self.source}

    def __str__(self) -> str:
        return f"{self.structure} (order {self.order})"


def cyclic(n: int) -> AutGroupDescriptor:
    return AutGroupDescriptor("cyclic", n)


def dihedral(m: int) -> AutGroupDescriptor:
    """The dihedral group D_m of order 2m."""
    return AutGroupDescriptor("dihedral", 2 * m, (m,))


def semidirect_cyclic(a: int, b: int) -> AutGroupDescriptor:
    """Z/aZ : Z/bZ of order a*b."""
    return AutGroupDescriptor("semidirect_cyclic", a * b, (a, b))


def two_two_p_semidirect(p: int) -> AutGroupDescriptor:
    """(Z/2Z x Z/2pZ) : Z/2Z of order 8p."""
    return AutGroupDescriptor("two_two_semidirect", 8 * p, (p,))


def exceptional_order(order: int, source: str = "paper") -> AutGroupDescriptor:
    return AutGroupDescriptor("exceptional", order, (), source)


def lefschetz_aut(cls: OmegaClass) -> AutGroupDescriptor:
    """Full automorphism group of a three-fixed-point class.

    Size-2 classes get Z/pZ : Z/3Z, the class of 1 gets Z/2pZ, everything
    else Z/pZ; the single exception is the Klein quartic (p = 7, class
    containing 2), whose order 168 is standard literature rather than a
    value derived here.
    """
    p = cls.p
    if p == 7 and 2 in cls.members:
        return exceptional_order(168, source="external-literature")
    if cls.cardinality_case is CardinalityCase.TWO:
        return semidirect_cyclic(p, 3)
    if 1 in cls.members:
        return cyclic(2 * p)
    return cyclic(p)


def _check_shape(cls: LambdaClass, shape: TilingShape | TilingFlavor | None) -> None:
    if shape is None:
        return
    flavor = shape if isinstance(shape, TilingFlavor) else shape.flavor
    if flavor is not cls.flavor:
        raise FlavorMismatch(f"class has {cls.flavor.value} flavor, shape says {flavor.value}")


def gimel_aut_prime(
    cls: LambdaClass, shape: TilingShape | TilingFlavor | None = None
) -> AutGroupDescriptor:
    """Normalizer of the order-p subgroup, by case family and tiling.

    k1: 3p cyclic (equilateral), 2p cyclic (square), else p cyclic.
    k2: 2p cyclic for the square class containing a diagonal pair, else p.
    k3: 8p two-by-two semidirect for the square class of (-1,-1), else D_2p.
    k4: D_p.  k5: Z/pZ:Z/4Z for the square class of (a,-a), else D_p.
    k6: p cyclic.
    """
    _check_shape(cls, shape)
    p, flavor, kappa = cls.p, cls.flavor, cls.kappa
    if kappa is KappaCase.K1:
        if flavor is TilingFlavor.EQUILATERAL:
            return cyclic(3 * p)
        if flavor is TilingFlavor.SQUARE:
            return cyclic(2 * p)
        return cyclic(p)
    if kappa is KappaCase.K2:
        if flavor is TilingFlavor.SQUARE and cls.contains_diagonal():
            return cyclic(2 * p)
        return cyclic(p)
    if kappa is KappaCase.K3:
        if flavor is TilingFlavor.SQUARE and cls.contains_pair((p - 1, p - 1)):
            return two_two_p_semidirect(p)
        return dihedral(2 * p)
    if kappa is KappaCase.K4:
        return dihedral(p)
    if kappa is KappaCase.K5:
        if flavor is TilingFlavor.SQUARE and cls.contains_antidiagonal_root():
            return semidirect_cyclic(p, 4)
        return dihedral(p)
    return cyclic(p)


def gimel_full_aut(
    cls: LambdaClass, shape: TilingShape | TilingFlavor | None = None
) -> AutGroupDescriptor:
    """Full automorphism group of a class.

    Equal to the normalizer except for Bring's curve: the square k5 class
    at p = 5 has the full group S_5 of order 120.
    """
    base = gimel_aut_prime(cls, shape)
    if (
        cls.p == 5
        and cls.flavor is TilingFlavor.SQUARE
        and cls.kappa is KappaCase.K5
        and cls.contains_antidiagonal_root()
    ):
        return exceptional_order(120)
    return base


def is_hyperelliptic(cls: LambdaClass) -> bool:
    """True exactly for the k3 family."""
    return cls.kappa is KappaCase.K3


@dataclass(frozen=True)
class ExceptionalSurface:
    """A curve whose full group strictly exceeds the class-level normalizer."""

    p: int
    genus: int
    aut: AutGroupDescriptor
    equation: str
    location: str


EXCEPTIONAL_SURFACES: tuple[ExceptionalSurface, ...] = (
    ExceptionalSurface(
        p=3,
        genus=2,
        aut=exceptional_order(48),
        equation="y^2 = x(x^4-1)",
        location=(
            "interior of the genus-2 family, at a non-special tiling parameter"
            " (quotient branch points are neither harmonic nor equianharmonic)"
        ),
    ),
    ExceptionalSurface(
        p=5,
        genus=4,
        aut=exceptional_order(120),
        equation="y^5 = (x-1)(x-i)^2(x+1)^3(x+i)^4",
        location="square tiling, k5 class (Bring's curve)",
    ),
    ExceptionalSurface(
        p=7,
        genus=3,
        aut=exceptional_order(168, source="external-literature"),
        equation="y^7 = x(x-1)^2",
        location="three-fixed-point class of k = 2 (Klein quartic)",
    ),
)


def exceptional_surfaces(p: int | None = None) -> tuple[ExceptionalSurface, ...]:
    """The curves with non-normal order-p subgroup, optionally filtered by p."""
    if p is None:
        return EXCEPTIONAL_SURFACES
    return tuple(s for s in EXCEPTIONAL_SURFACES if s.p == p)


def coincidence_profile(assignment) -> dict:
    """Occurrence count of every (pair, angle) value across the twelve slots.

    All counts 1 means no extra automorphism fixes the four branch points;
    for generic tilings the normalizer order is p times the count of the
    [AD] value among the four angle-1 slots.
    """
    counts: dict = {}
    for sp in assignment.slots.values():
        counts[sp] = counts.get(sp, 0) + 1
    return counts


def angle1_multiplicity(assignment) -> int:
    """How often the [AD] value recurs among the angle-1 slots."""
    target = assignment.slots["AD"]
    return sum(
        1
        for label in ("AD", "BC", "CB", "DA")
        if assignment.slots[label] == target
    )
