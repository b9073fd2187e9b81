"""Classification of the genus p-1 surfaces: an order-p automorphism with
four fixed points and quotient the projective line.

A surface in this family is determined by a gluing pair (i, j) taken from

    Sigma_p = {(i, j) : i != 0, j != 0, i + j + 1 != 0 (mod p)}

together with the shape of its canonical triangle tiling.  Writing
k = -(i + j + 1), the twelve special fundamental domains [XY] (domain
centered over branch point X with boundary vertices over Y) carry derived
gluing pairs and an angle subindex (1 <-> alpha, 2 <-> beta, 3 <-> gamma):

    [AD] = (i, j)_1          [AB] = (j, k)_3          [AC] = (k, i)_2
    [BD] = (i'j, i')_2       [BC] = (i', i'k)_1       [BA] = (i'k, i'j)_3
    [CD] = (j', ij')_3       [CA] = (ij', j'k)_2      [CB] = (j'k, j')_1
    [DA] = (jk', ik')_1      [DC] = (ik', k')_3       [DB] = (k', jk')_2

(x' denotes the inverse of x mod p).  Two surfaces with the same tiling
shape are isomorphic exactly when their twelve-slot invariants agree:
as subindexed sets for a generic tiling, with subindices stripped for the
equilateral tiling, and merged with the swapped class (i, j) <-> (j, i)
for the square tiling.  The classes fall into six case families k1..k6
that govern automorphism groups and parameter-space topology.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple

from .modular import (
    AtlasError,
    PrimeModulus,
    UnsupportedPrime,
    as_modulus,
    inverse_table,
)


class NotInSigma(AtlasError):
    """The pair (i, j) violates i != 0, j != 0 or i + j + 1 != 0 (mod p)."""


class TilingFlavor(enum.Enum):
    GENERIC = "generic"
    EQUILATERAL = "equilateral"
    SQUARE = "square"


class KappaCase(enum.Enum):
    K1 = "k1"
    K2 = "k2"
    K3 = "k3"
    K4 = "k4"
    K5 = "k5"
    K6 = "k6"


@dataclass(frozen=True)
class TilingShape:
    """The shape of a canonical tiling: a flavor plus, for generic tilings,
    the free complex coordinate on the parameter line.

    For an odd prime p the equilateral tiling is the triangle
    (2pi/3p, 2pi/3p, 2pi/3p) and the square tiling is (pi/p, pi/2p, pi/2p),
    the middle angle listed first and beta >= gamma as tie-break.
    """

    flavor: TilingFlavor
    parameter: complex | None = None

    def angles(self, p: int | PrimeModulus) -> tuple[float, float, float] | None:
        from math import pi

        q = as_modulus(p).p
        if self.flavor is TilingFlavor.EQUILATERAL:
            a = 2 * pi / (3 * q)
            return (a, a, a)
        if self.flavor is TilingFlavor.SQUARE:
            return (pi / q, pi / (2 * q), pi / (2 * q))
        return None


GENERIC_SHAPE = TilingShape(TilingFlavor.GENERIC)
EQUILATERAL_SHAPE = TilingShape(TilingFlavor.EQUILATERAL)
SQUARE_SHAPE = TilingShape(TilingFlavor.SQUARE)


def shape_for(flavor: TilingFlavor) -> TilingShape:
    return {
        TilingFlavor.GENERIC: GENERIC_SHAPE,
        TilingFlavor.EQUILATERAL: EQUILATERAL_SHAPE,
        TilingFlavor.SQUARE: SQUARE_SHAPE,
    }[flavor]


Pair = tuple[int, int]


class SubindexedPair(NamedTuple):
    i: int
    j: int
    angle: int  # 1 = alpha, 2 = beta, 3 = gamma

    def pair(self) -> Pair:
        return (self.i, self.j)

    def __str__(self) -> str:
        return f"({self.i}.{self.j})_{self.angle}"


@dataclass(frozen=True)
class GluingPair:
    """A point of Sigma_p; k = -(i + j + 1) is the derived third residue."""

    p: int
    i: int
    j: int

    def __post_init__(self) -> None:
        q = as_modulus(self.p).p
        object.__setattr__(self, "p", q)
        i, j = self.i % q, self.j % q
        if i == 0 or j == 0 or (i + j + 1) % q == 0:
            raise NotInSigma(f"({self.i}, {self.j}) is not in Sigma_{q}")
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)

    @property
    def k(self) -> int:
        return (-(self.i + self.j + 1)) % self.p

    def generator_words(self) -> tuple[str, str]:
        """The two edge-identification words of the uniformizing subgroup,
        kept as strings only."""
        return (f"x^{self.i} y^-1", f"x^{self.j} z^-1")


# Slot labels in the fixed table row order, with their angle subindices.
SLOT_ORDER: tuple[str, ...] = (
    "AD", "AB", "AC", "BD", "BC", "BA", "CD", "CA", "CB", "DA", "DC", "DB",
)
SLOT_ANGLES: dict[str, int] = {
    "AD": 1, "AB": 3, "AC": 2,
    "BD": 2, "BC": 1, "BA": 3,
    "CD": 3, "CA": 2, "CB": 1,
    "DA": 1, "DC": 3, "DB": 2,
}


@dataclass(frozen=True)
class DomainAssignment:
    """The twelve special-domain slots of one gluing pair."""

    p: int
    pair: GluingPair
    slots: dict[str, SubindexedPair] = field(compare=False)

    def cells(self) -> tuple[SubindexedPair, ...]:
        return tuple(self.slots[label] for label in SLOT_ORDER)


def sigma_contains(p: int | PrimeModulus, i: int, j: int) -> bool:
    """True when (i mod p, j mod p) lies in Sigma_p."""
    q = as_modulus(p).p
    a, b = i % q, j % q
    return a != 0 and b != 0 and (a + b + 1) % q != 0


def sigma_pairs(p: int | PrimeModulus) -> Iterator[Pair]:
    """All of Sigma_p in lexicographic order."""
    q = as_modulus(p).p
    for i in range(1, q):
        banned = (-(i + 1)) % q
        for j in range(1, q):
            if j != banned:
                yield (i, j)


def sigma_size(p: int | PrimeModulus) -> int:
    q = as_modulus(p).p
    return q * q - 3 * q + 3


def _coerce_pair(p: int | PrimeModulus, pair: "GluingPair | Pair") -> GluingPair:
    if isinstance(pair, GluingPair):
        if pair.p != as_modulus(p).p:
            raise NotInSigma(f"pair is mod {pair.p}, expected mod {p}")
        return pair
    i, j = pair
    return GluingPair(as_modulus(p).p, i, j)


def _slot_pairs(p: int, i: int, j: int) -> dict[str, Pair]:
    """Raw twelve-slot gluing pairs, all residues canonical in {1,...,p-1}."""
    inv = inverse_table(p)
    k = (-(i + j + 1)) % p
    ii, jj, kk = inv[i], inv[j], inv[k]
    return {
        "AD": (i, j),
        "AB": (j, k),
        "AC": (k, i),
        "BD": (ii * j % p, ii),
        "BC": (ii, ii * k % p),
        "BA": (ii * k % p, ii * j % p),
        "CD": (jj, i * jj % p),
        "CA": (i * jj % p, jj * k % p),
        "CB": (jj * k % p, jj),
        "DA": (j * kk % p, i * kk % p),
        "DC": (i * kk % p, kk),
        "DB": (kk, j * kk % p),
    }


def domain_assignment(p: int | PrimeModulus, pair: "GluingPair | Pair") -> DomainAssignment:
    """Populate the twelve special-domain slots for one gluing pair."""
    gp = _coerce_pair(p, pair)
    raw = _slot_pairs(gp.p, gp.i, gp.j)
    slots = {
        label: SubindexedPair(raw[label][0], raw[label][1], SLOT_ANGLES[label])
        for label in SLOT_ORDER
    }
    return DomainAssignment(gp.p, gp, slots)


# The three slot maps that preserve the angle-1 subindex ([BC], [CB], [DA]);
# together with the identity they close Sigma_p orbits for generic tilings.
def _angle1_images(p: int, i: int, j: int) -> tuple[Pair, Pair, Pair]:
    inv = inverse_table(p)
    k = (-(i + j + 1)) % p
    ii, jj, kk = inv[i], inv[j], inv[k]
    return (
        (ii, ii * k % p),
        (jj * k % p, jj),
        (j * kk % p, i * kk % p),
    )


def _orbit(p: int, seed: Pair, images) -> frozenset[Pair]:
    """Closure of seed under an image-producing map (defensive BFS)."""
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for q in frontier:
            for r in images(p, *q):
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return frozenset(seen)


def generic_key(p: int | PrimeModulus, pair: "GluingPair | Pair") -> tuple[Pair, ...]:
    """Canonical key of a generic class: its sorted set of angle-1 pairs."""
    gp = _coerce_pair(p, pair)
    return tuple(sorted(_orbit(gp.p, (gp.i, gp.j), _angle1_images)))


def equilateral_key(p: int | PrimeModulus, pair: "GluingPair | Pair") -> tuple[Pair, ...]:
    """Canonical key of an equilateral class: sorted distinct slot pairs."""
    gp = _coerce_pair(p, pair)
    return tuple(sorted(set(_slot_pairs(gp.p, gp.i, gp.j).values())))


def square_key(p: int | PrimeModulus, pair: "GluingPair | Pair") -> tuple[Pair, ...]:
    """Canonical key of a square class: angle-1 pairs of (i, j) and (j, i)."""
    gp = _coerce_pair(p, pair)
    own = _orbit(gp.p, (gp.i, gp.j), _angle1_images)
    swapped = _orbit(gp.p, (gp.j, gp.i), _angle1_images)
    return tuple(sorted(own | swapped))


def kappa_case(
    p: int | PrimeModulus,
    pair: "GluingPair | Pair",
    strict: bool = False,
) -> KappaCase:
    """Assign the case family k1..k6 of the class containing (i, j).

    The tests run on the twelve slot pairs with subindices ignored, in an
    order that resolves the overlaps between the case definitions:
    a (1,1) entry marks k1; a (-1,-1) entry marks k3; an (a,-a) entry with
    a^2 = -1 marks k5; any remaining coordinate 1 marks k2; any remaining
    coordinate -1 marks k4; everything else is k6.  The assignment is
    constant on classes and on the angle-permuted siblings sharing a
    parameter-space component.

    For p = 3 the single class is k3; strict mode rejects p = 3 instead.
    """
    gp = _coerce_pair(p, pair)
    q = gp.p
    if strict and q == 3:
        raise UnsupportedPrime("case families are defined for p > 3 (single k3 class at p = 3)")
    pairs = set(_slot_pairs(q, gp.i, gp.j).values())
    if (1, 1) in pairs:
        return KappaCase.K1
    if (q - 1, q - 1) in pairs:
        return KappaCase.K3
    if q % 4 == 1:
        for a, b in pairs:
            if (a + b) % q == 0 and (a * a + 1) % q == 0:
                return KappaCase.K5
    if any(a == 1 or b == 1 for a, b in pairs):
        return KappaCase.K2
    if any(a == q - 1 or b == q - 1 for a, b in pairs):
        return KappaCase.K4
    return KappaCase.K6


@dataclass(frozen=True)
class LambdaClass:
    """One isomorphism class of surfaces for a fixed tiling flavor.

    key is the canonical class key (sorted pair tuples; its head is the
    lexicographically smallest representative).  members holds subindexed
    pairs for the generic flavor and plain pairs otherwise.
    """

    p: int
    flavor: TilingFlavor
    key: tuple[Pair, ...]
    members: frozenset
    kappa: KappaCase

    @property
    def representative(self) -> Pair:
        return self.key[0]

    def label(self) -> str:
        i, j = self.representative
        return f"{i}.{j}"

    def contains_diagonal(self) -> bool:
        return any(a == b for a, b in self.key)

    def contains_pair(self, pair: Pair) -> bool:
        return pair in self.key

    def contains_antidiagonal_root(self) -> bool:
        """True when some key pair is (a, -a) with a^2 = -1 (mod p)."""
        return any(
            (a + b) % self.p == 0 and (a * a + 1) % self.p == 0
            for a, b in self.key
        )


def lambda_class(
    p: int | PrimeModulus,
    pair: "GluingPair | Pair",
    flavor: TilingFlavor = TilingFlavor.GENERIC,
) -> LambdaClass:
    """The isomorphism class of the surface glued by (i, j), per flavor."""
    gp = _coerce_pair(p, pair)
    q = gp.p
    if flavor is TilingFlavor.GENERIC:
        key = generic_key(q, gp)
        members = frozenset(domain_assignment(q, gp).slots.values())
    elif flavor is TilingFlavor.EQUILATERAL:
        key = equilateral_key(q, gp)
        members = frozenset(key)
    elif flavor is TilingFlavor.SQUARE:
        key = square_key(q, gp)
        members = frozenset(key)
    else:  # pragma: no cover - exhaustive enum
        raise ValueError(flavor)
    return LambdaClass(q, flavor, key, members, kappa_case(q, gp))


@lru_cache(maxsize=None)
def _enumerate_cached(p: int, flavor: TilingFlavor) -> tuple[LambdaClass, ...]:
    # Raw integer sweep; every pair named in a key lies in that class (for
    # the square flavor the key covers both merged generic classes), so one
    # pass over Sigma_p visits each class exactly once.
    inv = inverse_table(p)

    def angle1_orbit(i0: int, j0: int) -> set[Pair]:
        orbit = {(i0, j0)}
        frontier = [(i0, j0)]
        while frontier:
            nxt = []
            for i, j in frontier:
                k = (-(i + j + 1)) % p
                ii, jj, kk = inv[i], inv[j], inv[k]
                for im in (
                    (ii, ii * k % p),
                    (jj * k % p, jj),
                    (j * kk % p, i * kk % p),
                ):
                    if im not in orbit:
                        orbit.add(im)
                        nxt.append(im)
            frontier = nxt
        return orbit

    keys: list[tuple[Pair, ...]] = []
    seen: set[Pair] = set()
    for i in range(1, p):
        banned = (-(i + 1)) % p
        for j in range(1, p):
            if j == banned or (i, j) in seen:
                continue
            if flavor is TilingFlavor.GENERIC:
                key_set = angle1_orbit(i, j)
            elif flavor is TilingFlavor.SQUARE:
                key_set = angle1_orbit(i, j) | angle1_orbit(j, i)
            else:
                k = (-(i + j + 1)) % p
                ii, jj, kk = inv[i], inv[j], inv[k]
                key_set = {
                    (i, j), (j, k), (k, i),
                    (ii * j % p, ii), (ii, ii * k % p), (ii * k % p, ii * j % p),
                    (jj, i * jj % p), (i * jj % p, jj * k % p), (jj * k % p, jj),
                    (j * kk % p, i * kk % p), (i * kk % p, kk), (kk, j * kk % p),
                }
            seen |= key_set
            keys.append(tuple(sorted(key_set)))
    keys.sort()
    return tuple(lambda_class(p, key[0], flavor) for key in keys)


def enumerate_classes(
    p: int | PrimeModulus, flavor: TilingFlavor = TilingFlavor.GENERIC
) -> tuple[LambdaClass, ...]:
    """All classes for the flavor, duplicate-free, sorted by canonical key."""
    q = as_modulus(p).p
    return _enumerate_cached(q, flavor)


def class_counts_closed_form(p: int | PrimeModulus) -> dict[str, int]:
    """The closed-form class counts per flavor (p = 3 handled separately)."""
    q = as_modulus(p).p
    if q == 3:
        return {"generic": 3, "equilateral": 1, "square": 2}
    square = (q * q + 2 * q + 5) // 8 if q % 4 == 1 else (q * q + 2 * q + 1) // 8
    return {
        "generic": (q * q + 3) // 4,
        "equilateral": (q * q + 11) // 12,
        "square": square,
    }
