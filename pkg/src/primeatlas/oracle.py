"""Independent brute-force verifiers for every closed-form count.

Two census families are implemented, neither consulting the closed forms:

* orbit censuses of the gluing-pair set Sigma_p under the twelve-slot
  recentering maps (duplicated locally on purpose, so a transcription slip
  in the classification module cannot hide here), with the flavor merges
  applied as extra union rules;

* orbit censuses of branch-multiplicity tuples (a_1, ..., a_n), nonzero
  mod p with zero sum, under simultaneous unit scaling and a coordinate
  permutation group.  The correspondence between permutation groups and
  tiling flavors is checked empirically by the test suite:

      n=3, all permutations (S3)        -> three-fixed-point classes
      n=4, even permutations (A4)       -> equilateral classes
      n=4, Klein four-group             -> generic classes
      n=4, dihedral <(1234), (13)>      -> square classes
      n=4, all permutations (S4)        -> connected components

  The full symmetric group on four letters does NOT count equilateral
  classes (it conflates each class with its coordinate swap, which is a
  different surface for p >= 7); the alternating group does.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import gimel
from .fixtures import LAMBDA_TABLES, SLOT_ORDER
from .gimel import TilingFlavor, domain_assignment, kappa_case
from .modular import AtlasError, as_modulus, inverse_table


class BoundExceeded(AtlasError):
    """The requested prime is beyond the census bound."""


DEFAULT_BOUND = 101


def _check_bound(p: int, bound: int) -> None:
    if p > bound:
        raise BoundExceeded(f"p = {p} exceeds the census bound {bound}")


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.count = len(self.parent)

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx
            self.count -= 1


# --- the twelve recentering maps, written out locally -----------------------

def _local_twelve(p: int, i: int, j: int) -> tuple[tuple[int, int], ...]:
    inv = inverse_table(p)
    k = (-(i + j + 1)) % p
    ii, jj, kk = inv[i], inv[j], inv[k]
    return (
        (i, j), (j, k), (k, i),
        (ii * j % p, ii), (ii, ii * k % p), (ii * k % p, ii * j % p),
        (jj, i * jj % p), (i * jj % p, jj * k % p), (jj * k % p, jj),
        (j * kk % p, i * kk % p), (i * kk % p, kk), (kk, j * kk % p),
    )


def _local_angle1(p: int, i: int, j: int) -> tuple[tuple[int, int], ...]:
    inv = inverse_table(p)
    k = (-(i + j + 1)) % p
    ii, jj, kk = inv[i], inv[j], inv[k]
    return ((ii, ii * k % p), (jj * k % p, jj), (j * kk % p, i * kk % p))


def _sigma(p: int):
    for i in range(1, p):
        banned = (-(i + 1)) % p
        for j in range(1, p):
            if j != banned:
                yield (i, j)


def lambda_orbit_census(p, flavor: TilingFlavor, bound: int = DEFAULT_BOUND) -> int:
    """Number of orbits of Sigma_p under the recentering closure, with the
    flavor's extra merges; must equal the class-enumeration length."""
    q = as_modulus(p).p
    _check_bound(q, bound)
    uf = _UnionFind(_sigma(q))
    if flavor is TilingFlavor.EQUILATERAL:
        for ij in list(uf.parent):
            for image in _local_twelve(q, *ij):
                uf.union(ij, image)
    else:
        for ij in list(uf.parent):
            for image in _local_angle1(q, *ij):
                uf.union(ij, image)
        if flavor is TilingFlavor.SQUARE:
            for i, j in list(uf.parent):
                uf.union((i, j), (j, i))
    return uf.count


# --- branch-data tuple censuses ---------------------------------------------

class TupleSymmetry:
    ALL = "all"
    EVEN = "even"
    KLEIN_FOUR = "klein_four"
    SQUARE_DIHEDRAL = "square_dihedral"


_GENERATORS = {
    (3, TupleSymmetry.ALL): ((1, 0, 2), (1, 2, 0)),
    (4, TupleSymmetry.ALL): ((1, 0, 2, 3), (1, 2, 3, 0)),
    (4, TupleSymmetry.EVEN): ((1, 2, 0, 3), (1, 0, 3, 2)),
    (4, TupleSymmetry.KLEIN_FOUR): ((1, 0, 3, 2), (2, 3, 0, 1)),
    # the order-8 dihedral group generated by the 4-cycle (1 2 3 4) and the
    # reflection (1 3)
    (4, TupleSymmetry.SQUARE_DIHEDRAL): ((3, 0, 1, 2), (2, 1, 0, 3)),
}


def _normalized_space(p: int, n: int):
    """Tuples (1, b_2, ..., b_n) of units with zero sum: one representative
    of every scaling orbit (scaling acts freely, so this is exact)."""
    if n == 3:
        for b in range(1, p):
            c = (-1 - b) % p
            if c != 0:
                yield (1, b, c)
        return
    for b in range(1, p):
        for c in range(1, p):
            d = (-1 - b - c) % p
            if d != 0:
                yield (1, b, c, d)


def _apply(perm, tup, p, inv):
    """Permute coordinates by perm, then rescale so the first entry is 1."""
    moved = tuple(tup[s] for s in perm)
    scale = inv[moved[0]]
    return tuple(x * scale % p for x in moved)


def tuple_orbit_census(
    p, n: int, symmetry: str, bound: int = DEFAULT_BOUND
) -> int:
    """Orbits of {(a_1,...,a_n) : a_t nonzero, sum = 0 mod p} under unit
    scaling and the chosen coordinate-permutation group."""
    q = as_modulus(p).p
    _check_bound(q, bound)
    if n not in (3, 4):
        raise ValueError(f"tuple length must be 3 or 4, got {n}")
    try:
        gens = _GENERATORS[(n, symmetry)]
    except KeyError:
        raise ValueError(f"no symmetry {symmetry!r} for n = {n}") from None
    inv = inverse_table(q)
    uf = _UnionFind(_normalized_space(q, n))
    for tup in list(uf.parent):
        for perm in gens:
            uf.union(tup, _apply(perm, tup, q, inv))
    return uf.count


# --- golden-table comparison --------------------------------------------------

@dataclass(frozen=True)
class FixtureMismatch:
    p: int
    column: tuple[int, int]
    slot: str
    expected: object
    actual: object

    def __str__(self) -> str:
        i, j = self.column
        return (
            f"p={self.p} column {i}.{j} slot {self.slot}: "
            f"table says {self.expected}, computed {self.actual}"
        )


@dataclass(frozen=True)
class FixtureReport:
    p: int
    columns: int
    cells: int
    mismatches: tuple[FixtureMismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __str__(self) -> str:
        status = "pass" if self.ok else "FAIL"
        out = f"{status}: p={self.p}, {self.columns} columns, {self.cells} cells"
        if self.mismatches:
            out += "\n" + "\n".join(str(m) for m in self.mismatches)
        return out


def kappa_fixture_check(p) -> FixtureReport:
    """Compare every cell and kappa label of the golden table for p against
    the computed twelve-slot assignment and case detection."""
    q = as_modulus(p).p
    if q not in LAMBDA_TABLES:
        raise BoundExceeded(f"no golden table for p = {q}")
    mismatches: list[FixtureMismatch] = []
    cells = 0
    for column in LAMBDA_TABLES[q]:
        assignment = domain_assignment(q, (column.i, column.j))
        for slot, expected in zip(SLOT_ORDER, column.cells):
            cells += 1
            actual = assignment.slots[slot].pair()
            if actual != expected:
                mismatches.append(
                    FixtureMismatch(q, (column.i, column.j), slot, expected, actual)
                )
        label = kappa_case(q, (column.i, column.j)).value
        if label != column.kappa:
            mismatches.append(
                FixtureMismatch(q, (column.i, column.j), "kappa", column.kappa, label)
            )
    return FixtureReport(q, len(LAMBDA_TABLES[q]), cells, tuple(mismatches))


@lru_cache(maxsize=None)
def census_agreement(p: int, bound: int = DEFAULT_BOUND) -> dict[str, bool]:
    """All oracle-versus-enumeration agreements for one prime."""
    from .lefschetz import lefschetz_count, partition_omega
    from .parameter_space import component_counts

    q = as_modulus(p).p
    out: dict[str, bool] = {}
    for flavor in TilingFlavor:
        classes = len(gimel.enumerate_classes(q, flavor))
        out[f"lambda_census_{flavor.value}"] = (
            lambda_orbit_census(q, flavor, bound) == classes
        )
    out["tuple_census_lefschetz"] = (
        tuple_orbit_census(q, 3, TupleSymmetry.ALL, bound)
        == lefschetz_count(q)
        == len(partition_omega(q))
    )
    out["tuple_census_equilateral"] = tuple_orbit_census(
        q, 4, TupleSymmetry.EVEN, bound
    ) == len(gimel.enumerate_classes(q, TilingFlavor.EQUILATERAL))
    out["tuple_census_generic"] = tuple_orbit_census(
        q, 4, TupleSymmetry.KLEIN_FOUR, bound
    ) == len(gimel.enumerate_classes(q, TilingFlavor.GENERIC))
    out["tuple_census_square"] = tuple_orbit_census(
        q, 4, TupleSymmetry.SQUARE_DIHEDRAL, bound
    ) == len(gimel.enumerate_classes(q, TilingFlavor.SQUARE))
    out["tuple_census_components"] = (
        tuple_orbit_census(q, 4, TupleSymmetry.ALL, bound)
        == component_counts(q)["total"]
    )
    return out
