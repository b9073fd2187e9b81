"""Counts of zero- and one-dimensional components of the singular locus of
the moduli space of genus-g curves.

The isolated singular points come from the three-fixed-point families whose
full automorphism group is exactly Z/pZ with p = 2g + 1, and the
one-dimensional components from the four-fixed-point families whose generic
member has exactly Z/pZ with p = g + 1.  Both censuses have closed forms,
and cross_check re-derives them from the classification modules.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .automorphisms import gimel_aut_prime, lefschetz_aut
from .gimel import TilingFlavor, lambda_class
from .lefschetz import partition_omega
from .modular import AtlasError, OutOfRange, as_modulus, is_prime
from .parameter_space import component_graph


class NegativeDimension(AtlasError):
    """The requested subscheme dimension 3g'-3+n is negative."""


class VerificationFailure(AtlasError):
    """A closed-form count disagrees with the classification census."""

    def __init__(self, message: str, report: "CrossCheckReport | None" = None):
        super().__init__(message)
        self.report = report


def subscheme_dimension(g_prime: int, n: int) -> int:
    """Dimension 3g'-3+n of the locus of degree-p covers of a genus-g' base
    branched over n points."""
    if g_prime < 0 or n < 0:
        raise NegativeDimension(f"g'={g_prime}, n={n} must be nonnegative")
    dim = 3 * g_prime - 3 + n
    if dim < 0:
        raise NegativeDimension(f"3*{g_prime}-3+{n} = {dim} < 0")
    return dim


def genus_from_branch_data(p: int, g_prime: int, n: int) -> int:
    """Solve 2g - 2 = p(2g' - 2) + n(p - 1) for g.  Any prime p qualifies
    here (p = 2 covers the ambient hyperelliptic loci)."""
    if not is_prime(p):
        raise OutOfRange(f"p = {p} is not prime")
    rhs = p * (2 * g_prime - 2) + n * (p - 1)
    if rhs % 2 != 0 or rhs < -2:
        raise OutOfRange(f"no genus solves 2g-2 = {rhs}")
    return (rhs + 2) // 2


@dataclass(frozen=True)
class ModuliSubscheme:
    """The locus of degree-p cyclic covers of a genus-g' base with branch
    multiplicities (a_1, ..., a_n): an irreducible subscheme of the singular
    locus, of dimension 3g'-3+n, inside the moduli space of the genus fixed
    by 2g-2 = p(2g'-2) + n(p-1)."""

    p: int
    g_prime: int
    branch_data: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise OutOfRange(f"p = {self.p} is not prime")
        if self.g_prime < 0:
            raise NegativeDimension(f"g' = {self.g_prime} must be nonnegative")
        data = tuple(self.branch_data)
        object.__setattr__(self, "branch_data", data)
        if any(not 1 <= a <= self.p - 1 for a in data):
            raise OutOfRange(f"branch data {data} outside {{1,...,{self.p - 1}}}")
        if sum(data) % self.p != 0:
            raise OutOfRange(f"branch data {data} does not sum to 0 mod {self.p}")
        self.dimension  # validates nonnegativity

    @property
    def n(self) -> int:
        return len(self.branch_data)

    @property
    def dimension(self) -> int:
        return subscheme_dimension(self.g_prime, self.n)

    @property
    def genus(self) -> int:
        return genus_from_branch_data(self.p, self.g_prime, self.n)


def _isolated_formula(g: int) -> int:
    """The g >= 4 branch: (g-2)/3 or (g-3)/3 when 2g+1 is prime, else 0."""
    q = 2 * g + 1
    if not is_prime(q):
        return 0
    if q % 3 == 2:
        return (g - 2) // 3
    return (g - 3) // 3


def isolated_singularities(g: int) -> int:
    """Number of isolated singular points of the genus-g moduli space.

    Genus 2 and 3 have exactly one; for g >= 4 the count is (g-2)/3 when
    2g+1 is prime and 2g+1 = 2 (mod 3), (g-3)/3 when 2g+1 is prime and
    2g+1 = 1 (mod 3), and zero when 2g+1 is composite (isolated points
    only arise from the three-fixed-point families).
    """
    if g < 2:
        raise OutOfRange(f"genus must be >= 2, got {g}")
    if g in (2, 3):
        return 1
    return _isolated_formula(g)


def dim_one_components(g: int) -> int:
    """Number of one-dimensional components: g(g+2)/24 when g+1 > 3 is
    prime, zero otherwise."""
    if g < 2:
        raise OutOfRange(f"genus must be >= 2, got {g}")
    q = g + 1
    if q > 3 and is_prime(q):
        return g * (g + 2) // 24
    return 0


@dataclass(frozen=True)
class CrossCheck:
    name: str
    formula: int
    census: int
    witnesses: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.formula == self.census


@dataclass(frozen=True)
class CrossCheckReport:
    p: int
    genus_lefschetz: int
    genus_gimel: int
    checks: tuple[CrossCheck, ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "p": self.p,
            "checks": [
                {
                    "name": c.name,
                    "formula": c.formula,
                    "census": c.census,
                    "pass": c.ok,
                    "witnesses": list(c.witnesses),
                }
                for c in self.checks
            ],
            "notes": list(self.notes),
            "pass": self.ok,
        }


def cross_check(p) -> CrossCheckReport:
    """Re-derive both singular-locus counts from the classifications at p.

    (a) the isolated-point formula at genus (p-1)/2 must equal the census of
    three-fixed-point classes with full group Z/pZ; (b) g(g+2)/24 at genus
    p-1 must equal the census of components whose generic member has
    normalizer Z/pZ (the k1, k2 and k6 components).  Raises
    VerificationFailure on any mismatch.
    """
    q = as_modulus(p).p
    if q <= 3:
        raise OutOfRange(f"cross-check requires p > 3, got {q}")
    notes: list[str] = []

    g_lef = (q - 1) // 2
    plain = [
        cls for cls in partition_omega(q) if lefschetz_aut(cls).is_cyclic_of(q)
    ]
    iso_formula = _isolated_formula(g_lef)
    if g_lef < 4:
        notes.append(
            f"genus {g_lef} < 4: the official isolated count is 1 by the "
            "small-genus clause; the census compares against the g >= 4 branch"
        )
    check_a = CrossCheck(
        "isolated_singularities",
        iso_formula,
        len(plain),
        tuple(cls.label() for cls in plain),
    )

    g_gim = q - 1
    graph = component_graph(q)
    cyclic_components = []
    for comp in graph.components:
        rep = lambda_class(q, comp.sheets[0][0], TilingFlavor.GENERIC)
        if gimel_aut_prime(rep).is_cyclic_of(q):
            cyclic_components.append(comp)
    check_b = CrossCheck(
        "dim_one_components",
        dim_one_components(g_gim),
        len(cyclic_components),
        tuple(
            f"component {comp.index} ({comp.kappa.value}, rep {comp.label()})"
            for comp in cyclic_components
        ),
    )

    report = CrossCheckReport(q, g_lef, g_gim, (check_a, check_b), tuple(notes))
    if not report.ok:
        bad = [c.name for c in report.checks if not c.ok]
        raise VerificationFailure(
            f"cross-check failed at p={q} for {', '.join(bad)}", report
        )
    return report


@dataclass(frozen=True)
class SingularLocusReport:
    g: int
    isolated_count: int
    dim_one_count: int
    witness_families: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "g": self.g,
            "isolated": self.isolated_count,
            "dim_one": self.dim_one_count,
            "witnesses": list(self.witness_families),
        }


def singular_locus_report(g: int) -> SingularLocusReport:
    """Counts for genus g with witnesses pulled from the classifications
    whenever the relevant primes exist."""
    iso = isolated_singularities(g)
    dim1 = dim_one_components(g)
    witnesses: list[str] = []
    if g >= 4 and is_prime(2 * g + 1):
        q = 2 * g + 1
        for cls in partition_omega(q):
            if lefschetz_aut(cls).is_cyclic_of(q):
                witnesses.append(f"p={q} {cls.label()} (isolated)")
    if is_prime(g + 1) and g + 1 > 3:
        q = g + 1
        for comp in component_graph(q).components:
            rep = lambda_class(q, comp.sheets[0][0], TilingFlavor.GENERIC)
            if gimel_aut_prime(rep).is_cyclic_of(q):
                witnesses.append(
                    f"p={q} component {comp.index} "
                    f"({comp.kappa.value}, rep {comp.label()}) (dimension one)"
                )
    return SingularLocusReport(g, iso, dim1, tuple(witnesses))
