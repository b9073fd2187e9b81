"""Classification of the genus (p-1)/2 surfaces: an order-p automorphism
with three fixed points and quotient the projective line (p > 3).

Each such surface is pinned down by the six-value invariant set

    W(k) = {k, p-1-k, k', p-1-k', p-(k+1)', (k+1)'-1}

taken mod p inside {1, ..., p-2} (x' denotes the inverse of x).  Equal sets
mean isomorphic surfaces, and the sets partition {1, ..., p-2}, so the
classification is the list of distinct sets.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .modular import PrimeModulus, OutOfRange, UnsupportedPrime, as_modulus, inverse_table


class CardinalityCase(enum.Enum):
    TWO = 2
    THREE = 3
    SIX = 6


@dataclass(frozen=True)
class OmegaClass:
    """One isomorphism class: the invariant set plus its size case."""

    p: int
    members: frozenset[int]
    canonical_k: int
    cardinality_case: CardinalityCase

    def label(self) -> str:
        return f"Omega_{self.canonical_k}^{self.p}"


def _require_lefschetz_prime(p: int | PrimeModulus) -> int:
    q = as_modulus(p).p
    if q <= 3:
        raise UnsupportedPrime(f"three-fixed-point surfaces require p > 3, got {q}")
    return q


def _check_k(p: int, k: int) -> None:
    if not 1 <= k <= p - 2:
        raise OutOfRange(f"k = {k} outside {{1,...,{p - 2}}}")


def _omega_values(p: int, k: int) -> tuple[int, ...]:
    inv = inverse_table(p)
    ki = inv[k]
    s = inv[k + 1]
    return (
        k,
        (p - 1 - k) % p,
        ki,
        (p - 1 - ki) % p,
        (p - s) % p,
        (s - 1) % p,
    )


def omega_set(p: int | PrimeModulus, k: int) -> OmegaClass:
    """The six-formula closure of k, deduplicated into a class."""
    q = _require_lefschetz_prime(p)
    _check_k(q, k)
    members = frozenset(_omega_values(q, k))
    return OmegaClass(q, members, min(members), _cardinality(q, members))


def _cardinality(p: int, members: frozenset[int]) -> CardinalityCase:
    size = len(members)
    if size == 2:
        return CardinalityCase.TWO
    if size == 3:
        return CardinalityCase.THREE
    if size == 6:
        return CardinalityCase.SIX
    raise AssertionError(f"invariant set of impossible size {size}: {sorted(members)}")


def cardinality_case(cls: OmegaClass) -> CardinalityCase:
    """Size case of a class: 2 iff k^2+k+1 = 0 (mod p) (so p = 1 mod 3),
    3 iff the class is {1, (p-1)/2, p-2}, and 6 otherwise."""
    return cls.cardinality_case


@lru_cache(maxsize=None)
def _partition_cached(p: int) -> tuple[OmegaClass, ...]:
    classes: list[OmegaClass] = []
    seen: set[int] = set()
    for k in range(1, p - 1):
        if k in seen:
            continue
        cls = omega_set(p, k)
        seen.update(cls.members)
        classes.append(cls)
    return tuple(classes)


def partition_omega(p: int | PrimeModulus) -> tuple[OmegaClass, ...]:
    """All classes, sorted by smallest member; they partition {1,...,p-2}."""
    q = _require_lefschetz_prime(p)
    return _partition_cached(q)


def lefschetz_count(p: int | PrimeModulus) -> int:
    """Closed-form number of classes: (p+5)/6 if p = 1 (mod 3), else (p+1)/6."""
    q = _require_lefschetz_prime(p)
    return (q + 5) // 6 if q % 3 == 1 else (q + 1) // 6


# Domain labels for the six special fundamental domains, in table order.
LEFSCHETZ_DOMAINS = ("A,B", "A,C", "B,A", "B,C", "C,A", "C,B")


def lefschetz_special_domains(p: int | PrimeModulus, k: int) -> dict[str, int]:
    """Gluing values of the six special domains for a given s[A,B] = k.

    s[A,B] = k, s[A,C] = p-1-k, s[B,A] = k', s[B,C] = p-1-k',
    s[C,A] = p-(k+1)', s[C,B] = (k+1)'-1; the value multiset coincides with
    the class's invariant set counted with multiplicity.
    """
    q = _require_lefschetz_prime(p)
    _check_k(q, k)
    vals = _omega_values(q, k)
    return dict(zip(LEFSCHETZ_DOMAINS, vals))
