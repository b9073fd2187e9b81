"""Exact residue arithmetic modulo an odd prime.

Every classification formula downstream reduces to products, negations and
inverses of nonzero residues, so values are kept as canonical integers in
{1, ..., p-1} and zero is unrepresentable: an illegal gluing datum fails at
construction instead of surfacing later as a wrong table entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class AtlasError(Exception):
    """Base class for all domain errors raised by this package."""


class OutOfRange(AtlasError):
    """A residue fell outside the representable range."""


class UnsupportedPrime(AtlasError):
    """The modulus is not an odd prime in the supported range."""


_MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division up to sqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, order=True)
class PrimeModulus:
    """An odd prime modulus p >= 3 (supported range p < 2**31)."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or self.p < 3 or self.p % 2 == 0:
            raise UnsupportedPrime(f"modulus must be an odd prime >= 3, got {self.p}")
        if self.p >= _MAX_MODULUS:
            raise UnsupportedPrime(f"modulus {self.p} exceeds supported range (< 2**31)")
        if not is_prime(self.p):
            raise UnsupportedPrime(f"{self.p} is not prime")

    def unit(self, value: int) -> "ModularUnit":
        return ModularUnit(value, self)

    def inv(self, x: int) -> int:
        """Inverse of the nonzero residue x, as an integer in {1, ..., p-1}."""
        r = x % self.p
        if r == 0:
            raise OutOfRange(f"0 has no inverse mod {self.p}")
        return pow(r, -1, self.p)

    def __int__(self) -> int:
        return self.p

    def __str__(self) -> str:
        return str(self.p)


@lru_cache(maxsize=1024)
def _modulus_from_int(p: int) -> PrimeModulus:
    return PrimeModulus(p)


def as_modulus(p: "int | PrimeModulus") -> PrimeModulus:
    """Coerce an int or PrimeModulus to a validated PrimeModulus."""
    if isinstance(p, PrimeModulus):
        return p
    return _modulus_from_int(p)


@dataclass(frozen=True)
class ModularUnit:
    """A nonzero residue mod p, stored canonically in {1, ..., p-1}."""

    value: int
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        mod = as_modulus(self.modulus)
        object.__setattr__(self, "modulus", mod)
        r = self.value % mod.p
        if r == 0:
            raise OutOfRange(f"0 is not a unit mod {mod.p}")
        object.__setattr__(self, "value", r)

    @property
    def p(self) -> int:
        return self.modulus.p

    def inverse(self) -> "ModularUnit":
        return ModularUnit(pow(self.value, -1, self.p), self.modulus)

    def __mul__(self, other: "ModularUnit | int") -> "ModularUnit":
        v = other.value if isinstance(other, ModularUnit) else other
        return ModularUnit(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "ModularUnit":
        return ModularUnit(-self.value, self.modulus)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def inverse(a: ModularUnit) -> ModularUnit:
    """The unit b with a*b = 1 (mod p)."""
    return a.inverse()


UNITS = "units"
ONE_TO_P_MINUS_2 = "one_to_p_minus_2"


def canonical_in_range(x: int, p: "int | PrimeModulus", rng: str = UNITS) -> int:
    """Reduce x mod p to the unique representative in the requested range.

    rng="units" asks for {1, ..., p-1}; rng="one_to_p_minus_2" for
    {1, ..., p-2}.  Raises OutOfRange when the reduction falls outside.
    """
    mod = as_modulus(p).p
    r = x % mod
    if rng == UNITS:
        if r == 0:
            raise OutOfRange(f"{x} reduces to 0 mod {mod}, not a unit")
        return r
    if rng == ONE_TO_P_MINUS_2:
        if r == 0 or r == mod - 1:
            raise OutOfRange(f"{x} reduces to {r} mod {mod}, outside {{1,...,{mod - 2}}}")
        return r
    raise ValueError(f"unknown range {rng!r}")


@lru_cache(maxsize=64)
def inverse_table(p: int) -> tuple[int, ...]:
    """inv[x] = x^-1 mod p for x in {1, ..., p-1}; inv[0] = 0 as a filler.

    Built in O(p) with the classical recurrence; intended for the enumeration
    loops, so p is capped to keep the cache small.
    """
    if p >= 2**22:
        raise UnsupportedPrime(f"inverse table not built for p = {p} (too large)")
    as_modulus(p)
    inv = [0] * p
    inv[1] = 1
    for x in range(2, p):
        inv[x] = (p - (p // x) * inv[p % x] % p) % p
    return tuple(inv)
