"""Affine plane models y^e = f(x) for the classified surfaces.

A degree-p cyclic cover of the line branched over r points (counting a
branch point at infinity when the multiplicities do not sum to 0 mod p)
has genus (p-1)(r-2)/2.  The same formula with e = 2 covers the
hyperelliptic models.  Equations are kept symbolic: a factor is
(x^d - root)^mult with the root one of a fixed set of exact tags, and
numeric evaluation is left to the caller.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

from .modular import AtlasError, OutOfRange, as_modulus, inverse_table
from .lefschetz import _require_lefschetz_prime


class InvalidExponents(AtlasError):
    """Multiplicities violate the construction's range or sum constraints."""


class ZeroParameter(AtlasError):
    """The free parameter of the family must be nonzero."""


_W = cmath.exp(2j * cmath.pi / 3)

_TAG_VALUES = {
    "zero": 0j,
    "one": 1 + 0j,
    "minus_one": -1 + 0j,
    "i": 1j,
    "minus_i": -1j,
    "omega": _W,
    "omega_sq": _W * _W,
}

_TAG_LINEAR_TEXT = {
    "zero": "x",
    "one": "(x-1)",
    "minus_one": "(x+1)",
    "i": "(x-i)",
    "minus_i": "(x+i)",
    "omega": "(x-w)",
    "omega_sq": "(x-w^2)",
}


@dataclass(frozen=True)
class SymbolicRoot:
    """An exact root tag, optionally a named free parameter with a value."""

    tag: str
    name: str = ""
    value: complex | None = None

    def __post_init__(self) -> None:
        if self.tag not in _TAG_VALUES and self.tag != "param":
            raise ValueError(f"unknown root tag {self.tag!r}")

    def numeric(self) -> complex | None:
        if self.tag == "param":
            return self.value
        return _TAG_VALUES[self.tag]

    def to_json(self) -> dict:
        out: dict = {"tag": self.tag}
        if self.tag == "param":
            out["name"] = self.name
            if self.value is not None:
                out["value"] = [self.value.real, self.value.imag]
        return out


ZERO = SymbolicRoot("zero")
ONE = SymbolicRoot("one")
MINUS_ONE = SymbolicRoot("minus_one")
IMAG_I = SymbolicRoot("i")
MINUS_I = SymbolicRoot("minus_i")
OMEGA = SymbolicRoot("omega")
OMEGA_SQ = SymbolicRoot("omega_sq")


def parameter(name: str, value: complex | None = None) -> SymbolicRoot:
    return SymbolicRoot("param", name, value)


@dataclass(frozen=True)
class EquationFactor:
    """(x^deg - root)^mult; deg = 1 for linear factors."""

    root: SymbolicRoot
    mult: int = 1
    deg: int = 1

    def branch_count(self) -> int:
        return self.deg

    def text(self) -> str:
        if self.deg == 1 and self.root.tag in _TAG_LINEAR_TEXT:
            base = _TAG_LINEAR_TEXT[self.root.tag]
        else:
            head = "x" if self.deg == 1 else f"x^{self.deg}"
            name = self.root.name
            if name.startswith("-"):
                base = f"({head}+{name[1:]})"
            else:
                base = f"({head}-{name})"
        if self.mult == 1:
            return base
        return f"{base}^{self.mult}"

    def to_json(self) -> dict:
        out = {"root": self.root.to_json(), "mult": self.mult}
        if self.deg != 1:
            out["deg"] = self.deg
        return out


@dataclass(frozen=True)
class RotationDatum:
    """Branch point with its multiplicity m and rotation number s, s*m = 1."""

    branch: str
    multiplicity: int
    rotation: int


@dataclass(frozen=True)
class SuperellipticEquation:
    exponent: int
    factors: tuple[EquationFactor, ...]
    genus: int
    rotation_data: tuple[RotationDatum, ...] = ()
    generators: tuple[str, ...] = field(default=(), compare=False)

    def multiplicity_sum(self) -> int:
        return sum(f.mult * f.deg for f in self.factors)

    def branches_at_infinity(self) -> bool:
        return self.multiplicity_sum() % self.exponent != 0

    def text(self) -> str:
        return f"y^{self.exponent} = {_render_rhs(self.factors)}"

    __str__ = text

    def to_json(self) -> dict:
        return {
            "exponent": self.exponent,
            "factors": [f.to_json() for f in self.factors],
            "genus": self.genus,
            "text": self.text(),
            "rotation_data": [
                {"branch": r.branch, "mult": r.multiplicity, "rotation": r.rotation}
                for r in self.rotation_data
            ],
            "generators": list(self.generators),
        }


# Rendering collapses the exact conjugate groupings so that the familiar
# compact forms come out: (x-1)(x-w)(x-w^2) -> x^3-1, (x-w)(x-w^2) -> x^2+x+1,
# (x-i)(x+i) -> x^2+1, (x-1)(x+1) -> x^2-1, (x^p-1)(x^p+1) -> x^2p-1.
def _render_rhs(factors: tuple[EquationFactor, ...]) -> str:
    mults = {f.root.tag: f.mult for f in factors if f.deg == 1}
    if len(mults) == len([f for f in factors if f.deg == 1]):
        # Full cyclotomic collapse x^3 - 1.
        if set(mults) == {"one", "omega", "omega_sq"} and len(set(mults.values())) == 1:
            m = mults["one"]
            body = "x^3 - 1" if m == 1 else f"(x^3-1)^{m}"
            return body
    # Paired block collapse for the two degree-p factors at a = +-1.
    if len(factors) == 2 and all(f.deg > 1 for f in factors):
        names = sorted(f.root.name for f in factors)
        if names == ["-1", "1"] and factors[0].deg == factors[1].deg:
            return f"x^{2 * factors[0].deg} - 1"
    parts: list[str] = []
    skip: set[int] = set()
    collapse_pairs = (
        ({"omega", "omega_sq"}, "(x^2+x+1)"),
        ({"i", "minus_i"}, "(x^2+1)"),
        ({"one", "minus_one"}, "(x^2-1)"),
    )
    for idx, f in enumerate(factors):
        if idx in skip:
            continue
        if f.deg == 1:
            for tags, base in collapse_pairs:
                if f.root.tag in tags:
                    other_tag = next(iter(tags - {f.root.tag}))
                    for jdx in range(idx + 1, len(factors)):
                        g = factors[jdx]
                        if (
                            jdx not in skip
                            and g.deg == 1
                            and g.root.tag == other_tag
                            and g.mult == f.mult
                        ):
                            skip.add(jdx)
                            parts.append(base if f.mult == 1 else f"{base}^{f.mult}")
                            break
                    else:
                        continue
                    break
            else:
                parts.append(f.text())
            continue
        parts.append(f.text())
    return "".join(parts)


def genus_of(eq: SuperellipticEquation) -> int:
    """Genus from the branch count: (e-1)(r-2)/2, with r counting infinity
    when the multiplicities do not sum to 0 mod e."""
    r = sum(f.branch_count() for f in eq.factors)
    if eq.branches_at_infinity():
        r += 1
    return (eq.exponent - 1) * (r - 2) // 2


def rotation_multiplicity_check(sigma: int, m: int, p) -> bool:
    """True when sigma * m = 1 (mod p)."""
    q = as_modulus(p).p
    return (sigma * m) % q == 1


_T_GENERATOR = "(x,y) -> (x, e^(2*pi*i/{p})*y)"


def _rotations(p: int, branch_mults: list[tuple[str, int]]) -> tuple[RotationDatum, ...]:
    inv = inverse_table(p)
    return tuple(
        RotationDatum(branch, m, inv[m % p]) for branch, m in branch_mults
    )


def lefschetz_equation(p, k: int) -> SuperellipticEquation:
    """y^p = x(x-1)^k for the three-fixed-point class of k; genus (p-1)/2.

    Rotation numbers around the branch points 0, 1, infinity are
    {1, k', (p-1-k)'}.
    """
    q = _require_lefschetz_prime(p)
    if not 1 <= k <= q - 2:
        raise OutOfRange(f"k = {k} outside {{1,...,{q - 2}}}")
    factors = (EquationFactor(ZERO), EquationFactor(ONE, k))
    eq = SuperellipticEquation(
        exponent=q,
        factors=factors,
        genus=(q - 1) // 2,
        rotation_data=_rotations(q, [("0", 1), ("1", k), ("inf", (q - 1 - k) % q)]),
        generators=(_T_GENERATOR.format(p=q),),
    )
    assert genus_of(eq) == eq.genus
    return eq


def hyperelliptic_equation(p, a: complex) -> SuperellipticEquation:
    """y^2 = (x^p - a^p)(x^p + 1/a^p) with a != 0; genus p-1.

    For a = +-1 the right side is x^2p - 1 and the model gains the extra
    symmetry x -> -x.  Parameter values with a^2p = -1 make branch points
    collide and leave the family.
    """
    q = as_modulus(p).p
    a = complex(a)
    if a == 0:
        raise ZeroParameter("the family parameter a must be nonzero")
    ap = a**q
    name_pos, name_neg = _block_names(ap, q)
    factors = (
        EquationFactor(parameter(name_pos, ap), 1, q),
        EquationFactor(parameter(name_neg, -1 / ap), 1, q),
    )
    gens = [
        f"(x,y) -> (-1/x, i*y/x^{q})",
        f"(x,y) -> (e^(2*pi*i/{q})*x, -y)",
    ]
    if a in (1 + 0j, -1 + 0j):
        gens.append("(x,y) -> (-x, y)")
    eq = SuperellipticEquation(
        exponent=2,
        factors=factors,
        genus=q - 1,
        rotation_data=(),
        generators=tuple(gens),
    )
    assert genus_of(eq) == eq.genus
    return eq


def _block_names(ap: complex, q: int) -> tuple[str, str]:
    """Names for the two blocks (x^q - ap) and (x^q + 1/ap).

    Integer values of a^q render as numerals ("32", "-1/32"); anything else
    stays symbolic ("a^5", "-1/a^5") with the numeric value carried on the
    root tag.
    """
    if ap.imag == 0 and float(ap.real).is_integer() and ap.real != 0:
        n = int(ap.real)
        if n > 0:
            return str(n), ("-1" if n == 1 else f"-1/{n}")
        return str(n), ("1" if n == -1 else f"1/{-n}")
    return f"a^{q}", f"-1/a^{q}"


def equilateral_equation(p, n: int, m: int) -> SuperellipticEquation:
    """y^p = (x-1)(x-w)^n(x-w^2)^m with w a primitive cube root of unity.

    Requires 1 <= n, m <= p-1 and n+m+1 not divisible by p; infinity is
    the fourth branch point and the genus is p-1.
    """
    q = as_modulus(p).p
    if not (1 <= n <= q - 1 and 1 <= m <= q - 1):
        raise InvalidExponents(f"exponents must lie in {{1,...,{q - 1}}}")
    if (n + m + 1) % q == 0:
        raise InvalidExponents(f"n + m + 1 = {n + m + 1} is divisible by {q}")
    factors = (
        EquationFactor(ONE),
        EquationFactor(OMEGA, n),
        EquationFactor(OMEGA_SQ, m),
    )
    minf = (-(1 + n + m)) % q
    gens = [_T_GENERATOR.format(p=q)]
    if n == 1 and m == 1:
        gens.append(f"(x,y) -> (e^(2*pi*i/3)*x, e^(2*pi*i/{q})*y)")
    eq = SuperellipticEquation(
        exponent=q,
        factors=factors,
        genus=q - 1,
        rotation_data=_rotations(q, [("1", 1), ("w", n), ("w^2", m), ("inf", minf)]),
        generators=tuple(gens),
    )
    assert genus_of(eq) == eq.genus
    return eq


def square_equation(p, a: int, b: int) -> SuperellipticEquation:
    """y^p = (x-1)(x-i)^a(x+1)^c(x+i)^b with c = 2p-1-a-b reduced mod p.

    Requires 1 <= a, b <= p-1 and a nonzero reduced c, which makes the
    multiplicities sum to 0 mod p; the four branch points are the fourth
    roots of unity and the genus is p-1.
    """
    q = as_modulus(p).p
    if not (1 <= a <= q - 1 and 1 <= b <= q - 1):
        raise InvalidExponents(f"exponents must lie in {{1,...,{q - 1}}}")
    c = (2 * q - 1 - a - b) % q
    if c == 0:
        raise InvalidExponents(f"a + b = {a + b} forces the exponent at -1 to vanish mod {q}")
    factors = (
        EquationFactor(ONE),
        EquationFactor(IMAG_I, a),
        EquationFactor(MINUS_ONE, c),
        EquationFactor(MINUS_I, b),
    )
    eq = SuperellipticEquation(
        exponent=q,
        factors=factors,
        genus=q - 1,
        rotation_data=_rotations(q, [("1", 1), ("i", a), ("-1", c), ("-i", b)]),
        generators=(_T_GENERATOR.format(p=q),),
    )
    assert genus_of(eq) == eq.genus
    return eq
