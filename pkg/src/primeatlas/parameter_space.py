"""The parameterization space of the four-fixed-point family.

Each generic class carries one copy of the complex line (its tiling
parameter, a coordinate on the moduli of four unordered points of the
projective line).  Sheets glue at the two distinguished parameter values:
the three generic classes sharing an equilateral class meet at the
equilateral point, and swap-partner classes ((i, j) <-> (j, i)) meet at
the square point.  The connected components come in three shapes:

* type 1 (one sheet): the k1 family;
* type 2 (three sheets): the k2, k3 and k5 families;
* type 3 (six sheets): the k4 and k6 families, three square pairs whose
  halves join three-at-a-time at two equilateral points.

The coordinate itself is normalized so that the square configuration
{1, i, -1, -i} maps to 1728 and the equilateral configuration
{1, w, w^2, inf} to 0, i.e. the classical j-line of four-point sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .gimel import (
    KappaCase,
    NotInSigma,
    Pair,
    TilingFlavor,
    enumerate_classes,
    generic_key,
)
from .modular import AtlasError, as_modulus


class DegeneratePoints(AtlasError):
    """Two of the four points coincide."""


Key = tuple[Pair, ...]


@dataclass(frozen=True)
class Component:
    index: int
    ctype: int  # 1, 2 or 3
    kappa: KappaCase
    sheets: tuple[Key, ...]
    equilateral_points: tuple[tuple[Key, tuple[Key, ...]], ...]
    square_points: tuple[tuple[Key, tuple[Key, ...]], ...]

    def label(self) -> str:
        i, j = self.sheets[0][0]
        return f"{i}.{j}"


@dataclass(frozen=True)
class ComponentGraph:
    p: int
    components: tuple[Component, ...]

    def census(self) -> dict[str, int]:
        counts = {"type1": 0, "type2": 0, "type3": 0}
        for comp in self.components:
            counts[f"type{comp.ctype}"] += 1
        counts["total"] = len(self.components)
        return counts

    def component_of(self, key: Key) -> Component:
        for comp in self.components:
            if key in comp.sheets:
                return comp
        raise KeyError(key)

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "p": self.p,
            "components": [
                {
                    "index": comp.index,
                    "type": comp.ctype,
                    "kappa": comp.kappa.value,
                    "sheets": [list(map(list, key)) for key in comp.sheets],
                    "equilateral_points": [
                        {
                            "class": list(map(list, eq)),
                            "sheets": [list(map(list, s)) for s in sheets],
                        }
                        for eq, sheets in comp.equilateral_points
                    ],
                    "square_points": [
                        {
                            "class": list(map(list, sq)),
                            "sheets": [list(map(list, s)) for s in sheets],
                        }
                        for sq, sheets in comp.square_points
                    ],
                }
                for comp in self.components
            ],
        }

    def to_dot(self) -> str:
        """Graphviz rendering: sheets as nodes, gluing points as edges."""
        lines = [f'graph components_p{self.p} {{']
        for comp in self.components:
            name = {}
            for key in comp.sheets:
                i, j = key[0]
                name[key] = f'"{self.p}:{i}.{j}"'
            for eq, sheets in comp.equilateral_points:
                for a in range(len(sheets)):
                    for b in range(a + 1, len(sheets)):
                        lines.append(
                            f"  {name[sheets[a]]} -- {name[sheets[b]]}"
                            ' [label="e", style=dashed];'
                        )
            for sq, sheets in comp.square_points:
                if len(sheets) == 2:
                    lines.append(f'  {name[sheets[0]]} -- {name[sheets[1]]} [label="c"];')
                else:
                    lines.append(f'  {name[sheets[0]]} -- {name[sheets[0]]} [label="c"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


_KAPPA_TYPE = {
    KappaCase.K1: 1,
    KappaCase.K2: 2,
    KappaCase.K3: 2,
    KappaCase.K5: 2,
    KappaCase.K4: 3,
    KappaCase.K6: 3,
}
_TYPE_SHEETS = {1: 1, 2: 3, 3: 6}


@lru_cache(maxsize=None)
def component_graph(p: int) -> ComponentGraph:
    """Assemble the sheets-and-gluings graph for the prime p.

    All keys are taken from the class enumerations (which cover Sigma_p),
    so the graph is pure index building."""
    q = as_modulus(p).p
    generics = enumerate_classes(q, TilingFlavor.GENERIC)
    keys = [cls.key for cls in generics]
    kappa_of = {cls.key: cls.kappa for cls in generics}
    generic_index: dict[Pair, Key] = {}
    for cls in generics:
        for pair in cls.key:
            generic_index[pair] = cls.key
    eq_index: dict[Pair, Key] = {}
    for cls in enumerate_classes(q, TilingFlavor.EQUILATERAL):
        for pair in cls.key:
            eq_index[pair] = cls.key
    square_index: dict[Pair, Key] = {}
    for cls in enumerate_classes(q, TilingFlavor.SQUARE):
        for pair in cls.key:
            square_index[pair] = cls.key
    eq_of = {key: eq_index[key[0]] for key in keys}
    swap_of = {}
    for key in keys:
        i, j = key[0]
        swap_of[key] = generic_index[(j, i)]

    parent: dict[Key, Key] = {key: key for key in keys}

    def find(x: Key) -> Key:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: Key, y: Key) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    by_eq: dict[Key, list[Key]] = {}
    for key in keys:
        by_eq.setdefault(eq_of[key], []).append(key)
    for group in by_eq.values():
        for other in group[1:]:
            union(group[0], other)
    for key in keys:
        union(key, swap_of[key])

    groups: dict[Key, list[Key]] = {}
    for key in keys:
        groups.setdefault(find(key), []).append(key)

    components = []
    for sheets in sorted(groups.values(), key=lambda g: min(g)):
        sheets = tuple(sorted(sheets))
        kappa = kappa_of[sheets[0]]
        ctype = _KAPPA_TYPE[kappa] if q > 3 else 2
        if len(sheets) != _TYPE_SHEETS[ctype]:
            raise AssertionError(
                f"component {sheets[0]} at p={q} has {len(sheets)} sheets, "
                f"expected {_TYPE_SHEETS[ctype]} for {kappa.value}"
            )
        if any(kappa_of[s] is not kappa for s in sheets):
            raise AssertionError(f"mixed case families in one component at p={q}")
        eq_points: dict[Key, list[Key]] = {}
        for s in sheets:
            eq_points.setdefault(eq_of[s], []).append(s)
        sq_points: dict[Key, list[Key]] = {}
        for s in sheets:
            sq_points.setdefault(square_index[s[0]], []).append(s)
        components.append(
            (
                sheets,
                kappa,
                ctype,
                tuple(sorted((eq, tuple(sorted(group))) for eq, group in eq_points.items())),
                tuple(sorted((sq, tuple(sorted(group))) for sq, group in sq_points.items())),
            )
        )

    return ComponentGraph(
        q,
        tuple(
            Component(idx, ctype, kappa, sheets, eqs, sqs)
            for idx, (sheets, kappa, ctype, eqs, sqs) in enumerate(components, start=1)
        ),
    )


def component_of(p: int | object, class_key_or_pair) -> tuple[int, int]:
    """(component id, type) of the generic class named by a key or a pair."""
    q = as_modulus(p).p
    if isinstance(class_key_or_pair, tuple) and class_key_or_pair and isinstance(
        class_key_or_pair[0], int
    ):
        key = generic_key(q, class_key_or_pair)
    else:
        key = tuple(class_key_or_pair)
    graph = component_graph(q)
    try:
        comp = graph.component_of(key)
    except KeyError:
        raise NotInSigma(f"{class_key_or_pair} does not name a generic class mod {q}")
    return comp.index, comp.ctype


def component_counts(p: int | object) -> dict[str, int]:
    """Component census {type1, type2, type3, total}, from the built graph."""
    q = as_modulus(p).p
    return component_graph(q).census()


def component_counts_closed_form(p: int | object) -> dict[str, int]:
    """The closed-form census the graph is checked against."""
    q = as_modulus(p).p
    if q == 3:
        return {"type1": 0, "type2": 1, "type3": 0, "total": 1}
    type1 = 1
    type2 = (q - 1) // 2 if q % 4 == 1 else (q - 3) // 2
    type3 = (q * q - 6 * q + 5) // 24 if q % 4 == 1 else (q * q - 6 * q + 17) // 24
    return {"type1": type1, "type2": type2, "type3": type3, "total": type1 + type2 + type3}


# ---------------------------------------------------------------------------
# The coordinate on one sheet: four points on the line up to projective
# equivalence and reordering, encoded by the symmetrized cross-ratio
# j = 256 (L^2 - L + 1)^3 / (L^2 (L - 1)^2).

INFINITY = float("inf")

_REL_TOL = 1e-9
_SQUARE_J = 1728.0


@dataclass(frozen=True)
class TilingParameter:
    value: complex
    special: str  # "equilateral" | "square" | "generic"


def _to_projective(z) -> tuple[complex, complex]:
    if isinstance(z, str):
        if z.strip().lower() in ("inf", "infinity", "oo"):
            return (1 + 0j, 0j)
        raise ValueError(f"cannot parse point {z!r}")
    if isinstance(z, (int, float)) and z == INFINITY:
        return (1 + 0j, 0j)
    z = complex(z)
    if z.real == INFINITY or z.imag == INFINITY:
        return (1 + 0j, 0j)
    return (z, 1 + 0j)


def four_point_parameter(points: Sequence) -> TilingParameter:
    """The reordering-invariant coordinate of four distinct extended-complex
    points, with square configurations at 1728 and equilateral ones at 0
    (relative tolerance 1e-9 against max(1, |j|))."""
    if len(points) != 4:
        raise DegeneratePoints(f"need exactly four points, got {len(points)}")
    proj = [_to_projective(z) for z in points]

    def d(a, b):
        return a[0] * b[1] - b[0] * a[1]

    for s in range(4):
        for t in range(s + 1, 4):
            if d(proj[s], proj[t]) == 0:
                raise DegeneratePoints(f"points {s} and {t} coincide")
    p1, p2, p3, p4 = proj
    lam = (d(p1, p3) * d(p2, p4)) / (d(p1, p4) * d(p2, p3))
    j = 256 * (lam * lam - lam + 1) ** 3 / (lam * lam * (lam - 1) ** 2)
    scale = max(1.0, abs(j))
    if abs(j) <= _REL_TOL * scale:
        special = "equilateral"
    elif abs(j - _SQUARE_J) <= _REL_TOL * scale:
        special = "square"
    else:
        special = "generic"
    return TilingParameter(j, special)
