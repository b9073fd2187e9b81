"""Aggregated verification suite behind the `verify` CLI command.

Each check re-derives a family of closed-form claims from scratch and
reports one pass/fail line; the suite exits nonzero when anything fails.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator

from . import oracle
from .automorphisms import gimel_full_aut, is_hyperelliptic
from .equations import equilateral_equation, genus_of, lefschetz_equation, square_equation
from .fixtures import FIXTURE_LAMBDA_PRIMES, FIXTURE_OMEGA_PRIMES, OMEGA_TABLES
from .gimel import KappaCase, TilingFlavor, class_counts_closed_form, enumerate_classes
from .lefschetz import lefschetz_count, partition_omega
from .moduli import VerificationFailure, cross_check, dim_one_components
from .modular import is_prime
from .parameter_space import (
    component_counts,
    component_counts_closed_form,
    four_point_parameter,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"{'ok  ' if self.ok else 'FAIL'} {self.name}: {self.detail}"


def primes_in(lo: int, hi: int) -> Iterator[int]:
    for n in range(lo, hi + 1):
        if is_prime(n):
            yield n


def check_omega_fixtures() -> CheckResult:
    bad = []
    for p in FIXTURE_OMEGA_PRIMES:
        got = {cls.canonical_k: cls.members for cls in partition_omega(p)}
        if got != dict(OMEGA_TABLES[p]):
            bad.append(p)
    return CheckResult(
        "omega-fixtures",
        not bad,
        f"p in {list(FIXTURE_OMEGA_PRIMES)}" + (f"; mismatches at {bad}" if bad else ""),
    )


def check_lambda_fixtures() -> CheckResult:
    reports = [oracle.kappa_fixture_check(p) for p in FIXTURE_LAMBDA_PRIMES]
    bad = [r for r in reports if not r.ok]
    cells = sum(r.cells for r in reports)
    detail = f"{cells} cells + {sum(r.columns for r in reports)} labels"
    if bad:
        detail += "; " + "; ".join(str(m) for r in bad for m in r.mismatches)
    return CheckResult("lambda-fixtures", not bad, detail)


def check_counts(max_p: int) -> CheckResult:
    bad: list[str] = []
    checked = 0
    for p in primes_in(5, max_p):
        checked += 1
        if len(partition_omega(p)) != lefschetz_count(p):
            bad.append(f"three-point count at {p}")
        forms = class_counts_closed_form(p)
        lengths = {
            flavor.value: len(enumerate_classes(p, flavor)) for flavor in TilingFlavor
        }
        for name in ("generic", "equilateral", "square"):
            if lengths[name] != forms[name]:
                bad.append(f"{name} count at {p}")
        if 3 * (lengths["equilateral"] - 1) + 1 != lengths["generic"]:
            bad.append(f"3(E-1)+1 identity at {p}")
        if component_counts(p) != component_counts_closed_form(p):
            bad.append(f"component census at {p}")
    return CheckResult(
        "count-identities",
        not bad,
        f"{checked} primes in [5, {max_p}]" + (f"; {bad}" if bad else ""),
    )


def check_oracle(max_p: int) -> CheckResult:
    bad: list[str] = []
    top = min(max_p, oracle.DEFAULT_BOUND)
    checked = 0
    for p in primes_in(5, top):
        checked += 1
        agreements = oracle.census_agreement(p)
        for name, ok in agreements.items():
            if not ok:
                bad.append(f"{name} at {p}")
    return CheckResult(
        "oracle-censuses",
        not bad,
        f"{checked} primes in [5, {top}], {7 * checked} censuses"
        + (f"; {bad}" if bad else ""),
    )


def check_moduli(max_p: int) -> CheckResult:
    bad: list[str] = []
    checked = 0
    for p in primes_in(5, max_p):
        checked += 1
        try:
            cross_check(p)
        except VerificationFailure as exc:
            bad.append(f"p={p}: {exc}")
    spots = {4: 1, 6: 2, 12: 7, 7: 0}
    for g, want in spots.items():
        if dim_one_components(g) != want:
            bad.append(f"dim_one({g}) != {want}")
    return CheckResult(
        "moduli-cross-check",
        not bad,
        f"{checked} primes in [5, {max_p}] + 4 spot values" + (f"; {bad}" if bad else ""),
    )


def check_structure(max_p: int) -> CheckResult:
    bad: list[str] = []
    checked = 0
    for p in primes_in(5, max_p):
        checked += 1
        orders: dict[int, int] = {}
        kappa_eq: dict[KappaCase, int] = {}
        for flavor in TilingFlavor:
            for cls in enumerate_classes(p, flavor):
                order = gimel_full_aut(cls).order
                orders[order] = orders.get(order, 0) + 1
                if is_hyperelliptic(cls) != (cls.kappa is KappaCase.K3):
                    bad.append(f"hyperelliptic flag at {p}")
                if flavor is TilingFlavor.EQUILATERAL:
                    kappa_eq[cls.kappa] = kappa_eq.get(cls.kappa, 0) + 1
        if orders.get(8 * p, 0) != 1:
            bad.append(f"order-8p census at {p}: {orders.get(8 * p, 0)}")
        if orders.get(3 * p, 0) != 1:
            bad.append(f"order-3p census at {p}: {orders.get(3 * p, 0)}")
        if kappa_eq.get(KappaCase.K1, 0) != 1 or kappa_eq.get(KappaCase.K3, 0) != 1:
            bad.append(f"k1/k3 family census at {p}")
        if (kappa_eq.get(KappaCase.K5, 0) != 0) != (p % 4 == 1):
            bad.append(f"k5 presence at {p}")
    return CheckResult(
        "structural-censuses",
        not bad,
        f"{checked} primes in [5, {max_p}]" + (f"; {bad}" if bad else ""),
    )


def check_equations(max_p: int) -> CheckResult:
    bad: list[str] = []
    checked = 0
    for p in primes_in(5, max_p):
        checked += 1
        for k in range(1, p - 1):
            eq = lefschetz_equation(p, k)
            if genus_of(eq) != (p - 1) // 2:
                bad.append(f"three-point genus at p={p}, k={k}")
        for cls in enumerate_classes(p, TilingFlavor.EQUILATERAL):
            n, m = cls.representative
            if genus_of(equilateral_equation(p, n, m)) != p - 1:
                bad.append(f"equilateral genus at p={p}, {cls.label()}")
        for cls in enumerate_classes(p, TilingFlavor.SQUARE):
            a, b = cls.representative
            if genus_of(square_equation(p, a, b)) != p - 1:
                bad.append(f"square genus at p={p}, {cls.label()}")
    named = [
        (lefschetz_equation(7, 2).text(), "y^7 = x(x-1)^2"),
        (equilateral_equation(7, 1, 1).text(), "y^7 = x^3 - 1"),
        (square_equation(5, 2, 4).text(), "y^5 = (x-1)(x-i)^2(x+1)^3(x+i)^4"),
    ]
    from .equations import hyperelliptic_equation

    named.append((hyperelliptic_equation(5, 1).text(), "y^2 = x^10 - 1"))
    for got, want in named:
        if got != want:
            bad.append(f"named model {want!r} rendered {got!r}")
    return CheckResult(
        "equation-suite",
        not bad,
        f"{checked} primes in [5, {max_p}], 4 named models" + (f"; {bad}" if bad else ""),
    )


def check_four_points() -> CheckResult:
    import cmath
    import random

    bad: list[str] = []
    w = cmath.exp(2j * cmath.pi / 3)
    sq = four_point_parameter([1, 1j, -1, -1j])
    eqp = four_point_parameter([1, w, w * w, float("inf")])
    if sq.special != "square" or abs(sq.value - 1728) > 1e-9 * 1728:
        bad.append(f"square anchor gave {sq}")
    if eqp.special != "equilateral" or abs(eqp.value) > 1e-9:
        bad.append(f"equilateral anchor gave {eqp}")
    rng = random.Random(20240817)
    for trial in range(20):
        pts = []
        while len(pts) < 4:
            z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            if all(abs(z - u) > 1e-3 for u in pts):
                pts.append(z)
        base = four_point_parameter(pts).value
        perm = rng.sample(pts, 4)
        j2 = four_point_parameter(perm).value
        a, b, c, d = (complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(4))
        if abs(a * d - b * c) < 1e-3:
            a += 1
        moved = [(a * z + b) / (c * z + d) for z in pts]
        j3 = four_point_parameter(moved).value
        scale = max(1.0, abs(base))
        if abs(j2 - base) > 1e-9 * scale or abs(j3 - base) > 1e-6 * scale:
            bad.append(f"invariance trial {trial}")
    return CheckResult(
        "four-point-parameter",
        not bad,
        "anchors 1728/0 + 20 random invariance trials" + (f"; {bad}" if bad else ""),
    )


def check_atlas_regression(atlas_dir: str | Path, max_p: int) -> CheckResult:
    """Compare persisted per-prime atlas files against fresh computation."""
    from .atlas import atlas_payload

    directory = Path(atlas_dir)
    files = sorted(directory.glob("atlas_p*.json"))
    if not files:
        return CheckResult("atlas-regression", False, f"no atlas files under {directory}")
    bad: list[str] = []
    seen = 0
    for path in files:
        stored = json.loads(path.read_text())
        p = stored.get("p")
        if not isinstance(p, int) or p > max_p:
            continue
        seen += 1
        if atlas_payload(p) != stored:
            bad.append(path.name)
    return CheckResult(
        "atlas-regression",
        not bad,
        f"{seen} files under {directory}" + (f"; stale: {bad}" if bad else ""),
    )


def run_suite(max_p: int = 101, atlas_dir: str | Path | None = None) -> list[CheckResult]:
    checks: list[Callable[[], CheckResult]] = [
        check_omega_fixtures,
        check_lambda_fixtures,
        lambda: check_counts(max_p),
        lambda: check_oracle(max_p),
        lambda: check_moduli(max_p),
        lambda: check_structure(min(max_p, 49)),
        lambda: check_equations(min(max_p, 49)),
        check_four_points,
    ]
    results = [fn() for fn in checks]
    if atlas_dir is not None:
        results.append(check_atlas_regression(atlas_dir, max_p))
    return results
