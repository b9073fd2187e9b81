"""Command-line surface.

Data goes to stdout, errors to stderr; exit code 0 on success, 1 on invalid
input, 2 on verification failure.  Output formats: text (default), json,
csv; `components` additionally understands dot.  Complex parameters are
written as "re,im" pairs or "inf".
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import verify as verify_mod
from .atlas import atlas_payload, write_atlas
from .automorphisms import (
    exceptional_surfaces,
    gimel_aut_prime,
    gimel_full_aut,
    is_hyperelliptic,
    lefschetz_aut,
)
from .equations import (
    equilateral_equation,
    hyperelliptic_equation,
    lefschetz_equation,
    square_equation,
)
from .gimel import (
    SLOT_ORDER,
    TilingFlavor,
    domain_assignment,
    enumerate_classes,
    kappa_case,
)
from .lefschetz import partition_omega
from .moduli import VerificationFailure, cross_check, singular_locus_report
from .modular import AtlasError
from .parameter_space import component_graph, four_point_parameter


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _print_csv(header: list[str], rows: list[list]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def parse_complex(text: str) -> complex:
    """Parse "re,im" or "inf" (also plain "re")."""
    s = text.strip().lower()
    if s in ("inf", "infinity", "oo"):
        return complex(float("inf"), 0.0)
    if "," in s:
        re_part, im_part = s.split(",", 1)
        return complex(float(re_part), float(im_part))
    return complex(float(s), 0.0)


# --- lefschetz ---------------------------------------------------------------

def cmd_lefschetz(args) -> int:
    classes = partition_omega(args.p)
    if args.format == "json":
        _print_json(
            {
                "schema_version": 1,
                "p": args.p,
                "classes": [
                    {
                        "k": cls.canonical_k,
                        "members": sorted(cls.members),
                        "cardinality": cls.cardinality_case.value,
                        "aut": lefschetz_aut(cls).to_json(),
                        "equation": lefschetz_equation(args.p, cls.canonical_k).to_json(),
                    }
                    for cls in classes
                ],
            }
        )
        return 0
    if args.format == "csv":
        _print_csv(
            ["k", "members", "cardinality", "aut_structure", "aut_order", "equation"],
            [
                [
                    cls.canonical_k,
                    " ".join(str(m) for m in sorted(cls.members)),
                    cls.cardinality_case.value,
                    lefschetz_aut(cls).structure,
                    lefschetz_aut(cls).order,
                    lefschetz_equation(args.p, cls.canonical_k).text(),
                ]
                for cls in classes
            ],
        )
        return 0
    for cls in classes:
        members = "{" + ",".join(str(m) for m in sorted(cls.members)) + "}"
        aut = lefschetz_aut(cls)
        eq = lefschetz_equation(args.p, cls.canonical_k)
        print(
            f"Omega_{cls.canonical_k}^{args.p} = {members}  "
            f"size={cls.cardinality_case.value}  aut={aut}  {eq.text()}"
        )
    return 0


# --- domains -----------------------------------------------------------------

def render_domains_text(p: int, i: int, j: int) -> str:
    assignment = domain_assignment(p, (i, j))
    kappa = kappa_case(p, (i, j))
    lines = [f"p={p} (i,j)=({i},{j}) kappa={kappa.value}"]
    for label in SLOT_ORDER:
        sp = assignment.slots[label]
        lines.append(f"[{label}]_{sp.angle}  {sp.i}.{sp.j}")
    return "\n".join(lines) + "\n"


def cmd_domains(args) -> int:
    p, i, j = args.p, args.i, args.j
    assignment = domain_assignment(p, (i, j))
    kappa = kappa_case(p, (i, j))
    if args.format == "json":
        _print_json(
            {
                "schema_version": 1,
                "p": p,
                "i": i,
                "j": j,
                "kappa": kappa.value,
                "uniformizer_words": list(assignment.pair.generator_words()),
                "slots": [
                    {
                        "slot": label,
                        "angle": assignment.slots[label].angle,
                        "pair": [assignment.slots[label].i, assignment.slots[label].j],
                    }
                    for label in SLOT_ORDER
                ],
            }
        )
        return 0
    if args.format == "csv":
        _print_csv(
            ["slot", "angle", "i", "j"],
            [
                [label, assignment.slots[label].angle, assignment.slots[label].i,
                 assignment.slots[label].j]
                for label in SLOT_ORDER
            ],
        )
        return 0
    sys.stdout.write(render_domains_text(p, i, j))
    return 0


# --- gimel ---------------------------------------------------------------------

def _gimel_equation(cls):
    i, j = cls.representative
    if cls.flavor is TilingFlavor.EQUILATERAL:
        return equilateral_equation(cls.p, i, j)
    if cls.flavor is TilingFlavor.SQUARE:
        return square_equation(cls.p, i, j)
    return None


def cmd_gimel(args) -> int:
    flavor = TilingFlavor(args.tiling)
    classes = enumerate_classes(args.p, flavor)
    if args.format == "json":
        _print_json(
            {
                "schema_version": 1,
                "p": args.p,
                "tiling": flavor.value,
                "classes": [
                    {
                        "representative": list(cls.representative),
                        "key": [list(pair) for pair in cls.key],
                        "kappa": cls.kappa.value,
                        "aut_prime": gimel_aut_prime(cls).to_json(),
                        "aut": gimel_full_aut(cls).to_json(),
                        "hyperelliptic": is_hyperelliptic(cls),
                        "equation": (
                            _gimel_equation(cls).to_json()
                            if _gimel_equation(cls) is not None
                            else None
                        ),
                    }
                    for cls in classes
                ],
                "exceptional_surfaces": [
                    {"equation": s.equation, "aut": s.aut.to_json(), "location": s.location}
                    for s in exceptional_surfaces(args.p)
                ],
            }
        )
        return 0
    if args.format == "csv":
        rows = []
        for cls in classes:
            eq = _gimel_equation(cls)
            rows.append(
                [
                    cls.label(),
                    cls.kappa.value,
                    len(cls.key),
                    gimel_aut_prime(cls).structure,
                    gimel_aut_prime(cls).order,
                    gimel_full_aut(cls).structure,
                    gimel_full_aut(cls).order,
                    "yes" if is_hyperelliptic(cls) else "no",
                    eq.text() if eq else "-",
                ]
            )
        _print_csv(
            ["class", "kappa", "key_size", "aut_prime", "aut_prime_order",
             "aut", "aut_order", "hyperelliptic", "equation"],
            rows,
        )
        return 0
    for cls in classes:
        eq = _gimel_equation(cls)
        aut_p = gimel_aut_prime(cls)
        aut_f = gimel_full_aut(cls)
        full = "" if aut_f == aut_p else f"  aut={aut_f}"
        hyp = "  hyperelliptic" if is_hyperelliptic(cls) else ""
        eq_text = f"  {eq.text()}" if eq else ""
        print(f"class {cls.label()}  kappa={cls.kappa.value}  aut'={aut_p}{full}{hyp}{eq_text}")
    for s in exceptional_surfaces(args.p):
        print(f"note: {s.equation} has aut {s.aut} at {s.location}")
    return 0


# --- components ----------------------------------------------------------------

def cmd_components(args) -> int:
    graph = component_graph(args.p)
    if args.format == "json":
        _print_json(graph.to_json())
        return 0
    if args.format == "dot":
        sys.stdout.write(graph.to_dot())
        return 0
    if args.format == "csv":
        _print_csv(
            ["component", "type", "kappa", "sheets"],
            [
                [
                    comp.index,
                    comp.ctype,
                    comp.kappa.value,
                    " ".join(f"{k[0][0]}.{k[0][1]}" for k in comp.sheets),
                ]
                for comp in graph.components
            ],
        )
        return 0
    census = graph.census()
    print(
        f"p={args.p}: {census['total']} components "
        f"(type1={census['type1']}, type2={census['type2']}, type3={census['type3']})"
    )
    for comp in graph.components:
        sheets = " ".join(f"{k[0][0]}.{k[0][1]}" for k in comp.sheets)
        print(
            f"component {comp.index}  type-{comp.ctype}  kappa={comp.kappa.value}  "
            f"sheets: {sheets}"
        )
    return 0


# --- moduli ---------------------------------------------------------------------

def cmd_moduli(args) -> int:
    report = singular_locus_report(args.g)
    if args.format == "json":
        _print_json(report.to_json())
        return 0
    if args.format == "csv":
        _print_csv(
            ["g", "isolated", "dim_one"],
            [[report.g, report.isolated_count, report.dim_one_count]],
        )
        return 0
    print(
        f"genus {report.g}: isolated singular points: {report.isolated_count}; "
        f"dimension-one components: {report.dim_one_count}"
    )
    for w in report.witness_families:
        print(f"  witness: {w}")
    return 0


# --- equation ---------------------------------------------------------------------

def cmd_equation(args) -> int:
    if args.family == "lefschetz":
        if args.k is None:
            raise AtlasError("lefschetz equations need -k")
        eq = lefschetz_equation(args.p, args.k)
    elif args.family == "hyperelliptic":
        if args.a is None:
            raise AtlasError("hyperelliptic equations need -a (re,im or inf)")
        eq = hyperelliptic_equation(args.p, parse_complex(args.a))
    elif args.family == "equilateral":
        if args.n is None or args.m is None:
            raise AtlasError("equilateral equations need -n and -m")
        eq = equilateral_equation(args.p, args.n, args.m)
    else:
        if args.a is None or args.b is None:
            raise AtlasError("square equations need integer -a and -b")
        eq = square_equation(args.p, int(args.a), int(args.b))
    if args.format == "json":
        _print_json({"schema_version": 1, **eq.to_json()})
        return 0
    if args.format == "csv":
        _print_csv(
            ["equation", "genus", "generators"],
            [[eq.text(), eq.genus, "; ".join(eq.generators)]],
        )
        return 0
    print(eq.text())
    print(f"genus {eq.genus}")
    if eq.rotation_data:
        rot = "  ".join(
            f"{r.branch}: m={r.multiplicity} s={r.rotation}" for r in eq.rotation_data
        )
        print(f"rotation numbers: {rot}")
    for g in eq.generators:
        print(f"generator: {g}")
    return 0


# --- tiling -------------------------------------------------------------------------

def cmd_tiling(args) -> int:
    points = [parse_complex(s) for s in args.points]
    param = four_point_parameter(points)
    if args.format == "json":
        _print_json(
            {
                "schema_version": 1,
                "j": [param.value.real, param.value.imag],
                "special": param.special,
            }
        )
        return 0
    if args.format == "csv":
        _print_csv(["j_re", "j_im", "special"],
                   [[param.value.real, param.value.imag, param.special]])
        return 0
    j = param.value
    j_text = f"{j.real:.12g}" if abs(j.imag) < 1e-12 else f"{j.real:.12g}{j.imag:+.12g}i"
    print(f"j = {j_text} ({param.special})")
    return 0


# --- atlas / verify ---------------------------------------------------------------

def cmd_atlas(args) -> int:
    if args.out is None:
        _print_json(atlas_payload(args.p))
        return 0
    path = write_atlas(args.p, args.out)
    print(f"wrote {path}")
    return 0


def cmd_crosscheck(args) -> int:
    try:
        report = cross_check(args.p)
    except VerificationFailure as exc:
        if exc.report is not None and args.format == "json":
            _print_json(exc.report.to_json())
        else:
            print(exc, file=sys.stderr)
        return 2
    if args.format == "json":
        _print_json(report.to_json())
        return 0
    for check in report.checks:
        mark = "ok  " if check.ok else "FAIL"
        print(f"{mark} {check.name}: formula={check.formula} census={check.census}")
        for w in check.witnesses:
            print(f"      {w}")
    for note in report.notes:
        print(f"note: {note}")
    return 0


def cmd_verify(args) -> int:
    results = verify_mod.run_suite(args.max_p, args.atlas_dir)
    for res in results:
        print(res.line())
    failed = [res for res in results if not res.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 2 if failed else 0


# --- argument parsing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primeatlas",
        description=(
            "Exact classification of compact Riemann surfaces of genus g with "
            "an automorphism of prime order p > g"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, extra=()):
        p.add_argument(
            "--format", choices=["text", "json", "csv", *extra], default="text"
        )

    p_lef = sub.add_parser("lefschetz", help="three-fixed-point classes at p")
    p_lef.add_argument("-p", type=int, required=True)
    add_format(p_lef)
    p_lef.set_defaults(fn=cmd_lefschetz)

    p_dom = sub.add_parser("domains", help="twelve special-domain slots of (i, j)")
    p_dom.add_argument("-p", type=int, required=True)
    p_dom.add_argument("-i", type=int, required=True)
    p_dom.add_argument("-j", type=int, required=True)
    add_format(p_dom)
    p_dom.set_defaults(fn=cmd_domains)

    p_gim = sub.add_parser("gimel", help="four-fixed-point classes at p")
    p_gim.add_argument("-p", type=int, required=True)
    p_gim.add_argument(
        "--tiling",
        choices=[f.value for f in TilingFlavor],
        default=TilingFlavor.GENERIC.value,
    )
    add_format(p_gim)
    p_gim.set_defaults(fn=cmd_gimel)

    p_comp = sub.add_parser("components", help="parameter-space component graph at p")
    p_comp.add_argument("-p", type=int, required=True)
    add_format(p_comp, extra=("dot",))
    p_comp.set_defaults(fn=cmd_components)

    p_mod = sub.add_parser("moduli", help="singular-locus counts at genus g")
    p_mod.add_argument("-g", type=int, required=True)
    add_format(p_mod)
    p_mod.set_defaults(fn=cmd_moduli)

    p_eq = sub.add_parser("equation", help="affine model of a family member")
    p_eq.add_argument(
        "family", choices=["lefschetz", "hyperelliptic", "equilateral", "square"]
    )
    p_eq.add_argument("-p", type=int, required=True)
    p_eq.add_argument("-k", type=int)
    p_eq.add_argument("-n", type=int)
    p_eq.add_argument("-m", type=int)
    p_eq.add_argument("-a", type=str, help="integer exponent (square) or re,im (hyperelliptic)")
    p_eq.add_argument("-b", type=int)
    add_format(p_eq)
    p_eq.set_defaults(fn=cmd_equation)

    p_tile = sub.add_parser(
        "tiling", help="classify four points up to projective equivalence"
    )
    p_tile.add_argument(
        "points",
        nargs=4,
        help='four points, each "re,im" or "inf"; put -- before a leading-minus point',
    )
    add_format(p_tile)
    p_tile.set_defaults(fn=cmd_tiling)

    p_atlas = sub.add_parser("atlas", help="write or print the per-prime atlas JSON")
    p_atlas.add_argument("-p", type=int, required=True)
    p_atlas.add_argument("--out", type=str, default=None, help="directory for atlas_p{p}.json")
    p_atlas.set_defaults(fn=cmd_atlas)

    p_cc = sub.add_parser("crosscheck", help="moduli cross-check at p")
    p_cc.add_argument("-p", type=int, required=True)
    add_format(p_cc)
    p_cc.set_defaults(fn=cmd_crosscheck)

    p_ver = sub.add_parser("verify", help="run the full verification suite")
    p_ver.add_argument("--max-p", type=int, default=101, dest="max_p")
    p_ver.add_argument("--atlas-dir", type=str, default=None, dest="atlas_dir")
    p_ver.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except AtlasError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
