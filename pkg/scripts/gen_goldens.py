#!/usr/bin/env python3
"""Regenerate the golden files for the `domains` and `lefschetz` commands.

The domain goldens are rendered straight from the hand-transcribed tables in
primeatlas.fixtures (NOT from the CLI renderer), so they anchor both the
computed cell values and the text format.  The lefschetz goldens freeze the
CLI's row format; the member sets inside them are anchored back to the
transcribed tables by the test suite.  Run from the repository root:

    python scripts/gen_goldens.py
"""

from __future__ import annotations

import io
import pathlib
import sys
from contextlib import redirect_stdout

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from primeatlas.fixtures import LAMBDA_TABLES, OMEGA_TABLES, SLOT_ORDER, SLOT_ANGLES

GOLDEN = pathlib.Path(__file__).resolve().parents[1] / "tests" / "golden"


def render(p: int, column) -> str:
    lines = [f"p={p} (i,j)=({column.i},{column.j}) kappa={column.kappa}"]
    for slot, angle, (a, b) in zip(SLOT_ORDER, SLOT_ANGLES, column.cells):
        lines.append(f"[{slot}]_{angle}  {a}.{b}")
    return "\n".join(lines) + "\n"


def main() -> None:
    out = GOLDEN / "domains"
    out.mkdir(parents=True, exist_ok=True)
    count = 0
    for p, columns in sorted(LAMBDA_TABLES.items()):
        for column in columns:
            path = out / f"p{p}_i{column.i}_j{column.j}.txt"
            path.write_text(render(p, column))
            count += 1
    print(f"wrote {count} golden files under {out}")

    from primeatlas.cli import main as cli_main

    out = GOLDEN / "omega"
    out.mkdir(parents=True, exist_ok=True)
    for p in sorted(OMEGA_TABLES):
        buf = io.StringIO()
        with redirect_stdout(buf):
            cli_main(["lefschetz", "-p", str(p)])
        (out / f"p{p}.txt").write_text(buf.getvalue())
    print(f"wrote {len(OMEGA_TABLES)} golden files under {out}")


if __name__ == "__main__":
    main()
