#!/usr/bin/env python3
"""Regenerate the hexagonal-cusp lattice diagram (and the test golden).

The default invocation reproduces tests/fixtures/goldens/hex2_threshold6.svg
byte for byte; use --out to write elsewhere or tweak the flags to explore.
"""

from __future__ import annotations

import argparse
import math
from pathlib import Path

from cuspslopes.cusp_geometry import CuspShape
from cuspslopes.diagram import DiagramSpec, emit_lattice_svg
from cuspslopes.slope_search import enumerate_short_slopes

REPO_ROOT = Path(__file__).resolve().parent.parent
GOLDEN = REPO_ROOT / "tests" / "fixtures" / "goldens" / "hex2_threshold6.svg"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=GOLDEN, help=f"output path (default: {GOLDEN})")
    parser.add_argument("--threshold", type=float, default=6.0)
    parser.add_argument("--extent", type=int, default=4)
    parser.add_argument("--size", type=int, default=600)
    parser.add_argument("--no-labels", action="store_true")
    args = parser.parse_args()

    shape = CuspShape((2.0, 0.0), (1.0, math.sqrt(3.0)), name="hex2")
    report = enumerate_short_slopes(shape, args.threshold)
    spec = DiagramSpec(
        report,
        lattice_extent=args.extent,
        label_slopes=not args.no_labels,
        width=args.size,
        height=args.size,
    )
    svg = emit_lattice_svg(spec)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(svg, encoding="utf-8")
    print(f"wrote {args.out} ({len(report)} slopes, {2 * len(report)} markers)")


if __name__ == "__main__":
    main()
