#!/usr/bin/env python3
"""Stopband attenuation versus number of sections at a few frequencies.

In this cascade model the scaling is exactly linear; real structures drift
from that at very high frequencies, which is outside the model's scope.
"""

import argparse
import sys
from pathlib import Path

try:
    import herd
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
    import herd  # noqa: F401

from herd import attenuation_vs_sections, prototype_design


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="out")
    parser.add_argument("--freqs", default="40e9,60e9,130e9", help="comma-separated Hz")
    parser.add_argument("--max-sections", type=int, default=8)
    args = parser.parse_args()

    freqs = [float(token) for token in args.freqs.split(",") if token.strip()]
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    design = prototype_design()

    ladders = [attenuation_vs_sections(design, f, args.max_sections) for f in freqs]
    path = outdir / "attenuation_vs_sections.csv"
    with open(path, "w") as fh:
        fh.write("sections," + ",".join(f"att_db_{f:.12g}hz" for f in freqs) + "\n")
        for i in range(args.max_sections):
            row = [str(ladders[0][i][0])] + [f"{ladder[i][1]:.12g}" for ladder in ladders]
            fh.write(",".join(row) + "\n")
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
