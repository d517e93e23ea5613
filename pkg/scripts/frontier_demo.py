#!/usr/bin/env python3
"""Emit the four frontier curves for the reference channel (p1 = p2 = 1,
a = 0, |b| = 2): outer envelope, inner hull, time-sharing line, and the
time-sharing line scaled by two. CSV files land in out/frontier_demo.
"""

import sys
from pathlib import Path

from cifc.channels import GaussianChannel
from cifc.cli import cmd_gaussian_region


def main() -> int:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("out/frontier_demo")
    ch = GaussianChannel(a=0, b=2, p1=1.0, p2=1.0)
    code = cmd_gaussian_region(ch, out, alpha_grid=512, r1_grid=512)
    print(f"wrote outer/inner/tdma/tdma_x2 CSV files to {out}")
    return code


if __name__ == "__main__":
    sys.exit(main())
