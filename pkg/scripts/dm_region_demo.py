#!/usr/bin/env python3
"""Sampled capacity frontiers for two deterministic fixtures: the
two-parallel-pipes channel and the 2-bit shift channel. Writes hulled and
raw frontier CSVs per channel under out/dm_regions.
"""

import sys
from pathlib import Path

from cifc.channels import linear_deterministic
from cifc.cli import DmRegionConfig, cmd_dm_region


def main() -> int:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("out/dm_regions")
    fixtures = {
        "pipes": (linear_deterministic(1, 0, 0, 1), {"method": "grid", "k": 4}),
        "shift_2112": (linear_deterministic(2, 1, 1, 2), {"method": "grid", "k": 4}),
    }
    for name, (ch, sampler) in fixtures.items():
        cfg = DmRegionConfig(
            channel=ch,
            family="det",
            method=sampler["method"],
            k=sampler.get("k", 0),
        )
        cmd_dm_region(cfg, out / name)
        print(f"wrote frontiers for {name} to {out / name}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
