#!/usr/bin/env python3
"""Run the default constant-gap certification sweep (120 strong-interference
channels) and print the summary. Exit code 3 signals a certification failure.
"""

import sys
from pathlib import Path

from cifc.cli import SweepConfig, cmd_gap_sweep, default_sweep_channels


def main() -> int:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("out/gap_sweep")
    return cmd_gap_sweep(SweepConfig(default_sweep_channels()), out)


if __name__ == "__main__":
    sys.exit(main())
