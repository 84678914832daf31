#!/usr/bin/env python3
"""Run the structural-law sweeps over a configurable basis range.

Examples:
    python3 scripts/run_axiom_sweep.py
    python3 scripts/run_axiom_sweep.py --suite qed --order 4 --jobs 4
    python3 scripts/run_axiom_sweep.py --corrupt delta-alpha   # negative control
"""

import argparse
import sys
import time
from dataclasses import dataclass
from typing import Optional

from treehopf import checks


@dataclass
class SweepConfig:
    suite: str = "all"
    order: Optional[int] = None
    jobs: int = 1
    corrupt: Optional[str] = None


def run(cfg: SweepConfig) -> int:
    maps = checks.default_maps()
    if cfg.corrupt:
        maps = checks.corrupt_map(maps, cfg.corrupt)
        print(f"negative control: {cfg.corrupt} corrupted, expecting failures")
    start = time.monotonic()
    results = checks.run_suite(cfg.suite, cfg.order, maps, cfg.jobs)
    for r in results:
        print(r.line())
    elapsed = time.monotonic() - start
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} sweeps passed in {elapsed:.2f}s")
    return 1 if failed else 0


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--suite", default="all")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--corrupt", default=None)
    args = p.parse_args()
    return run(SweepConfig(args.suite, args.order, args.jobs, args.corrupt))


if __name__ == "__main__":
    sys.exit(main())
