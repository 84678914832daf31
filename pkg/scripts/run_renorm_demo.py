#!/usr/bin/env python3
"""Order-by-order propagator consistency over a batch of seeded toy
characters; prints a residual report per seed and a final tally.

Examples:
    python3 scripts/run_renorm_demo.py
    python3 scripts/run_renorm_demo.py --seeds 50 --order 4
    python3 scripts/run_renorm_demo.py --ring matrix --d 4 --order 3
"""

import argparse
import json
import sys
from dataclasses import dataclass

from treehopf.algebra import Tag
from treehopf import renorm


@dataclass
class DemoConfig:
    seeds: int = 20
    order: int = 4
    ring: str = "scalar"
    d: int = 4
    verbose: bool = False


def run(cfg: DemoConfig) -> int:
    bad = 0
    for seed in range(cfg.seeds):
        u = renorm.make_toy_character(Tag.HGAMMA, seed, cfg.ring, cfg.d, cfg.order)
        ue = renorm.make_toy_character(Tag.HE, seed, cfg.ring, cfg.d, cfg.order)
        cg = renorm.make_toy_character(Tag.HALPHA, seed + 1, "scalar", cfg.d, cfg.order)
        ce = renorm.make_toy_character(Tag.HE, seed + 2, "scalar", cfg.d, cfg.order)
        photon = renorm.dyson_check_photon(u, cg, cfg.order)
        electron = renorm.dyson_check_electron(ue, cg, ce, cfg.order)
        ok = photon.ok and electron.ok
        bad += not ok
        status = "ok" if ok else "FAIL"
        print(f"seed {seed:3d}: photon {photon.to_json()['status']}, "
              f"electron {electron.to_json()['status']} -> {status}")
        if cfg.verbose or not ok:
            print(json.dumps({"photon": photon.to_json(), "electron": electron.to_json()}, indent=2))
    print(f"{cfg.seeds - bad}/{cfg.seeds} seeds consistent at order {cfg.order} ({cfg.ring})")
    return 1 if bad else 0


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--order", type=int, default=4)
    p.add_argument("--ring", choices=["scalar", "matrix"], default="scalar")
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--verbose", action="store_true")
    args = p.parse_args()
    return run(DemoConfig(args.seeds, args.order, args.ring, args.d, args.verbose))


if __name__ == "__main__":
    sys.exit(main())
