"""Tabulate the inequivalent N_{m,n}^l in a window with their invariants.

    python3 scripts/enumerate_classes.py --max-mn 6 --lmax 12 --csv results/classes.csv
"""

import argparse
import csv
import sys
from dataclasses import dataclass
from math import gcd
from pathlib import Path

from su2five import actions

COLUMNS = ["m", "n", "l", "effective_group", "diffeo_type", "principal", "others",
           "pi1_order", "fixed_set", "nonnegative", "positive", "reason"]


@dataclass
class EnumConfig:
    max_mn: int = 6
    lmax: int = 12


def rows(cfg: EnumConfig):
    for m in range(cfg.max_mn + 1):
        for n in range(m, cfg.max_mn + 1):
            for p in actions.enumerate_actions(m, n, cfg.lmax):
                rec = actions.classify(p.m, p.n, p.l)
                yield {
                    "m": p.m, "n": p.n, "l": p.l,
                    "effective_group": rec["effective_group"],
                    "diffeo_type": rec["diffeo_type"],
                    "principal": rec["isotropy"]["principal"],
                    "others": " ".join(rec["isotropy"]["others"]),
                    "pi1_order": rec["pi1_order"],
                    "fixed_set": rec["fixed_set"]["kind"],
                    **rec["curvature"],
                }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-mn", type=int, default=EnumConfig.max_mn)
    parser.add_argument("--lmax", type=int, default=EnumConfig.lmax)
    parser.add_argument("--csv", type=Path, help="write here instead of stdout")
    args = parser.parse_args()
    cfg = EnumConfig(args.max_mn, args.lmax)
    if args.csv:
        args.csv.parent.mkdir(parents=True, exist_ok=True)
        fh = args.csv.open("w", newline="")
    else:
        fh = sys.stdout
    writer = csv.DictWriter(fh, COLUMNS)
    writer.writeheader()
    count = 0
    for row in rows(cfg):
        writer.writerow(row)
        count += 1
    if args.csv:
        fh.close()
        print(f"{count} classes written to {args.csv}")


if __name__ == "__main__":
    main()
