"""Run every verification sweep and write the reports as JSON.

    python3 scripts/run_sweeps.py --out results/sweeps.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from math import gcd
from pathlib import Path

from su2five import __version__
from su2five.verifiers import (
    verify_bijection,
    verify_equivalence_counts,
    verify_exceptional_pairs,
    verify_gauss_bonnet_bound,
    verify_noncyclic_obstruction,
    verify_pi1_formula,
    verify_table1,
)


@dataclass
class SweepConfig:
    n_max: int = 10
    k_min: int = -3
    k_max: int = 3
    max_cosets: int = 100_000
    q_max: int = 12
    window: int = 5
    m_max: int = 30
    equiv_max: int = 8
    table1_m: list[int] = field(default_factory=lambda: list(range(3, 16)))


def run(cfg: SweepConfig) -> dict:
    reports = {}

    def timed(name, fn, *args, **kwargs):
        start = time.perf_counter()
        rep = fn(*args, **kwargs)
        reports[name] = dict(rep.to_json(), seconds=round(time.perf_counter() - start, 3))
        print(f"{name:24s} {rep.status:12s} cases={rep.cases}")

    timed("pi1", verify_pi1_formula, cfg.n_max, (cfg.k_min, cfg.k_max), cfg.max_cosets)
    for q2 in range(2, cfg.q_max + 1):
        for q1 in range(1, q2):
            if gcd(q1, q2) == 1:
                timed(f"bijection/{q1},{q2}", verify_bijection, q1, q2, cfg.window)
    timed("exceptional-pairs", verify_exceptional_pairs, cfg.m_max)
    timed("table1", verify_table1, cfg.table1_m)
    timed("noncyclic", verify_noncyclic_obstruction)
    for m in range(cfg.equiv_max + 1):
        for n in range(m, cfg.equiv_max + 1):
            if (gcd(m, n) or 1) <= 2:
                timed(f"equiv-counts/{m},{n}", verify_equivalence_counts, m, n)
    timed("gauss-bonnet", verify_gauss_bonnet_bound)
    return {"version": __version__, "config": asdict(cfg), "reports": reports}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("results/sweeps.json"))
    parser.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    parser.add_argument("--m-max", type=int, default=SweepConfig.m_max)
    args = parser.parse_args()
    result = run(SweepConfig(n_max=args.n_max, m_max=args.m_max))
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(result, indent=2))
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
