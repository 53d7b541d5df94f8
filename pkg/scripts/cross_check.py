#!/usr/bin/env python3
"""Random cross-validation sweep: direct vs transform vs Monte Carlo.

Draws seeded random instances, skips invalid/degenerate ones, asserts
the two symbolic results are identical Fractions, and (optionally)
checks a Monte Carlo estimate against them.

    python scripts/cross_check.py --count 50 --m 2 3 4 --n-max 8 --mc-samples 200000
"""
import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import lapvol as lv

SKIP = (lv.NotCompact, lv.NotPointed, lv.DegenerateInstance, lv.DivergentSlice)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=50, help="valid instances to collect")
    ap.add_argument("--m", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--signed", action="store_true", default=True)
    ap.add_argument("--mc-samples", type=int, default=0,
                    help="if > 0, also Monte-Carlo check each instance")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    done = skipped = mc_bad = 0
    t0 = time.perf_counter()
    while done < args.count:
        m = rng.choice(args.m)
        n = rng.randint(2, args.n_max)
        inst = lv.random_instance(rng, m, n, signed=args.signed)
        try:
            norm = lv.normalize(inst)
            dr = lv.run_direct(norm)
            tr = lv.run_transform(norm)
        except SKIP as exc:
            skipped += 1
            continue
        assert dr.result == tr.result, f"METHOD DISAGREEMENT on {inst}"
        leaves = dr.levels[-1].terms_in
        line = (f"m={m} n={n:2d} vol={str(dr.result):>20s} leaves={leaves:4d} "
                f"perturbations={len(dr.config.ledger)}")
        if args.mc_samples > 0:
            est = lv.mc_volume(inst, args.mc_samples, seed=rng.randint(0, 2**31))
            dev = abs(est.estimate - float(dr.result))
            if est.estimate == 0.0 and dr.result > 0:
                flag = "0 hits (box too coarse at this sample count)"
            elif dev <= 3 * est.stderr:
                flag = "ok"
            else:
                flag = "OUTSIDE 3 SIGMA"
                mc_bad += 1
            line += f" mc={est.estimate:.5f}+-{est.stderr:.5f} {flag}"
        print(line)
        done += 1
    dt = time.perf_counter() - t0
    print(f"\n{done} instances agreed exactly, {skipped} draws skipped, {dt:.1f}s")
    if args.mc_samples > 0:
        print(f"Monte Carlo outside 3 sigma: {mc_bad}/{done} "
              "(a few are expected by chance)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
