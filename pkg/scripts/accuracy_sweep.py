"""Measure how far window certification reaches as body accuracy grows.

The banded product rule on a box can only be checked where both factors carry
enough window data; pairs of box monomials beyond that are reported as
uncertified rather than checked. This sweep runs seeded trials at increasing
body accuracy and tabulates the certified radius and the uncertified count,
showing the certification frontier move outward.

Usage:
    python3 scripts/accuracy_sweep.py --accuracies 4,6,8,10,12,14 --trials 20
"""

import argparse
import random
import statistics

from riordan.campaigns import derive_seed, random_vsr
from riordan.rings import ring_from_tag
from riordan.verdestar import conjecture_trial


def sweep_cell(dim, accuracy, radius, trials, seed, ring):
    certified, uncertified, failures = [], [], 0
    for i in range(trials):
        rng = random.Random(derive_seed(seed, "accuracy-sweep", dim, accuracy, i))
        a = random_vsr(rng, dim, accuracy, ring)
        b = random_vsr(rng, dim, accuracy, ring)
        report = conjecture_trial(a, b, radius)
        certified.append(report.certified_radius)
        uncertified.append(report.uncertified_pairs)
        if not report.homomorphism_ok:
            failures += 1
    return {
        "accuracy": accuracy,
        "mean_certified_radius": statistics.mean(certified),
        "min_certified_radius": min(certified),
        "mean_uncertified_pairs": statistics.mean(uncertified),
        "failures": failures,
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dim", type=int, default=2)
    ap.add_argument(
        "--accuracies",
        default="4,6,8,10,12",
        help="comma-separated body orders to sweep",
    )
    ap.add_argument("--radius", type=int, default=3)
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=2026)
    ap.add_argument("--ring", default="int")
    args = ap.parse_args()

    ring = ring_from_tag(args.ring)
    accuracies = [int(a) for a in args.accuracies.split(",")]
    header = f"{'accuracy':>8} {'cert.radius (mean/min)':>24} {'uncertified (mean)':>20} {'failures':>9}"
    print(header)
    print("-" * len(header))
    for accuracy in accuracies:
        row = sweep_cell(args.dim, accuracy, args.radius, args.trials, args.seed, ring)
        print(
            f"{row['accuracy']:>8} "
            f"{row['mean_certified_radius']:>13.2f} / {row['min_certified_radius']:<8} "
            f"{row['mean_uncertified_pairs']:>20.1f} "
            f"{row['failures']:>9}"
        )


if __name__ == "__main__":
    main()
