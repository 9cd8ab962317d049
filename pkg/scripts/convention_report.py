"""Compare the two slot orders of the pair product on a shared seeded sample.

For each order this runs the same seeded window campaign: random pairs of
group elements, each pair checked for the banded product rule on a box of
windows. The orders see identical inputs, so the report isolates the slot
order as the only variable. One order passes every sampled pair; the other
accumulates counterexamples, and the first one is recorded verbatim.

Usage:
    python3 scripts/convention_report.py --trials 100 --accuracy 12 --radius 3
"""

import argparse
import json
from pathlib import Path

from riordan.campaigns import CampaignConfig, run_campaign
from riordan.verdestar import CONVENTIONS


def first_failure(report):
    for line in report.lines[:-1]:
        record = json.loads(line)
        if record["verdict"] == "fail":
            return {
                "trial": record["trial"],
                "seed": record["seed"],
                "inputs": record["inputs"],
                "mismatches": record["detail"]["conjecture"]["mismatches"],
            }
    return None


def build_report(dim, accuracy, radius, trials, seed):
    runs = {}
    for convention in CONVENTIONS:
        cfg = CampaignConfig(
            suite="verdestar",
            dims=(dim,),
            truncs=(accuracy,),
            trials=trials,
            seed=seed,
            radius=radius,
            convention=convention,
        )
        runs[convention] = run_campaign(cfg)

    artifact = {
        "grid": {"d": dim, "accuracy": accuracy, "radius": radius, "trials": trials, "seed": seed}
    }
    failing = []
    for convention, report in runs.items():
        artifact[convention] = {
            "passed": report.passed,
            "failed": report.failed,
            "verdict": "pass" if report.ok else "fail",
        }
        if not report.ok:
            failing.append(convention)
    passing = [c for c in CONVENTIONS if c not in failing]
    if len(passing) == 1:
        artifact["conclusion"] = (
            f"only {passing[0]!r} satisfies the product rule on every sampled window"
        )
        artifact["first_counterexample"] = first_failure(runs[failing[0]])
    else:
        artifact["conclusion"] = f"orders passing at this scale: {passing}"
    return artifact


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dim", type=int, default=2)
    ap.add_argument("--accuracy", type=int, default=12, help="window body order")
    ap.add_argument("--radius", type=int, default=3, help="box radius for the window check")
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=2026)
    ap.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parents[1] / "reports" / "convention_report.json",
    )
    args = ap.parse_args()

    artifact = build_report(args.dim, args.accuracy, args.radius, args.trials, args.seed)
    args.out.parent.mkdir(exist_ok=True)
    args.out.write_text(json.dumps(artifact, indent=2) + "\n")

    for convention in CONVENTIONS:
        row = artifact[convention]
        print(f"{convention:>16}: {row['passed']} passed, {row['failed']} failed")
    print(artifact["conclusion"])
    print(f"report written to {args.out}")


if __name__ == "__main__":
    main()
