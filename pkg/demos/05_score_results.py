"""Score enhanced images against their references.

Enhances every fixture pair at its own ideal ratio, evaluates fidelity
(PSNR, SSIM) and lightness ordering (LOE), and prints the same table the
eval subcommand produces.
"""

import argparse
from pathlib import Path

from relight.dataset import load_pair, scan_pairs
from relight.imaging import save_image
from relight.metrics import evaluate_corpus, report_table
from relight.networks import compute_ratio
from relight.pipeline import EnhancerBundle, decompose, enhance, gamma_baseline


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=Path(__file__).parent / "out", type=Path)
    args = ap.parse_args()

    bundle = EnhancerBundle.load(args.out / "bundle")
    pairs = scan_pairs(args.out / "fixture", "train")

    enhanced = args.out / "scored" / "enhanced"
    gamma = args.out / "scored" / "gamma"
    reference = args.out / "scored" / "reference"
    for directory in (enhanced, gamma, reference):
        directory.mkdir(parents=True, exist_ok=True)
    for pair in pairs:
        low, high = load_pair(pair)
        _, L_low = decompose(low, bundle)
        _, L_high = decompose(high, bundle)
        alpha = compute_ratio(L_low, L_high)
        save_image(enhanced / f"{pair.id}.png", enhance(low, alpha, bundle))
        save_image(gamma / f"{pair.id}.png", gamma_baseline(low, 2.2))
        save_image(reference / f"{pair.id}.png", high)
        print(f"{pair.id}: ideal ratio {float(alpha):.2f}")

    for name, candidate in (("learned", enhanced), ("gamma 2.2", gamma)):
        print(f"\n{name} vs reference:")
        print(report_table(evaluate_corpus(candidate, reference)), end="")


if __name__ == "__main__":
    main()
