"""Enhance a low-light image across a sweep of light ratios.

Loads the bundle from the training demo, enhances one fixture image at
several alphas, and writes the learned results next to plain gamma
curves so the difference is easy to eyeball.
"""

import argparse
from pathlib import Path

import numpy as np

from relight.dataset import load_pair, scan_pairs
from relight.imaging import save_image
from relight.pipeline import EnhancerBundle, enhance_detailed, gamma_baseline


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=Path(__file__).parent / "out", type=Path)
    ap.add_argument("--alphas", default="1.0,1.5,2.0,3.0")
    args = ap.parse_args()

    bundle = EnhancerBundle.load(args.out / "bundle")
    pairs = scan_pairs(args.out / "fixture", "train")
    low, high = load_pair(pairs[0])
    (args.out / "sweep").mkdir(parents=True, exist_ok=True)
    save_image(args.out / "sweep" / "input_low.png", low)
    save_image(args.out / "sweep" / "reference_high.png", high)

    for alpha in (float(a) for a in args.alphas.split(",")):
        r = enhance_detailed(low, alpha, bundle)
        save_image(args.out / "sweep" / f"enhanced_a{alpha:g}.png", r.image)
        save_image(args.out / "sweep" / f"gamma_a{alpha:g}.png",
                   gamma_baseline(low, 1.0 + alpha))
        print(f"alpha {alpha:4.1f}: mean brightness "
              f"{low.mean():.3f} -> {r.image.mean():.3f}, "
              f"illumination {r.illumination.mean():.3f} -> "
              f"{r.adjusted_illumination.mean():.3f}")

    print(f"high reference mean brightness: {np.mean(high):.3f}")
    print(f"images under {args.out / 'sweep'}")


if __name__ == "__main__":
    main()
