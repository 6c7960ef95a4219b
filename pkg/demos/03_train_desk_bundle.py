"""Train a complete three-stage bundle on a tiny fixture (CPU, ~4 min).

Stage order matters: decomposition first, then restoration and
adjustment against the frozen decomposition. The resulting bundle under
demos/out/bundle feeds the enhancement and metrics demos.
"""

import argparse
import time
from pathlib import Path

from relight.dataset import scan_pairs
from relight.degradation import write_synthetic_corpus
from relight.trainer import TrainConfig, train

SETTINGS = {
    "decomposition": dict(iterations=600, learning_rate=1e-2, batch=4, patch=48),
    "restoration": dict(iterations=300, learning_rate=2e-2, batch=2, patch=48),
    "adjustment": dict(iterations=300, learning_rate=3e-2, batch=4, patch=48),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=Path(__file__).parent / "out", type=Path)
    ap.add_argument("--scale", type=float, default=1.0,
                    help="iteration multiplier, e.g. 0.1 for a fast dry run")
    args = ap.parse_args()

    corpus = args.out / "fixture"
    if not corpus.exists():
        write_synthetic_corpus(corpus, 2, 96, 96, seed=77, noise_sigma=0.03)
    pairs = scan_pairs(corpus, "train")
    bundle = args.out / "bundle"

    for stage, settings in SETTINGS.items():
        settings = dict(settings)
        settings["iterations"] = max(1, int(settings["iterations"] * args.scale))
        config = TrainConfig(stage, bundle / stage, seed=101, log_every=25,
                             **settings)
        decom = bundle / "decomposition" if stage != "decomposition" else None
        started = time.monotonic()
        ck = train(config, pairs, decomposition_ckpt=decom)
        csv = (bundle / stage / "loss.csv").read_text().strip().splitlines()
        first, last = csv[1].split(",")[1], csv[-1].split(",")[1]
        print(f"{stage}: {ck.iteration} iterations in "
              f"{time.monotonic() - started:.0f}s, "
              f"loss {float(first):.4f} -> {float(last):.4f}")

    print(f"bundle ready under {bundle}")


if __name__ == "__main__":
    main()
