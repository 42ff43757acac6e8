"""The speed-control knob: one scalar, four tree structures, a frontier.

Sweeps the knob over a small corpus with fixture weights and prints the
trade-off table (with a trained model the cost column stays near zero
while nodes drop; see the README for the full pipeline).
"""

import numpy as np

from partition_pilot.inference import STANDARD_ARCH, random_weights
from partition_pilot.rdosim import CostModel, sweep_to_csv, sweep_tradeoff
from partition_pilot.selector import config_from_speed_control
from partition_pilot.synthetic import synthetic_corpus


def main():
    corpus = synthetic_corpus(3, seed=40, size=64)
    weights = random_weights(STANDARD_ARCH, seed=2)

    values = [0.65, 0.9, 1.2, 1.5, 2.0, 2.6, 3.2, 3.4]
    for s in (0.65, 1.04, 1.7, 3.2):
        cfg = config_from_speed_control(s)
        print(f"s={s}: max QT depth {cfg.max_qt_depth},"
              f" BT/ABT budgets {dict(cfg.btabt_depth_per_level)}")

    print("\nsweeping (exhaustive anchor per structure row, pruned per point):")
    points = sweep_tradeoff(corpus, values, CostModel(qp=27), weights, STANDARD_ARCH)
    print(sweep_to_csv(points))
    print("node_ratio < 1 with cost_increase ~ 0 is the useful regime;")
    print("untrained weights prune blindly, so expect visible cost loss here.")


if __name__ == "__main__":
    main()
