"""The exhaustive RD search on synthetic content, and what pruning does.

Shows the optimal tree of a structured block, then feeds the search its
own ground-truth boundaries to demonstrate lossless node reduction, and
finally prunes everything away.
"""

import numpy as np

from partition_pilot.geometry import SplitMode, tree_to_boundaries
from partition_pilot.rdosim import CostModel, exhaustive_rdo, pruned_rdo
from partition_pilot.selector import config_from_speed_control
from partition_pilot.synthetic import synthetic_image


def render(tree, size=64):
    canvas = [[" "] * size for _ in range(size)]
    for node in tree.leaves():
        r = node.rect
        for x in range(r.x, r.x + r.width):
            canvas[r.y][x] = canvas[r.y + r.height - 1][x] = "-"
        for y in range(r.y, r.y + r.height):
            canvas[y][r.x] = canvas[y][r.x + r.width - 1] = "|"
    return "\n".join("".join(row[::2]) for row in canvas[::4])


def main():
    block = synthetic_image(21, size=64, noise=1.0).astype(np.float64)
    model = CostModel(qp=27)
    cfg = config_from_speed_control(2.0)

    exhaustive = exhaustive_rdo(block, cfg, model)
    print("exhaustive search over the full tree space:")
    print(f"  cost={exhaustive.cost:.1f} nodes_checked={exhaustive.nodes_checked}"
          f" leaves={exhaustive.leaves}")
    print(render(exhaustive.tree))

    oracle = tree_to_boundaries(exhaustive.tree)
    pruned = pruned_rdo(block, oracle, cfg.with_uniform_thresholds(0.5), model)
    print("\npruned search fed the optimal tree's own boundaries (thresholds 0.5):")
    print(f"  cost={pruned.cost:.1f} nodes_checked={pruned.nodes_checked}"
          f" ({pruned.nodes_checked / exhaustive.nodes_checked:.1%} of exhaustive)")
    assert pruned.cost == exhaustive.cost

    everything = pruned_rdo(block, oracle, cfg.with_uniform_thresholds(1.0), model)
    print("\nthresholds 1.0 prune every split:")
    print(f"  tree={everything.tree.split.name} nodes_checked={everything.nodes_checked}")
    assert everything.tree.split == SplitMode.NO_SPLIT


if __name__ == "__main__":
    main()
