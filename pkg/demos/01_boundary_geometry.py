"""Partition trees and the 480-entry boundary vector, step by step.

Builds a small tree by hand, maps it onto the boundary vector, shows the
two orientation grids, and round-trips the edges back.
"""

import numpy as np

from partition_pilot.geometry import (
    BlockRect,
    PartitionTree,
    SplitMode,
    boundaries_to_image,
    tree_to_boundaries,
)


def leaf(rect):
    return PartitionTree(rect)


def main():
    root = BlockRect(0, 0, 64, 64)

    print("A quadtree split of the 64x64 root, with the top-left quadrant")
    print("further split by a horizontal binary split:\n")
    q = root.children(SplitMode.QT)
    top_left = PartitionTree(
        q[0], SplitMode.BT_H, tuple(leaf(r) for r in q[0].children(SplitMode.BT_H))
    )
    tree = PartitionTree(root, SplitMode.QT, (top_left, leaf(q[1]), leaf(q[2]), leaf(q[3])))

    for node in tree.iter_nodes():
        indent = "  " * ((node.rect.width != 64) + (node.rect.width < 32))
        print(f"{indent}{node.rect.width}x{node.rect.height}"
              f" @ ({node.rect.x},{node.rect.y}) -> {node.split.name}")

    vector = tree_to_boundaries(tree)
    print(f"\nboundary vector: {int(vector.sum())} of {vector.size} segments set")

    image = boundaries_to_image(vector)
    print("\nvertical grid (rows = internal lines x=4..60, cols = 4-sample segments):")
    for line in range(15):
        print("  " + "".join("#" if v else "." for v in image.vertical[line]))
    print("\nhorizontal grid:")
    for line in range(15):
        print("  " + "".join("#" if v else "." for v in image.horizontal[line]))

    print("\nExpected: the full cross at x=32/y=32 plus the y=16 edge inside")
    print("the top-left quadrant (segments 0..7 of horizontal line 3).")
    marked = sorted(int(i) for i in np.flatnonzero(vector))
    print(f"first few flat indices: {marked[:10]} ...")


if __name__ == "__main__":
    main()
