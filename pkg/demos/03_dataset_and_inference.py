"""End-to-end data path: oracle labels -> BPDS file -> CNN forward pass.

Builds a tiny dataset with the exhaustive search as label oracle, reads
it back, and runs the (untrained) network on one record to show the
plumbing the trainer hooks into.
"""

import tempfile
from pathlib import Path

import numpy as np

from partition_pilot.dataset import DatasetReader, build_dataset
from partition_pilot.inference import STANDARD_ARCH, forward, random_weights
from partition_pilot.rdosim import CostModel
from partition_pilot.selector import config_from_speed_control
from partition_pilot.synthetic import synthetic_corpus


def main():
    corpus = synthetic_corpus(2, seed=11, size=128)
    cfg = config_from_speed_control(3.3)
    out = Path(tempfile.mkdtemp()) / "demo.bpds"

    count = build_dataset(corpus, qps=[22, 32], cfg=cfg, out_path=out)
    print(f"wrote {count} records to {out} ({out.stat().st_size / 1e6:.1f} MB)")

    reader = DatasetReader(out)
    record = reader.record(0)
    print(f"record 0: source={record.source_id} qstep_norm={record.patch.qstep_norm:.3f}"
          f" label density={record.label.mean():.3f}")

    weights = random_weights(STANDARD_ARCH, seed=0)
    probabilities = forward(weights, STANDARD_ARCH, record.patch)
    print(f"untrained forward pass: min={probabilities.min():.3f}"
          f" max={probabilities.max():.3f} (sigmoid outputs, 480 values)")
    print(f"parameters: {weights.parameter_count}")

    agreement = np.mean((probabilities > 0.5) == (record.label > 0))
    print(f"untrained thresholded agreement vs label: {agreement:.2%}"
          " (the trainer's job is to push this up)")


if __name__ == "__main__":
    main()
