# Copyright 2026 The sboost Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the Wisconsin diagnostic breast cancer data as train/test CSVs."""

import argparse
import pathlib

import numpy as np
from sklearn.datasets import load_breast_cancer


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="data", type=pathlib.Path)
    parser.add_argument("--seed", default=0, type=int)
    args = parser.parse_args()

    bunch = load_breast_cancer()
    x, y = bunch.data, bunch.target
    order = np.random.default_rng(args.seed).permutation(len(y))
    cut = int(round(0.8 * len(y)))
    names = [n.replace(" ", "_") for n in bunch.feature_names]
    args.out.mkdir(parents=True, exist_ok=True)
    for part, rows in (("train", order[:cut]), ("test", order[cut:])):
        path = args.out / f"breast_cancer_{part}.csv"
        with path.open("w") as f:
            f.write(",".join(names + ["label"]) + "\n")
            for i in rows:
                f.write(",".join(repr(float(v)) for v in x[i]))
                f.write(f",{int(y[i])}\n")


if __name__ == "__main__":
    main()
