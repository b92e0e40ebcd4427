#!/usr/bin/env python3
#
# Copyright 2026 The qchannel Authors
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
"""Regenerate tests/data/bounds_golden.csv with exact rational arithmetic."""
import math
import sys
from fractions import Fraction as F


def ceil0(x):
    return max(0, math.ceil(x))


def lb_random(m, n):
    return ceil0(F(2) ** (2 * m - 1) * (2 ** n - 1) - F(3, 4) * n)


def lb_measured(m, n):
    if n >= m:
        return ceil0(F(1, 6) * (2 ** (n + m + 1) - 2 ** (2 * m) - max(2, 3 * m) - 1))
    return ceil0(F(1, 6) * (4 ** n - 3 * n - 1))


def lb_isometry(m, n):
    return ceil0(F(1, 4) * (2 ** (n + m + 1) - 2 ** (2 * m) - 2 * n - m - 1))


def params(m, n):
    return 2 ** (2 * m + n + 1) - 2 ** (2 * m + 1)


def main(path):
    with open(path, "w") as f:
        f.write("m,n,lb_random_qcm,lb_measured_qcm,lb_qcm_isometry,param_count_extreme\n")
        for m in range(6):
            for n in range(6):
                f.write(f"{m},{n},{lb_random(m, n)},{lb_measured(m, n)},{lb_isometry(m, n)},{params(m, n)}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/bounds_golden.csv")
