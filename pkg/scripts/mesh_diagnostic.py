#!/usr/bin/env python3
"""How the limit of gamma(n) * sum f(x_i) sqrt(dx_i) depends on the mesh.

On the mesh x_i = a + (b - a) (i/n)^p the sum of sqrt(dx_i) / sqrt(n) tends to
sqrt(b - a) * integral_0^1 sqrt(p s^(p-1)) ds = sqrt(b - a) * 2 sqrt(p) / (p + 1),
so only p = 1 (the uniform mesh) recovers sqrt(b - a).
"""

import math
from dataclasses import dataclass, field

from sqrtdx.quadrature import Interval, graded_partition, partition_sum, uniform_partition


@dataclass
class MeshConfig:
    powers: list = field(default_factory=lambda: [1.0, 1.5, 2.0, 3.0, 4.0])
    ns: list = field(default_factory=lambda: [100, 1000, 10000, 100000])
    interval: tuple = (0.0, 4.0)


def main(cfg: MeshConfig = MeshConfig()):
    interval = Interval(*cfg.interval)
    root = math.sqrt(interval.length)
    print(f"f = 1 on [{interval.a:g}, {interval.b:g}]; uniform value sqrt(b-a) = {root:.10f}")
    print(f"{'power':>6}" + "".join(f"{'n=' + str(n):>16}" for n in cfg.ns) + f"{'predicted':>16}")
    for p in cfg.powers:
        values = []
        for n in cfg.ns:
            part = uniform_partition(interval, n) if p == 1.0 else graded_partition(interval, n, p)
            values.append(partition_sum("1", part))
        predicted = root * 2 * math.sqrt(p) / (p + 1)
        print(f"{p:>6g}" + "".join(f"{v:>16.10f}" for v in values) + f"{predicted:>16.10f}")


if __name__ == "__main__":
    main()
