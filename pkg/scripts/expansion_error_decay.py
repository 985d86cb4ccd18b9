#!/usr/bin/env python3
"""Error of the truncated power-sum expansions against exact direct sums, n = 10 .. 10^5."""

from dataclasses import dataclass, field

import numpy as np

from sqrtdx.ramanujan import error_decay_slope, expansion_error_report


@dataclass
class DecayConfig:
    ns: list = field(default_factory=lambda: [10, 30, 100, 300, 1000, 3000, 10000, 30000, 100000])
    precision: int = 50


def main(cfg: DecayConfig = DecayConfig()):
    for which, next_term in [("sqrt_sum", lambda n: n**-2.5 / 1920), ("inv_sqrt_sum", lambda n: n**-1.5 / 24)]:
        rows = expansion_error_report(cfg.ns, which, precision=cfg.precision)
        print(f"\n{which}")
        print(f"{'n':>8}{'abs_error':>14}{'next term':>14}{'ratio':>9}")
        for r in rows:
            est = next_term(r.n)
            print(f"{r.n:>8}{r.abs_error:>14.4e}{est:>14.4e}{r.abs_error / est:>9.5f}")
        tail = [r for r in rows if r.n >= 100]
        print(f"slope over n >= 100: {error_decay_slope(tail):.4f}")
        local = np.diff(np.log([r.abs_error for r in rows])) / np.diff(np.log([r.n for r in rows]))
        print("local slopes:", " ".join(f"{s:.3f}" for s in local))


if __name__ == "__main__":
    main()
