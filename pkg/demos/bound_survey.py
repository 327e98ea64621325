"""Solve a batch of random triangulations and report the slack to (n-2)/4."""

import sys
import time
from collections import Counter
from statistics import mean

from powerdom.generators import build, random_corpus
from powerdom.solver import power_dominate

count = int(sys.argv[1]) if len(sys.argv) > 1 else 200
ratios = []
stages = Counter()
t0 = time.perf_counter()
for spec in random_corpus(count, 6, 200, seed=1):
    g = build(spec)
    r = power_dominate(g)
    assert 4 * r.size <= g.n - 2
    ratios.append(r.size / r.bound)
    stages.update(r.provenance.values())
dt = time.perf_counter() - t0
print(f"{count} graphs in {dt:.1f}s ({1000 * dt / count:.1f} ms each)")
print("seeds per stage:", dict(stages))
print(f"|S| / ((n-2)/4): mean {mean(ratios):.2f}, max {max(ratios):.2f}")
