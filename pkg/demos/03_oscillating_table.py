"""
An oscillating function with hundreds of roots near the origin
==============================================================

f(x) = (x + 1/2)^(3/2) sin(1/x^2) has zeros at 1/sqrt(n pi), which pile up
at 0.  Halley's map educated by the slope predicate, tabulated on 1501
points of [-0.0097, 0.0097], isolates them: suppressed points (shown as 0)
separate the runs, and each run is refined by composing the educated map.
"""

import time

import numpy as np

from rootsieve import EducatedMap, GridSpec, PredicateConfig, analyze, detect_runs, sweep_grid
from rootsieve.funcmodel import oscillating_model
from rootsieve.itermaps import make_map

f = oscillating_model()
cfg = PredicateConfig(f.domain, "p1")
grid = GridSpec(-0.0097, 0.0097, 1500)
em = EducatedMap(make_map("halley", f), cfg)

t0 = time.perf_counter()
table = sweep_grid(em, grid, 3)
print(f"sweep of {grid.n + 1} points at depths 1..3 took {time.perf_counter() - t0:.2f} s")

# the first and last eight rows, suppressed cells rendered as 0
shown = table.rendered()
for i in list(range(8)) + list(range(grid.n - 7, grid.n + 1)):
    print(", ".join(f"{v:.8g}" if v != 0 else "0" for v in (table.x[i], *shown[i])))

runs = detect_runs(table)
print(len(runs), "runs")

# deeper compositions stop changing: depth 2 and depth 3 agree everywhere
live = ~table.suppressed[:, 1]
print("max |depth3 - depth2|:", np.abs(table.values[live, 2] - table.values[live, 1]).max())

# refine each run and look at the residuals; near the origin |f'| grows like
# |x|^-3, so even a correctly rounded root leaves a residual above 1e-12
result = analyze(f, "halley", cfg, grid)
res = np.array([r.residual for r in result.reports])
roots = np.array(result.roots)
print(f"{len(roots)} roots, residual <= 1e-12 for {np.sum(res <= 1e-12)}")
print("largest residual:", res.max(), "at x =", roots[res.argmax()])

# every refined root is 1/sqrt(n pi) for an integer n
n = 1 / (np.pi * roots ** 2)
print("max distance of 1/(pi z^2) to an integer:", np.abs(n - np.rint(n)).max())
