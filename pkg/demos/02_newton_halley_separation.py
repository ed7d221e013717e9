"""
Separating the zeros of f_3 with educated Newton and Halley maps
================================================================

Newton's map of f_3 has vertical asymptotes between zeros.  Restricting it
to points that move by less than d = 1/2 (half the distance between
neighbouring zeros) leaves one plateau around each zero.  Halley's map is
continuous, and the slope predicate |g(g(x)) - g(x)| <= |g(x) - x| carves
out the same plateaus without choosing a d.
"""

import numpy as np

from rootsieve import GridSpec, Interval, PredicateConfig, analyze, pruitt_model

f3 = pruitt_model(3)
grid = GridSpec(1.5, 25.5, 2400)
domain = Interval(1.5, 25.5)

for kind, cfg in (("newton", PredicateConfig(domain, "p0", 0.5)),
                  ("halley", PredicateConfig(domain, "p1"))):
    result = analyze(f3, kind, cfg, grid)
    print(f"{kind}/{cfg.mode}: {len(result.runs)} runs")
    for rep in result.reports:
        print(f"  [{rep.run.lo:7.3f}, {rep.run.hi:7.3f}] -> {rep.root!r}  depth {rep.depth}")

# with a large displacement the continuous Halley map lets one plateau
# swallow several zeros; the report is flagged instead of guessed
short = GridSpec(1.5, 8.5, 700)
result = analyze(f3, "halley", PredicateConfig(f3.domain, "p0", 0.5), short)
rep = result.reports[0]
print(f"halley/p0 on [1.5, 8.5]: {len(result.runs)} run, possibly multiple = {rep.possibly_multiple}")

# the zeros are integers, so the refined roots are exact
roots = np.array([r.root for r in analyze(f3, "newton", PredicateConfig(domain, "p0", 0.5), grid).reports])
print("max distance to nearest integer:", np.abs(roots - np.rint(roots)).max())
