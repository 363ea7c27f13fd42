"""Degree distribution of the local model next to the BA baseline.

Both models should show a k^-3 tail. The local model matches the
closed form p(k) = 12 / (k (k+1) (k+2)) at m = 2 for small k already at
a few thousand nodes.

    python3 demos/degree_distribution.py
"""

from mbagrow import GrowthConfig, Model, degree_distribution, grow, predicted_pk
from mbagrow.ensemble import run_ensemble
from mbagrow.metrics import DegreeHistogram, powerlaw_slope

RUNS, T = 20, 5000


def hist(cfg):
    return degree_distribution(grow(cfg))


local = DegreeHistogram.merge(run_ensemble(hist, GrowthConfig(m=2, t_final=T, seed=1), RUNS))
ba = DegreeHistogram.merge(run_ensemble(hist, GrowthConfig(m=2, t_final=T, seed=1, model=Model.BA), RUNS))

print(f"{'k':>4} {'p_local':>10} {'p_ba':>10} {'closed form':>12}")
for k in range(2, 13):
    print(f"{k:>4} {local.p(k):>10.5f} {ba.p(k):>10.5f} {predicted_pk(k):>12.5f}")

print()
print(f"tail slope over k in [4, 64]: local {powerlaw_slope(local, 4, 64):.3f}, BA {powerlaw_slope(ba, 4, 64):.3f}")
