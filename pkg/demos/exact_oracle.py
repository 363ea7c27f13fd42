"""Check the simulator against exact enumeration on tiny graphs.

Starting from a single edge, every possible three-step history of the
local model is enumerated with exact probabilities and isomorphic
outcomes are merged. A chi-square test then compares the simulated
outcome frequencies with those probabilities. A simulator that picks the
creator uniformly instead of by degree is rejected.

    python3 demos/exact_oracle.py
"""

from mbagrow import GrowthConfig
from mbagrow.oracle import compare_to_montecarlo, enumerate_local

dist = enumerate_local(m0=2, m=2, steps=3)
print(f"{len(dist.probabilities)} distinct graphs after 3 steps, total probability {dist.total_probability()}")
for sig, p in sorted(dist.probabilities.items(), key=lambda kv: -kv[1]):
    print(f"  p = {str(p):>6}  degrees {sorted(dist.representatives[sig].degrees().tolist(), reverse=True)}")

fit = compare_to_montecarlo(dist, GrowthConfig(m=2, t_final=5, seed=11), runs=5000)
print(f"\nchi-square against 5000 simulated runs: p = {fit.p_value:.3f}, passes at 0.01: {fit.passed(0.01)}")
