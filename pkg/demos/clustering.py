"""Clustering in the local model.

With m = 2 every node ends up with exactly k - 1 edges among its
neighbors, so C(k) = 2/k holds node by node rather than on average. The
global coefficient then converges to about 0.739 with a 1/t correction.
For m = 3 the spectrum is no longer exact and C drops to about 0.62.

    python3 demos/clustering.py
"""

from mbagrow import GrowthConfig, clustering_spectrum, global_clustering, grow, predicted_global_clustering

g = grow(GrowthConfig(m=2, t_final=5000, seed=7))
spec = clustering_spectrum(g)
print("m = 2, one realization of 5000 nodes")
print(f"{'k':>4} {'C(k)':>8} {'2/k':>8} {'nodes':>6}")
for k, c, n in list(spec.items())[:8]:
    print(f"{k:>4} {c:>8.5f} {2 / k:>8.5f} {n:>6}")

print()
print(f"C measured {global_clustering(g):.5f}, limit {predicted_global_clustering():.5f}")

g3 = grow(GrowthConfig(m=3, t_final=5000, seed=7))
print(f"m = 3: C = {global_clustering(g3):.5f}")
