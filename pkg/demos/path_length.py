"""Average path length grows like ln t.

The local model copies edges from a creator's neighborhood, which makes
it a little longer-ranged than BA but still small-world. The dashed
reference is ln t / ln(2m), from treating the graph as a tree of
branching equal to the mean degree.

    python3 demos/path_length.py
"""

from mbagrow import GrowthConfig, Model, average_path_length, grow_snapshots, predicted_apl_line

SIZES = (250, 500, 1000, 2000, 4000)


def lengths(model):
    cfg = GrowthConfig(m=2, t_final=SIZES[-1], seed=3, model=model)
    return grow_snapshots(cfg, SIZES, lambda g: average_path_length(g, "exact").value)


local, ba = lengths(Model.LOCAL), lengths(Model.BA)
print(f"{'t':>6} {'L_local':>8} {'L_ba':>8} {'ln t/ln 4':>10}")
for t, a, b in zip(SIZES, local, ba):
    print(f"{t:>6} {a:>8.3f} {b:>8.3f} {predicted_apl_line(t, 2):>10.3f}")
