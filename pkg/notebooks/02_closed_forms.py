# %% [markdown]
# # Closed forms against the engine
#
# Cycles, complete bipartite graphs, windmills and trees all have exact
# formulas. We compare a few parameter values directly.

# %%
from graphstress import (
    complete,
    complete_bipartite,
    corona,
    corona_hub_stress,
    cycle,
    path,
    predict_complete_bipartite,
    predict_corona_hub,
    predict_cycle,
    predict_tree_vertex,
    predict_windmill_center,
    random_tree,
    stress_profile,
    windmill,
)

for n in (5, 6, 9, 10):
    print(f"C{n}: engine {stress_profile(cycle(n)).stress[0]}, formula {predict_cycle(n)}")

print("K_{3,5} side A:", stress_profile(complete_bipartite(3, 5)).stress[0], predict_complete_bipartite(3, 5, "A"))
print("Wd(4,3) centre:", stress_profile(windmill(4, 3)).stress[0], predict_windmill_center(4, 3))

t = random_tree(12, seed=7)
print("tree:", list(stress_profile(t).stress))
print("     ", [predict_tree_vertex(t, v) for v in range(t.n)])

# %% [markdown]
# ## Corona products K_m o G
#
# The published hub formula `m n (m-1)(n+1)/2` only agrees with the engine
# for m = 2 and complete G. The exact count is `n (m-1)(n+1)` plus the number
# of non-adjacent pairs in G.

# %%
for m in (2, 3, 4):
    for name, g in [("K1", complete(1)), ("P3", path(3)), ("K3", complete(3))]:
        engine = stress_profile(corona(complete(m), g)).stress[0]
        print(f"K{m} o {name}: engine {engine:3d}  published {predict_corona_hub(m, g.n):3d}  exact {corona_hub_stress(m, g):3d}")
