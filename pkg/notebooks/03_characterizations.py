# %% [markdown]
# # Structural characterisations
#
# `classify` computes stress-side and structure-side predicates separately
# and lists any disagreement in `findings`.

# %%
from graphstress import (
    block_cut_decomposition,
    classify,
    cocktail_party,
    cycle,
    detect_srg,
    named,
    predict_srg,
    star,
    stress_profile,
    windmill,
)

for g in (cycle(4), cycle(5), named("FIG2_2SR"), named("FIG3_PRISM"), named("FIG4_OCTAHEDRON"), star(4)):
    r = classify(g)
    print(r.recognized_family.value, r.stress_regular_k, r.findings)

# %% [markdown]
# A windmill has a single cut vertex whose blocks are all cliques, and it is
# the only vertex with positive stress.

# %%
w = windmill(3, 3)
print(block_cut_decomposition(w))
print(stress_profile(w).stress, classify(w).one_stress_center)

# %% [markdown]
# Strongly regular graphs are stress regular with stress k(k-1-lambda)/2.

# %%
for g in (named("PETERSEN"), cocktail_party(3), cocktail_party(5)):
    params = detect_srg(g)
    print(params, predict_srg(params), set(stress_profile(g).stress))
