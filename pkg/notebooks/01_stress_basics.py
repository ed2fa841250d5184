# %% [markdown]
# # Vertex stress from scratch
#
# The stress of a vertex counts the geodesics that pass *through* it, i.e.
# have it as an interior vertex. We start with a path and a cycle.

# %%
from graphstress import (
    census,
    cycle,
    enumerate_geodesics,
    geodesic_histogram,
    named,
    path,
    stress_oracle,
    stress_profile,
    stress_profile_accumulated,
    total_stress_from_histogram,
)

print(stress_profile(path(5)))
print(stress_profile(cycle(6)))

# %% [markdown]
# Every geodesic of C4, listed explicitly. The two antipodal pairs each have
# two geodesics, so each vertex sits inside exactly one of them.

# %%
for p in enumerate_geodesics(cycle(4)):
    print(p)

# %% [markdown]
# ## A 3-regular graph that is not stress regular
#
# Two copies of K4 minus an edge, joined at one endpoint of each missing edge.

# %%
fig1 = named("FIG1_REG3")
profile = stress_profile(fig1)
print("degrees:", fig1.degrees())
print("stress: ", list(profile.stress))

# %% [markdown]
# Three independent routes agree: the ordered-pair sum, the per-source
# accumulation, and brute-force enumeration.

# %%
paths = enumerate_geodesics(fig1)
assert stress_profile_accumulated(fig1) == profile
assert [stress_oracle(fig1, v, paths) for v in range(fig1.n)] == list(profile.stress)

# %% [markdown]
# Total stress equals sum of (length - 1) times the number of geodesics of
# that length.

# %%
hist = geodesic_histogram(census(fig1))
print("geodesics by length:", {i: hist[i] for i in range(1, hist.max_length + 1)})
print(profile.total, total_stress_from_histogram(hist))
