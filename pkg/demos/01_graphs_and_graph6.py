# %% [markdown]
# # Graphs, patterns and graph6
#
# Graphs are immutable bitset adjacency rows on at most 32 vertices. This
# walk-through builds a few of them, looks for forbidden induced patterns, and
# round-trips them through graph6.

# %%
from chibound import Pattern, find_induced, from_graph6, to_graph6
from chibound.graph import complement, cycle, join, make, mycielski

c5 = cycle(5)
print(c5.n, c5.num_edges(), c5.degrees())

# %% [markdown]
# graph6 packs the upper triangle column by column, six bits per byte.

# %%
code = to_graph6(c5)
print(code)
assert from_graph6(code) == c5

# %% [markdown]
# The C5 is self-complementary, so its complement decodes to an isomorphic
# graph with a different labelling.

# %%
print(to_graph6(complement(c5)))

# %% [markdown]
# ## Induced patterns
#
# Each catalog pattern carries its own small graph. `find_induced` returns the
# lexicographically least embedding as a tuple of host vertices, or `None`.

# %%
for p in Pattern:
    print(f"{p.display_name:8} n={p.graph.n} m={p.graph.num_edges()}")

# %%
grotzsch = mycielski(c5)
print("Chair in Grötzsch:", find_induced(grotzsch, Pattern.CHAIR))
print("Chair in C5:", find_induced(c5, Pattern.CHAIR))

# %% [markdown]
# The join of two 5-cycles holds both HVN and K5-e, yet has no induced
# P3 ∪ K1: every vertex outside a P3 sees at least one of its ends.

# %%
h = join(c5, c5)
print("HVN at", find_induced(h, Pattern.HVN))
print("K5-e at", find_induced(h, Pattern.K5_MINUS_E))
print("P3 u K1:", find_induced(h, Pattern.P3_UNION_K1))

# %% [markdown]
# Hand-made graphs use an edge list. The paw is P3 ∪ K1-free because its
# complement is exactly P3 ∪ K1.

# %%
paw = make(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
print(to_graph6(paw), find_induced(paw, Pattern.P3_UNION_K1))
print(find_induced(complement(paw), Pattern.P3_UNION_K1))
