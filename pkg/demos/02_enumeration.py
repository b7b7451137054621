# %% [markdown]
# # Enumerating graphs up to isomorphism
#
# The generator grows graphs one vertex at a time and keeps a child only when
# the new vertex is the canonical one to delete, so each isomorphism class
# appears exactly once.

# %%
import time

from chibound import all_graphs, canonical_form, is_isomorphic
from chibound.graph import cycle

for n in range(1, 8):
    t = time.perf_counter()
    count = sum(1 for _ in all_graphs(n))
    print(f"n={n}: {count:5d} classes in {time.perf_counter() - t:.2f}s")

# %% [markdown]
# Canonical forms are graph6 strings of the canonically relabelled graph.
# Relabelling never changes them.

# %%
c5 = cycle(5)
shuffled = c5.relabel([3, 0, 4, 1, 2])
print(canonical_form(c5), canonical_form(shuffled), is_isomorphic(c5, shuffled))

# %% [markdown]
# Every 5-vertex class has a distinct canonical form, and C5 is among them.

# %%
five = list(all_graphs(5))
forms = {canonical_form(g) for g in five}
print(len(five), len(forms), canonical_form(c5) in forms)
