# %% [markdown]
# # Why the forbidden pairs matter
#
# Two families show the bounds cannot be stretched to larger classes. Joins of
# 5-cycles keep HVN and K5-e but break ω + 1. The Grötzsch graph keeps the
# Chair and breaks 3ω/2.

# %%
from chibound import chromatic_number, clique_number, witness_report
from chibound.witnesses import c5_join

for m in (1, 2, 3):
    g = c5_join(m)
    print(f"m={m}: n={g.n} ω={clique_number(g)} χ={chromatic_number(g)}")

# %% [markdown]
# The reports recompute every claimed value and list any mismatch.

# %%
for name in ("c5_join_2", "c5_join_3", "grotzsch"):
    rep = witness_report(name)
    print(rep.summary())
    present = [k for k, v in rep.pattern_presence.items() if v]
    print("   induced:", ", ".join(present))
