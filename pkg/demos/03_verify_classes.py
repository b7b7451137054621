# %% [markdown]
# # Checking the χ-bounds of the class registry
#
# Each registry entry forbids two induced patterns and claims a linear bound
# on χ in terms of ω. Here we check all twelve over every graph on at most
# six vertices; the acceptance suite repeats this at eight.

# %%
from chibound import REGISTRY, survey, verify_class
from chibound.generate import graphs_up_to
from chibound.verify import verify_registry

for cls in REGISTRY:
    names = " + ".join(sorted(p.display_name for p in cls.forbidden))
    print(f"{cls.number:2d} {cls.id:12} free of {names:16} bound {cls.bound.value}")

# %% [markdown]
# `survey` computes ω, χ and pattern presence once per graph; membership in
# each class is then a set test.

# %%
facts = survey(6)
for cid, (checked, bad, tight) in verify_registry(facts).items():
    print(f"{cid:12} checked={checked:4d} violations={len(bad)} tight={len(tight)}")

# %% [markdown]
# `verify_class` works on any graph stream and returns per-graph records.
# The tight members below are the graphs whose χ equals the bound.

# %%
report = verify_class(REGISTRY[6], graphs_up_to(6))
print(report.summary())
for rec in report.tight_examples[:5]:
    print(rec)
