# %% [markdown]
# # The neighbourhood lemma on critical Chair-free graphs
#
# Remove a vertex u from a vertex-critical graph and colour the rest with
# χ - 1 colours. Neighbours of u with a colour nobody else in N(u) has form
# the set R; the other colours repeat. Among all choices of u and colouring,
# take those with the most unique colours, then the flattest repeats. For
# every such choice the two clauses below must hold.

# %%
from chibound.graph import complete, cycle, join
from chibound.graph6 import from_graph6
from chibound.lemma import (
    check_clause_a,
    check_clause_b,
    critical_chair_free_stream,
    lemma_select,
    run_lemma,
)

w5 = join(cycle(5), complete(1))
best = lemma_select(w5)
print(len(best), "optimal contexts, score", best[0].score)
ctx = best[0]
print("u =", ctx.u, "colouring", ctx.coloring, "R =", ctx.unique)

# %% [markdown]
# On one 7-vertex graph the optimum keeps a repeated colour, so clause B has
# something to check.

# %%
g = from_graph6("FUzro")
for ctx in lemma_select(g):
    print(ctx.u, ctx.unique, ctx.repeat_colors, ctx.counts,
          check_clause_a(g, ctx), check_clause_b(g, ctx, "all"))

# %% [markdown]
# The exhaustive run over seven vertices, under both readings of the
# repeat-colour order.

# %%
graphs = list(critical_chair_free_stream(7))
for ordering in ("sorted", "all"):
    results = run_lemma(graphs, ordering)
    print(ordering, len(results), "graphs,", sum(not r.ok for r in results), "violations")
