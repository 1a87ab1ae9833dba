# %% [markdown]
# # Diameter-three graphs with fewer lines than vertices
#
# The fourteen exceptional graphs come from two constructions plus four small
# five-vertex graphs.  The constructions join a clique to smaller cliques (or
# to a second clique) by a matching.

# %%
from math import comb

from graphlines import MSpec, build_M, build_Mprime, family_F, distances, LineTable
from graphlines.families import m_specs

for m in family_F():
    t = LineTable(distances(m.graph))
    print(f"{m.name:15s} n={m.graph.n} lines={t.count} universal={t.has_universal}")

# %% [markdown]
# Both constructions have exactly C(p,2)+1 lines once p >= 3 (and at least two
# attached cliques for the first).  Since the vertex count grows with the
# attached cliques, only small p leave the line count below n.

# %%
for p in range(3, 7):
    below = [s.name for s in m_specs(p) if LineTable(distances(build_M(s))).count < s.order]
    print(f"p={p}: C(p,2)+1={comb(p, 2) + 1:3d}  below n: {below or '-'}")
    t = LineTable(distances(build_Mprime(p)))
    print(f"      M'_{2 * p}: lines={t.count} n={2 * p}")

# %% [markdown]
# Each matching edge of a construction generates the whole vertex set, so every
# member has a universal line.

# %%
from graphlines import line

g = build_M(MSpec(4, (2, 2)))
d = distances(g)
print([line(d, j, 4 + j).vertices() == list(range(8)) for j in range(4)])
