# %% [markdown]
# # Lines in small graphs
#
# A line of a connected graph is generated by a pair of vertices: it holds the
# pair plus every vertex that lies on a shortest path through the pair, in any
# of the three possible orders.  This walk-through counts lines on a few
# familiar graphs.

# %%
from graphlines import build_graph, distances, line, all_lines, has_universal_line, bridge_count


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


path4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
d = distances(path4)
print("P4 line(0,1):", line(d, 0, 1).vertices())
print("P4 line(0,3):", line(d, 0, 3).vertices())
print("P4 has", len(all_lines(d)), "line(s)")

# %% [markdown]
# Every line of the path is the whole vertex set, so the path has a single,
# universal line.  Cycles behave very differently.

# %%
for n in range(4, 10):
    d = distances(cycle(n))
    print(f"C{n}: {len(all_lines(d)):3d} lines, universal={has_universal_line(d)}, bridges={bridge_count(cycle(n))}")

# %% [markdown]
# The five-cycle has ten lines, two per vertex, and none of them is universal.

# %%
d = distances(cycle(5))
for members in sorted(sorted(line(d, x, y).vertices()) for x in range(5) for y in range(x + 1, 5)):
    print(members)
