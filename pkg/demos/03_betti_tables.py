# Betti tables through Hochster's formula, and what the field does.
#
#   python3 demos/03_betti_tables.py

# %%
import numpy as np

from wreg import GF2, GF3, betti_table, cycle, edge_ideal, power, whiskered_cycle
from wreg.homology_engine import SimplicialComplex, reduced_homology_dims, stanley_reisner

# %% A pentagon
t = betti_table(edge_ideal(cycle(5)))
print(t.to_csv())
print("reg", t.regularity)

# %% Table as a matrix: rows j - i starting at the lowest one, columns i
def grid(table):
    low = min(j - i for i, j in table.entries)
    rows = max(j - i for i, j in table.entries) - low + 1
    cols = max(i for i, _ in table.entries) + 1
    a = np.zeros((rows, cols), dtype=int)
    for (i, j), b in table.entries.items():
        a[j - i - low, i] = b
    return a

print(grid(betti_table(edge_ideal(whiskered_cycle(4)))))
# the square of W(C3) happens to be linear: one row
print(grid(betti_table(power(edge_ideal(whiskered_cycle(3)), 2))))

# %% Independence complex of C5 is again a pentagon, a circle
delta = stanley_reisner(edge_ideal(cycle(5)))
print(delta.f_vector(), reduced_homology_dims(delta))

# %% The six-vertex projective plane: homology depends on the field
facets = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
          (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
nonfaces = [(a, b, c) for a in range(6) for b in range(a + 1, 6) for c in range(b + 1, 6)
            if (a, b, c) not in {tuple(sorted(f)) for f in facets}]
rp2 = SimplicialComplex.from_sets(range(6), nonfaces)
print("GF(2):", reduced_homology_dims(rp2, GF2), " GF(3):", reduced_homology_dims(rp2, GF3))
