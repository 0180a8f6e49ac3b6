# Colon ideals (I^{s+1} : M) and the graph that describes them.
#
#   python3 demos/02_colon_ideals.py

# %%
from wreg import Monomial, colon, edge_ideal, polarize, power, whiskered_cycle
from wreg.even_connection import colon_graph_all_factorizations, is_even_connected
from wreg.monomial_algebra import edge_factorizations

g = whiskered_cycle(3)
i = edge_ideal(g)
m = Monomial.parse("x1*x2", g.labels)

# %% Direct computation: a square shows up because the cycle is odd
c = colon(power(i, 2), m)
print("(I^2 : x1x2) =", c)

# %% The same generators from walks.  x3 is joined to itself by x3 - x1 = x2 - x3
f = edge_factorizations(m, g, 1)[0]
w = is_even_connected(g, f, g.index("x3"), g.index("x3"))
print(w.render(g))
h, squares = colon_graph_all_factorizations(g, m, 1)
print("new edges:", sorted(set(h.edges()) - set(g.edges())))
print("squares:", [g.labels[k] for k in squares])

# %% Polarizing turns x3^2 into x3*y3_1, a whisker on the new graph
print(polarize(c))

# %% Even cycles give no squares
g4 = whiskered_cycle(4)
i4 = power(edge_ideal(g4), 2)
for gen in i4.monomials()[:5]:
    print(gen, "->", colon(power(edge_ideal(g4), 3), gen))
