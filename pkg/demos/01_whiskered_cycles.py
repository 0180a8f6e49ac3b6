# Regularity of powers of whiskered cycles, computed and compared with
# 2s + ceil((n-1)/2) - 1.
#
#   python3 demos/01_whiskered_cycles.py

# %%
import time

from wreg import edge_ideal, induced_matching_number, power, regularity, whiskered_cycle

# %% The graph and its ideal
g = whiskered_cycle(5)
print(g)
print(edge_ideal(g))

# %% s = 1: the induced matching number already tells the story
for n in range(3, 8):
    w = whiskered_cycle(n)
    print(n, "indmatch", induced_matching_number(w), "reg", regularity(edge_ideal(w)))

# %% Higher powers.  W(C5)^2 takes a few seconds.
for n, s in [(3, 2), (4, 2), (3, 3), (5, 2)]:
    t0 = time.time()
    i = power(edge_ideal(whiskered_cycle(n)), s)
    r = regularity(i)
    expect = 2 * s + -(-(n - 1) // 2) - 1
    print(f"n={n} s={s}: {len(i.gens)} generators, reg {r}, formula {expect}  [{time.time() - t0:.1f}s]")
