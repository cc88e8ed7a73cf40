"""
Germane primes
==============

A prime r = p(q - 1) + 1 is germane to the width p with length q.
This walks through the width/length grid and the distribution of w(r).
"""

import numpy as np

from todaprimes.germane import decompositions, germane_grid, level_sets, width_ratios

print(decompositions(31))

###############################################################################
# The grid of hits over the first 50 widths and 50 lengths.

cells = germane_grid(50, 50)
grid = np.zeros((50, 50), dtype=bool)
for c in cells:
    grid[c.width_index - 1, c.length_index - 1] = True
for row in grid[:12]:
    print("".join("#" if x else "." for x in row))

# only width 2 has length 2; length 3 picks out the Sophie Germain primes
print("length 2 widths:", [c.width for c in cells if c.length == 2])
print("length 3 widths:", [c.width for c in cells if c.length == 3])

###############################################################################
# Share of lengths that hit, per width, as exact fractions.

for rec in width_ratios(8, 1000):
    print(rec.p, rec.ratio, float(rec.ratio))

###############################################################################
# How many widths a prime r admits, over the first 10^4 primes.

for rec in level_sets(10_000):
    print(f"w = {rec.w}: {rec.count}")
