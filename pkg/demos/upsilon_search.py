"""
Searching for the smallest t among candidate products
=====================================================

Candidates are odd squarefree multiples of 3 built from one of 5, 7, 13,
adding one Toda prime of the running product at each step.  Upsilon(omega)
is the smallest t(n) over candidates with omega prime factors.
"""

import time

from todaprimes.search import upsilon, scan_min_toda

for omega in range(2, 7):
    start = time.perf_counter()
    res = upsilon(omega, prune=True)
    wall = time.perf_counter() - start
    first = res.argmin[0]
    print(f"Upsilon({omega}) = {res.min_t}  e.g. n = {first.n} = {'*'.join(map(str, first.primes))}  [{wall:.2f}s]")

###############################################################################
# Pruning never changes the answer, it only skips subtrees that cannot win.

assert upsilon(5).argmin == upsilon(5, prune=True).argmin

###############################################################################
# A plain scan over every n confirms t(n) >= 2 far past the candidates.

rep = scan_min_toda(1, 20_000, threshold=2)
print("min t on [1, 20000]:", rep.min_t, "at", rep.argmin[:5])
