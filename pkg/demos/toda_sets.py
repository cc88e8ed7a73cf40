"""
Toda primes of small integers
=============================

T(n) collects the odd primes p with (p - 1) | 4n and p coprime to the
cofactor 4n / (p - 1).  They are found by walking the divisors of 2n.
"""

from todaprimes import toda_primes, toda_primes_oracle, toda_count

# the first few sets, with the cofactor next to each prime
for n in range(1, 11):
    ts = toda_primes(n)
    print(f"T({n}) = {ts}   cofactors {[ts.cofactor(p) for p in ts]}")

###############################################################################
# The brute-force oracle scans every prime up to 4n + 1 and agrees.

assert all(toda_primes(n).as_set() == toda_primes_oracle(n).as_set() for n in range(1, 500))

###############################################################################
# How t(n) grows: multiples of 3 and highly composite n collect many primes.

import numpy as np
from todaprimes.toda import toda_count_range

counts = np.array(toda_count_range(1, 10_000))
print("mean t(n), n <= 10^4:", counts.mean().round(3))
print("n with the largest t:", int(counts.argmax()) + 1, "t =", counts.max())
print("t(1365) =", toda_count(1365))
