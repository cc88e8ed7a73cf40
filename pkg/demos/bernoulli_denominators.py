"""
Bernoulli denominators and Toda sets
====================================

The denominator of B_2m is the product of the primes p with (p - 1) | 2m.
With 2m = 4n the primes p >= 5 in that product all have (p - 1) | 4n,
which is how t(p) = 2 ties to D_4p = 30.
"""

from todaprimes.bernoulli import denominator, min_index, check_t2_iff_d30, check_family

for two_m in (12, 20, 60, 220):
    rec = denominator(two_m)
    print(f"D_{two_m} = {rec.denominator}  support {rec.support}")

###############################################################################
# F(d): the first index at which a given denominator appears.

for d in (6, 30, 42, 2730):
    print(f"F({d}) = {min_index(d, 10_000)}")

###############################################################################
# For primes p >= 7, t(p) = 2 exactly when D_4p = 30.

print("violations up to 10^4:", check_t2_iff_d30(10_000))

###############################################################################
# Along 3m the set {5, 7, 13} keeps showing up in T(3m) whenever D_12m = 2730.

print("family a = 3, m <= 200:", check_family(3, 2730, {5, 7, 13}, 200))
