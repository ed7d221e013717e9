"""
The Pruitt step map as a sieve
==============================

f_k(x) is the product of sin(pi x / p) over the first k primes.  Its zeros
on [1.5, p_k^2 + 1/3] are exactly the integers divisible by one of those
primes, so the integers where the step map returns 0 are the primes
between p_k and p_k^2.
"""

from rootsieve import classify_multiplicity, pruitt_step_map, sieve_primes, zero_set

# the step map rounds x to the closest integer and keeps it only if f_k
# vanishes there
for x in (6.4, 7.2, 24.9):
    print(f"step map of f_3 at {x}: {pruitt_step_map(3, x)}")

# zeros of f_3 and how far apart they are
z = zero_set(3)
print("zeros of f_3:", list(z))
print("resolution:", z.resolution)

# everything in (5, 25] that is not a zero is prime
print("primes from f_3:", sieve_primes(3))

# larger k reaches further
for k in range(4, 8):
    print(f"k={k}: {len(sieve_primes(k))} primes, the last being {sieve_primes(k)[-1]}")

# each sine factor contributes a simple zero, so the multiplicity of a zero
# counts the primes dividing it
table = classify_multiplicity(4)
for m in range(1, table.max_multiplicity + 1):
    print(f"multiplicity {m}:", table.with_multiplicity(m))
