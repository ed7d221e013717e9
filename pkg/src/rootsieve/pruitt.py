"""Number theory on the Pruitt family: zero sets, multiplicities, and the
step map read as a sieve.

The zeros of f_k on I_k are the integers divisible by one of the first k
primes, and the multiplicity of such a zero j is the number of those primes
dividing j (each sine factor contributes a simple zero).
"""
from __future__ import annotations

from dataclasses import dataclass

from .funcmodel import PRIMES, check_pruitt_k, prime_divisor_count, pruitt_interval
from .quasistep import RootSet, pruitt_step_map

MAX_K = 10


def _check(k):
    check_pruitt_k(k, MAX_K)


def _integers_in(k: int) -> range:
    iv = pruitt_interval(k)
    return range(int(iv.lo) + 1, int(iv.hi) + 1)


@dataclass(frozen=True)
class MultiplicityTable:
    k: int
    entries: tuple  # ((j, m), ...) in increasing j

    def as_dict(self) -> dict:
        return dict(self.entries)

    def with_multiplicity(self, m: int) -> list[int]:
        return [j for j, mj in self.entries if mj == m]

    @property
    def max_multiplicity(self) -> int:
        return max(m for _, m in self.entries)


def classify_multiplicity(k: int) -> MultiplicityTable:
    _check(k)
    entries = []
    for j in _integers_in(k):
        m = prime_divisor_count(k, j)
        if m:
            entries.append((j, m))
    return MultiplicityTable(k, tuple(entries))


def zero_set(k: int) -> RootSet:
    """Integer zeros of f_k in I_k: the first k primes and their multiples."""
    _check(k)
    return RootSet(tuple(j for j, _ in classify_multiplicity(k).entries))


def sieve_primes(k: int) -> list[int]:
    """Primes in (p_k, p_k^2], read off as the integers where the step map is 0."""
    _check(k)
    p = PRIMES[k - 1]
    return [j for j in range(p + 1, p * p + 1) if pruitt_step_map(k, j) == 0]


def to_dict(k: int, full: bool = True) -> dict:
    """JSON-ready summary: primes, and optionally zeros and multiplicities."""
    out = {"k": k, "primes": sieve_primes(k)}
    if full:
        table = classify_multiplicity(k)
        out["zeros"] = [j for j, _ in table.entries]
        out["multiplicities"] = {str(j): m for j, m in table.entries}
    return out
