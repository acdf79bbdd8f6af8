"""Independent brute-force oracles for the test suite.

Everything here is built from first principles: the semigroup is driven
only by its defining relation (index k+n collapses to index k), subset
sums use plain set unions, and smooth structure is checked against the
literal definition (subsequence sums form a full initial segment of the
generated subgroup).  No bitmask or prefix shortcuts.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd


def wrap_index(k: int, n: int, m: int) -> int:
    while m > k + n - 1:
        m -= n
    return m


def add_oracle(k: int, n: int, i: int, j: int) -> int:
    return wrap_index(k, n, i + j)


def idempotent_oracle(k: int, n: int) -> int:
    found = [e for e in range(1, k + n) if add_oracle(k, n, e, e) == e]
    assert len(found) == 1
    return found[0]


def subset_sums(values) -> set[int]:
    """All nonempty submultiset integer sums."""
    sums = {0}
    for v in values:
        sums |= {s + v for s in sums}
    sums.discard(0)
    return sums


def semigroup_subset_sums(k: int, n: int, indices) -> set[int]:
    return {wrap_index(k, n, s) for s in subset_sums(indices)}


def idempotent_sum_free_oracle(k: int, n: int, indices) -> bool:
    return idempotent_oracle(k, n) not in semigroup_subset_sums(k, n, indices)


def minimal_idempotent_sum_oracle(k: int, n: int, indices) -> bool:
    e = idempotent_oracle(k, n)
    vals = list(indices)
    if not vals or wrap_index(k, n, sum(vals)) != e:
        return False
    return all(idempotent_sum_free_oracle(k, n, vals[:i] + vals[i + 1:])
               for i in range(len(vals)))


def one_smooth_oracle(values) -> bool:
    if not values:
        return False
    return subset_sums(values) == set(range(1, sum(values) + 1))


def residue_subset_sums(n: int, residues) -> set[int]:
    seen: set[int] = set()
    for r in residues:
        seen = seen | {(s + r) % n for s in seen} | {r % n}
    return seen


def zero_sum_free_oracle(n: int, residues) -> bool:
    return 0 not in residue_subset_sums(n, residues)


def minimal_zero_sum_oracle(n: int, residues) -> bool:
    vals = list(residues)
    if not vals or sum(vals) % n != 0:
        return False
    return all(zero_sum_free_oracle(n, vals[:i] + vals[i + 1:])
               for i in range(len(vals)))


def units(n: int) -> list[int]:
    return [g for g in range(1, n) if gcd(g, n) == 1]


def g_smooth_oracle(n: int, residues, g: int, zero_sum: bool) -> bool:
    """Literal definition: the decomposition by g sums to n (zero-sum) or
    below (strict), and the subsequence sums are exactly g, 2g, ..., Sg."""
    vals = list(residues)
    if not vals:
        return False
    inv = pow(g, -1, n)
    total = sum(((r * inv) % n) or n for r in vals)
    if (total != n) if zero_sum else (total >= n):
        return False
    want = {(j * g) % n for j in range(1, total + 1)}
    return residue_subset_sums(n, vals) == want


def smooth_for_some_unit_oracle(n: int, residues, zero_sum: bool) -> bool:
    return any(g_smooth_oracle(n, residues, g, zero_sum) for g in units(n))


def sequence_index_oracle(n: int, residues) -> Fraction | None:
    vals = list(residues)
    best = None
    for g in units(n):
        inv = pow(g, -1, n)
        total = sum(((r * inv) % n) or n for r in vals)
        value = Fraction(total, n)
        if best is None or value < best:
            best = value
    return best


def all_multisets(universe: int, max_len: int, min_len: int = 1):
    for length in range(min_len, max_len + 1):
        yield from combinations_with_replacement(range(1, universe + 1), length)
