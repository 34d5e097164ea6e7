"""Zero-sum partitions of {1..n}.

Splits {1..n} into blocks of prescribed sizes >= 2 whose sums vanish
modulo q, where q = n+1 for even n and q = n for odd n.

Construction.  The values group into complement pairs {i, q-i}, each
summing to 0 mod q (for odd n the leftover value n is itself 0 mod q).
Even-size blocks are unions of whole pairs.  Odd-size blocks each need one
zero-sum triple besides whole pairs; for odd n one odd block instead hosts
the value n.  The remaining 2k odd blocks draw their triples from k index
relations x + y = z over pair indices: each relation yields the two triples
{x, y, q-z} and {q-x, q-y, z}, consuming the pairs x, y, z completely.
Disjoint relations exist inside the available index range except when the
range is exactly [1..3k] with k = 2,3 (mod 4) (the classical Skolem
obstruction); those cases use an asymmetric system of k "two low + one
high" and k "one low + two high" triples found by a small backtracking
search.  Every valid input is therefore constructible, matching the
existence guarantee.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class ZeroSumPartition:
    n: int
    sizes: tuple[int, ...]
    blocks: tuple[frozenset[int], ...]
    modulus: int


def _modulus(n: int) -> int:
    return n + 1 if n % 2 == 0 else n


def check_partition(p: ZeroSumPartition) -> bool:
    """True iff the partition satisfies every invariant of its type."""
    if p.n < 2 or p.modulus != _modulus(p.n):
        return False
    if any(r < 2 for r in p.sizes) or sum(p.sizes) != p.n:
        return False
    if len(p.blocks) != len(p.sizes):
        return False
    union: set[int] = set()
    for block, r in zip(p.blocks, p.sizes):
        if len(block) != r or block & union:
            return False
        if sum(block) % p.modulus != 0:
            return False
        union |= block
    return union == set(range(1, p.n + 1))


def _disjoint_sum_triples(k: int, P: int) -> list[tuple[int, int, int]] | None:
    """k disjoint index triples (x, y, z) in [1..P] with x < y and x + y = z."""
    used: set[int] = set()
    out: list[tuple[int, int, int]] = []

    def rec(j: int) -> bool:
        if j == k:
            return True
        x = next(i for i in range(1, P + 1) if i not in used)
        used.add(x)
        for y in range(P - x, x, -1):
            z = x + y
            if y in used or z in used:
                continue
            used.add(y)
            used.add(z)
            out.append((x, y, z))
            if rec(j + 1):
                return True
            out.pop()
            used.discard(y)
            used.discard(z)
        used.discard(x)
        return False

    return out if rec(0) else None


def _asymmetric_system(
    k: int, P: int
) -> tuple[list[tuple[int, int, int]], list[tuple[int, int, int]]] | None:
    """k A-relations (x, y, z=x+y) and k B-relations (x; y, z with y+z=x).

    A consumes values x, y and q-z; B consumes q-y, q-z and x.  Each used
    index must appear exactly once in a "low" role and once in a "high"
    role, so unused indices remain whole complement pairs.
    """
    low: set[int] = set()
    high: set[int] = set()
    A: list[tuple[int, int, int]] = []
    B: list[tuple[int, int, int]] = []

    def solve_b() -> bool:
        if len(B) == k:
            return low == high
        need = sorted(high - low, reverse=True)
        if not need:
            return False
        x = need[0]
        for y in range(x - 1, (x - 1) // 2, -1):
            z = x - y
            if z == y or y in high or z in high:
                continue
            high.add(y)
            high.add(z)
            low.add(x)
            B.append((x, y, z))
            if solve_b():
                return True
            B.pop()
            high.discard(y)
            high.discard(z)
            low.discard(x)
        return False

    def solve_a(j: int, minx: int) -> bool:
        if j == k:
            return solve_b()
        for x in range(minx, P + 1):
            if x in low:
                continue
            for y in range(P - x, x, -1):
                z = x + y
                if y in low or z in high:
                    continue
                low.add(x)
                low.add(y)
                high.add(z)
                A.append((x, y, z))
                if solve_a(j + 1, x + 1):
                    return True
                A.pop()
                low.discard(x)
                low.discard(y)
                high.discard(z)
        return False

    return (A, B) if solve_a(0, 1) else None


def zero_sum_partition(n: int, sizes: Sequence[int]) -> ZeroSumPartition:
    """Deterministic zero-sum partition of {1..n} with the given block sizes.

    Raises ValueError when a size is below 2 or the sizes do not sum to n.
    """
    sizes = tuple(int(r) for r in sizes)
    if n < 2:
        raise ValueError("n must be at least 2")
    if any(r < 2 for r in sizes):
        raise ValueError("every block size must be at least 2")
    if sum(sizes) != n:
        raise ValueError(f"sizes must sum to n={n}, got {sum(sizes)}")
    q = _modulus(n)
    P = n // 2 if n % 2 == 0 else (n - 1) // 2  # complement pairs {i, q-i}

    odd_blocks = [i for i, r in enumerate(sizes) if r % 2 == 1]
    singleton_host = None
    if n % 2 == 1:
        # The value n is 0 mod q; the first odd block hosts it.
        singleton_host = odd_blocks.pop(0)
    k2 = len(odd_blocks)  # always even here
    assert k2 % 2 == 0
    k = k2 // 2

    triples: list[frozenset[int]] = []
    used_indices: set[int] = set()
    if k > 0:
        mirror = None
        if not (P == 3 * k and k % 4 in (2, 3)):
            mirror = _disjoint_sum_triples(k, P)
        if mirror is not None:
            for x, y, z in mirror:
                triples.append(frozenset({x, y, q - z}))
                triples.append(frozenset({q - x, q - y, z}))
                used_indices.update((x, y, z))
        else:
            system = _asymmetric_system(k, P)
            if system is None:
                raise AssertionError(
                    f"no zero-sum triple system for n={n}, sizes={sizes}; "
                    "this contradicts the existence guarantee"
                )
            A, B = system
            for x, y, z in A:
                triples.append(frozenset({x, y, q - z}))
                used_indices.update((x, y, z))
            for x, y, z in B:
                triples.append(frozenset({q - y, q - z, x}))
                used_indices.update((x, y, z))

    free_pairs = [i for i in range(1, P + 1) if i not in used_indices]
    pair_iter = iter(free_pairs)
    triple_iter = iter(triples)

    blocks: list[frozenset[int]] = []
    for i, r in enumerate(sizes):
        block: set[int] = set()
        if i == singleton_host:
            block.add(n)
            npairs = (r - 1) // 2
        elif r % 2 == 1:
            block |= next(triple_iter)
            npairs = (r - 3) // 2
        else:
            npairs = r // 2
        for _ in range(npairs):
            idx = next(pair_iter)
            block.update((idx, q - idx))
        blocks.append(frozenset(block))
    return ZeroSumPartition(n, sizes, tuple(blocks), q)
