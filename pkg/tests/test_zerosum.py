import pytest

from antimagic.prng import Lcg
from antimagic.zerosum import check_partition, zero_sum_partition

from helpers import random_composition


def test_modulus_rule_single_block():
    # q = n+1 for even n, q = n for odd n: the whole set {1..n} sums to
    # n(n+1)/2, which is divisible by q in both cases.
    for n in range(2, 11):
        part = zero_sum_partition(n, (n,))
        check_partition(part)
        q = n + 1 if n % 2 == 0 else n
        assert sum(part.blocks[0]) % q == 0


def test_frozen_even_case():
    part = zero_sum_partition(12, (4, 4, 4))
    check_partition(part)
    assert part.blocks == (
        frozenset({1, 2, 11, 12}),
        frozenset({3, 4, 9, 10}),
        frozenset({5, 6, 7, 8}),
    )


def test_frozen_odd_case():
    part = zero_sum_partition(15, (5, 4, 6))
    check_partition(part)
    assert part.blocks == (
        frozenset({1, 2, 13, 14, 15}),
        frozenset({3, 4, 11, 12}),
        frozenset({5, 6, 7, 8, 9, 10}),
    )


def test_blocks_partition_ground_set():
    part = zero_sum_partition(20, (3, 3, 5, 9))
    seen = set()
    for b in part.blocks:
        assert not (seen & b)
        seen |= b
    assert seen == set(range(1, 21))


def test_many_odd_blocks():
    # Stacked odd block sizes force the index-triple machinery, including
    # the regime where the mirror-pair system has no solution.
    for sizes in [(3,) * 6, (3, 3, 3, 5, 5), (5, 5, 5, 3, 3, 3, 3)]:
        n = sum(sizes)
        check_partition(zero_sum_partition(n, sizes))


def test_rejects_bad_sizes():
    with pytest.raises(ValueError):
        zero_sum_partition(6, (2, 3))  # does not sum to n
    with pytest.raises(ValueError):
        zero_sum_partition(5, (1, 4))  # part below 2


def test_random_compositions():
    rng = Lcg(11)
    for _ in range(300):
        sizes = random_composition(rng, 60)
        check_partition(zero_sum_partition(sum(sizes), sizes))


def test_deterministic():
    a = zero_sum_partition(31, (3, 3, 3, 3, 3, 4, 4, 4, 4))
    b = zero_sum_partition(31, (3, 3, 3, 3, 3, 4, 4, 4, 4))
    assert a.blocks == b.blocks
