"""End-to-end acceptance checks, one test per shipped guarantee."""

import itertools

from antimagic.alpha import antimagic_by_alpha
from antimagic.cli import main
from antimagic.euler import orient_and_label
from antimagic.generators import FamilySpec, generate
from antimagic.graph import (
    ArcLabeling,
    Graph,
    Orientation,
    center_vertices,
    is_antimagic,
    is_connected,
    vertex_sums,
)
from antimagic.matching import (
    MatchingInstance,
    construct_from_matching,
    find_saturating_matching,
)
from antimagic.oracle import oracle_antimagic_exists
from antimagic.prng import Lcg
from antimagic.xconstruct import WitnessConfig, construct_x_orientation
from antimagic.zerosum import check_partition, zero_sum_partition

from helpers import random_composition, random_graph
from repair_instances import REPAIR_INSTANCES


def test_euler_window_bounds():
    # 500 seeded graphs (n <= 40, m <= 200), three window offsets, both
    # labeling flavors; every vertex-sum must sit inside the advertised
    # per-vertex interval, exactly.
    rng = Lcg(2024)
    for _ in range(500):
        g = random_graph(rng, 40, 200)
        for p in (0, 17, g.m):
            for flavor in ("sigma1", "sigma2"):
                res = orient_and_label(g, p, flavor)
                res.labeling.validate()
                sums = vertex_sums(res.orientation, res.labeling).sums
                for v, s in enumerate(sums):
                    lo, hi = res.bounds[v]
                    assert lo <= s <= hi


def test_zero_sum_partition():
    # 500 random size-compositions with parts >= 2 over totals up to 60,
    # plus every single-block case n = 2..10 against the modulus rule.
    rng = Lcg(99)
    for _ in range(500):
        sizes = random_composition(rng, 60)
        check_partition(zero_sum_partition(sum(sizes), sizes))
    for n in range(2, 11):
        part = zero_sum_partition(n, (n,))
        check_partition(part)
        q = n + 1 if n % 2 == 0 else n
        assert sum(part.blocks[0]) % q == 0


def _matching_certificate(g, A):
    M = find_saturating_matching(g, A)
    assert M is not None
    o, l, trace = construct_from_matching(MatchingInstance(g, A, M))
    ok, clash = is_antimagic(o, l)
    assert ok, clash
    sums = vertex_sums(o, l).sums
    assert all(sums[v] > 0 for v in A)
    comp_sums = [sums[b] for b in trace.b_order]
    assert all(s < 0 for s in comp_sums)
    assert comp_sums == sorted(comp_sums, reverse=True)


def test_saturating_matching_construction():
    k33 = Graph(6, [(u, v) for u in range(3) for v in range(3, 6)])
    _matching_certificate(k33, {0, 1, 2})
    cube = Graph(8, sorted({tuple(sorted((x, x ^ (1 << b))))
                            for x in range(8) for b in range(3)}))
    _matching_certificate(cube, {0, 3, 5, 6})
    rng = Lcg(5)
    built = 0
    while built < 200:
        b = rng.randint(3, 5)
        a = rng.randint(b, 6)
        t = rng.randint(1, 60 // (a + b))
        left, right = b * t, a * t
        if a > left or b > right or left < 3:
            continue
        g = generate(FamilySpec(
            "biregular", {"a": a, "b": b, "left": left, "right": right},
            seed=built))
        # the larger side is the independent side A (degree b <= a there)
        A = set(range(left, left + right))
        _matching_certificate(g, A)
        built += 1


def test_radius_two_construction():
    rng = Lcg(77)
    for i in range(300):
        n = rng.randint(4, 50)
        g = generate(FamilySpec(
            "radius2-ball", {"n": n, "extra": rng.randint(0, 2 * n)}, seed=i))
        center = center_vertices(g)[0]
        o, l, trace = construct_x_orientation(g, WitnessConfig((center,)))
        ok, clash = is_antimagic(o, l)
        assert ok, (i, clash)


def test_repair_branch_coverage():
    # every post-construction repair branch must fire at least once and
    # still produce a verifier-accepted certificate
    seen = set()
    for tag, (n, edges, X, witnesses, shape) in REPAIR_INSTANCES.items():
        g = Graph(n, list(edges))
        o, l, trace = construct_x_orientation(
            g, WitnessConfig(X, witnesses, shape))
        assert trace.repair_branch == tag
        assert is_antimagic(o, l)[0]
        seen.add(trace.repair_branch)
    assert seen == {
        "t2_complete_swap12", "t2_reverse_x1x2",
        "t3_complete_swap12", "t3_complete_swap13", "t3_complete_swap23",
        "t3_partial_swap12", "t3_partial_swap23", "t3_four_edge",
        "t3_anchor_swap_gap2", "t3_anchor_swap_gap3",
    }


def test_independence_four_construction():
    rng = Lcg(31)
    for i in range(20):
        n = 4 * rng.randint(7, 10)
        g = generate(FamilySpec("alpha-bounded", {"k": 4, "n": n}, seed=i))
        assert min(g.degrees()) >= 11
        o, l, tag = antimagic_by_alpha(g)
        assert tag.startswith("alpha4-"), tag
        assert is_antimagic(o, l)[0]


def _connected_graphs_up_to_five():
    for n in range(1, 6):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            if len(edges) > 9:
                continue
            g = Graph(n, edges)
            if n == 1 or (g.m and is_connected(g)):
                yield g


def test_oracle_concordance():
    count = 0
    for g in _connected_graphs_up_to_five():
        exists, witness = oracle_antimagic_exists(g)
        assert exists, g
        assert is_antimagic(*witness)[0]
        o, l, tag = antimagic_by_alpha(g)
        assert is_antimagic(o, l)[0], (g, tag)
        count += 1
    # raw labeled enumeration: 1 + 1 + 4 + 38 + 727 (K5 exceeds the edge cap)
    assert count == 771


def test_negative_controls(tmp_path, capsys):
    # a cyclically oriented triangle admits no antimagic labeling: sums are
    # differences of labels and two of them always coincide
    k3 = Graph(3, [(0, 1), (0, 2), (1, 2)])
    cyclic = Orientation(k3, [True, False, True])  # 0->1, 2->0, 1->2
    for perm in itertools.permutations(range(1, 4)):
        ok, clash = is_antimagic(cyclic, ArcLabeling(list(perm)))
        assert not ok
    graph_file = tmp_path / "k3.txt"
    graph_file.write_text("3 3\n0 1\n0 2\n1 2\n")
    dup = tmp_path / "dup.cert"
    dup.write_text("0 1 1\n0 2 1\n1 2 3\n")
    assert main(["verify", str(graph_file), str(dup)]) == 65
    missing = tmp_path / "missing.cert"
    missing.write_text("0 1 1\n0 2 2\n")
    assert main(["verify", str(graph_file), str(missing)]) == 64
    bad_graph = tmp_path / "bad.txt"
    bad_graph.write_text("3 2\n0 1\nbroken\n")
    assert main(["construct", str(bad_graph)]) == 64
    capsys.readouterr()
