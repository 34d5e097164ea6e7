"""Antimagic orientation from an independent set with a saturating matching.

Input: a connected graph with an independent set A whose vertices all have
degree >= 3, together with a matching that saturates every vertex outside A
(so it matches V\\A into A, and |A| >= |V\\A| >= 3).

Outline of the construction.  Orient every A-incident edge toward A.  The
edges inside V\\A get an Euler-based orientation and labels from a middle
window whose vertex sums stay below m - |A|.  The A-incident non-matching
edges split into a bipartite leftover H (labels {1..e(H)}, grouped per
A-vertex into zero-sum blocks) plus one extra edge per unmatched A-vertex
(top labels).  Each A-vertex then has sum equal to its matching/extra label
modulo q, so the A-sums are positive and pairwise distinct; sorting the
outside vertices by their pre-matching sums and handing out the matching
labels in that order makes the outside sums strictly decreasing and
negative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstructionBugError, RejectedInstanceError
from .graph import ArcLabeling, Graph, Orientation, is_antimagic, is_connected
from .euler import orient_and_label
from .zerosum import zero_sum_partition


@dataclass(frozen=True)
class MatchingInstance:
    g: Graph
    A: frozenset[int]
    M: frozenset[int]

    def __init__(self, g: Graph, A, M):
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "A", frozenset(A))
        object.__setattr__(self, "M", frozenset(M))


@dataclass(frozen=True)
class MatchingTrace:
    """Intermediate state of construct_from_matching, for invariant tests."""

    a_order: tuple[int, ...]  # a_1..a_n1 (final indexing)
    b_order: tuple[int, ...]  # b_1..b_n2, partners of a_1..a_n2
    e0: tuple[int, ...]  # extra edges of the unmatched a_j, j = n2+1..n1
    h_edges: tuple[int, ...]
    blocks: tuple[frozenset[int], ...]  # zero-sum label block per a_i
    euler_window: tuple[int, int]


def find_saturating_matching(g: Graph, A) -> set[int] | None:
    """Matching of the (V\\A, A) bipartite subgraph saturating V\\A, or None.

    Uses augmenting paths.  Raises ValueError when A is not independent.
    """
    A = set(A)
    nbrs = g.neighbor_sets()
    for v in A:
        if nbrs[v] & A:
            raise ValueError("A is not independent")
    outside = [v for v in range(g.n) if v not in A]
    match_of_a: dict[int, int] = {}  # a-vertex -> matched outside vertex
    match_of_b: dict[int, int] = {}

    def augment(b: int, seen: set[int]) -> bool:
        for a in sorted(nbrs[b] & A):
            if a in seen:
                continue
            seen.add(a)
            if a not in match_of_a or augment(match_of_a[a], seen):
                match_of_a[a] = b
                match_of_b[b] = a
                return True
        return False

    for b in outside:
        if not augment(b, set()):
            return None
    return {g.edge_id(b, a) for b, a in match_of_b.items()}


def _validate(inst: MatchingInstance):
    g, A, M = inst.g, inst.A, inst.M
    nbrs = g.neighbor_sets()
    deg = g.degrees()
    if any(v < 0 or v >= g.n for v in A):
        raise RejectedInstanceError("A contains a vertex id outside the graph")
    for v in A:
        if nbrs[v] & A:
            raise RejectedInstanceError("A is not independent")
    for v in A:
        if deg[v] < 3:
            raise RejectedInstanceError(f"d(v) >= 3 fails at vertex {v} in A")
    n1 = len(A)
    n2 = g.n - n1
    if not (n1 >= n2 >= 3):
        raise RejectedInstanceError(f"|A| >= |V\\A| >= 3 fails (n1={n1}, n2={n2})")
    if any(e < 0 or e >= g.m for e in M):
        raise RejectedInstanceError("M contains an edge id outside the graph")
    if len(M) != n2:
        raise RejectedInstanceError(f"|M| must equal |V\\A| = {n2}, got {len(M)}")
    covered: set[int] = set()
    for e in M:
        u, v = g.edges[e]
        if u in covered or v in covered:
            raise RejectedInstanceError("M is not a matching")
        covered.update((u, v))
    for v in range(g.n):
        if v not in A and v not in covered:
            raise RejectedInstanceError(f"M does not saturate vertex {v} outside A")
    if not is_connected(g):
        raise RejectedInstanceError("graph is not connected")


def construct_from_matching(
    inst: MatchingInstance,
) -> tuple[Orientation, ArcLabeling, MatchingTrace]:
    _validate(inst)
    g, A = inst.g, inst.A
    m = g.m
    n1 = len(A)
    n2 = g.n - n1

    # Initial indexing: b's ascending by id, a_i = matching partner of b_i;
    # unmatched a's ascending by id take indices n2+1..n1.
    partner = {}
    for e in inst.M:
        u, v = g.edges[e]
        b, a = (u, v) if v in A else (v, u)
        partner[b] = a
    b_order = sorted(partner)
    a_order = [partner[b] for b in b_order]
    unmatched = sorted(A - set(a_order))
    a_order += unmatched

    # One extra edge per unmatched a_j: its lowest-id incident edge.
    adj = g.adjacency()
    e0 = []
    for a in unmatched:
        e0.append(min(eid for _, eid in adj[a]))
    e0_set = set(e0)

    # Bipartite leftover H: A-incident edges outside the matching and extras.
    h_edges = [
        eid
        for eid, (u, v) in enumerate(g.edges)
        if (u in A or v in A) and eid not in inst.M and eid not in e0_set
    ]
    eh = len(h_edges)
    d_h = {a: 0 for a in A}
    for eid in h_edges:
        u, v = g.edges[eid]
        d_h[u if u in A else v] += 1
    assert all(d >= 2 for d in d_h.values()) and eh >= 2 * n1

    # Orient and label the edges inside V\A from the window {eh+1..m-n1}.
    inner = Graph(g.n, [g.edges[eid] for eid in range(m) if eid not in inst.M
                        and eid not in e0_set and eid not in set(h_edges)])
    euler = orient_and_label(inner, eh, "sigma1")

    labels = [0] * m
    forward = [False] * m
    for k, (u, v) in enumerate(inner.edges):
        eid = g.edge_id(u, v)
        labels[eid] = euler.labeling.labels[k]
        forward[eid] = euler.orientation.forward[k]

    # Zero-sum blocks over {1..eh}, one per a-vertex, sized by its H-degree.
    sizes = [d_h[a] for a in a_order]
    part = zero_sum_partition(eh, sizes)
    block_of_a = dict(zip(a_order, part.blocks))
    for a, block in zip(a_order, part.blocks):
        mine = sorted(eid for eid in h_edges
                      if a in g.edges[eid])
        for eid, lab in zip(mine, sorted(block)):
            labels[eid] = lab

    # Extra edges take the top labels, matching their a-index.
    for j, eid in zip(range(n2 + 1, n1 + 1), e0):
        labels[eid] = m - n1 + j

    # Orient every A-incident edge toward A.
    for eid in list(inst.M) + e0 + h_edges:
        u, v = g.edges[eid]
        forward[eid] = v in A

    # Outside sums so far: Euler sum minus the labels leaving toward A.
    inner_sums = [0] * g.n
    for k in range(inner.m):
        t, h = euler.orientation.arc(k)
        lab = euler.labeling.labels[k]
        inner_sums[h] += lab
        inner_sums[t] -= lab

    def pre_sum(b: int) -> int:
        out = sum(labels[eid] for _, eid in adj[b]
                  if eid not in inst.M and (g.edges[eid][0] in A or g.edges[eid][1] in A))
        return inner_sums[b] - out

    # Re-index the outside vertices by descending pre-matching sum; the
    # matching labels m-n1+1, m-n1+2, ... then force strictly decreasing
    # negative sums.  Ties break by ascending id for determinism.
    b_order = sorted(b_order, key=lambda b: (-pre_sum(b), b))
    a_order = [partner[b] for b in b_order] + unmatched
    for i, b in enumerate(b_order, start=1):
        labels[g.edge_id(b, partner[b])] = m - n1 + i

    orientation = Orientation(g, forward)
    labeling = ArcLabeling(labels)
    labeling.validate()
    ok, clash = is_antimagic(orientation, labeling)
    if not ok:
        raise ConstructionBugError(f"vertex-sum collision at {clash}")
    trace = MatchingTrace(
        a_order=tuple(a_order),
        b_order=tuple(b_order),
        e0=tuple(e0),
        h_edges=tuple(h_edges),
        blocks=tuple(block_of_a[a] for a in a_order),
        euler_window=(eh + 1, m - n1),
    )
    return orientation, labeling, trace
