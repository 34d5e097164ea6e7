"""Orient-and-label via Euler tours.

Any graph can be oriented and its edges labeled from a window
``{p+1..p+m}`` so that every vertex-sum stays within
``-floor((d(v)-1)/2) +- (p+m)`` (increasing flavor, ``sigma1``) or
``floor((d(v)-1)/2) +- (p+m)`` (decreasing flavor, ``sigma2``).  Odd-degree
vertices are paired up with temporary parallel-safe edges so an Euler tour
exists; the added edges are never oriented or labeled in the output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import RejectedInstanceError
from .graph import ArcLabeling, Graph, Multigraph, Orientation

Flavor = Literal["sigma1", "sigma2"]


def pair_odd_vertices(g: Graph) -> tuple[Multigraph, list[tuple[int, int]]]:
    """Join odd-degree vertices x_1..x_{2l} (ascending id) by edges x_i x_{i+l}.

    Returns the even multigraph and the list of added endpoint pairs.  The
    added edges get fresh ids after the original ones and may be parallel to
    existing edges.
    """
    odd = [v for v, d in enumerate(g.degrees()) if d % 2 == 1]
    ell = len(odd) // 2
    added = [(odd[i], odd[i + ell]) for i in range(ell)]
    return Multigraph(g.n, tuple(g.edges) + tuple(added)), added


def euler_tour(mg: Multigraph, start_edge: int) -> list[tuple[int, int]]:
    """Closed walk using each edge once, as (vertex, edge) steps.

    Step ``(v, e)`` means the walk leaves ``v`` along edge ``e``; the walk
    begins with ``start_edge`` leaving its lower-id endpoint.  Hierholzer
    construction: sub-tours are spliced at the earliest walk position with
    unused incident edges, always continuing along the lowest-id unused edge.
    """
    if mg.m == 0:
        return []
    deg = mg.degrees()
    bad = [v for v, d in enumerate(deg) if d % 2 == 1]
    if bad:
        raise RejectedInstanceError(f"odd-degree vertex {bad[0]}: no Euler tour")
    adj = mg.adjacency()  # ascending edge id per vertex
    # Connectivity over non-isolated vertices, needed for a single closed tour.
    active = [v for v, d in enumerate(deg) if d > 0]
    seen = {active[0]}
    stack = [active[0]]
    while stack:
        x = stack.pop()
        for y, _ in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if any(v not in seen for v in active):
        raise RejectedInstanceError("edge set is disconnected: no single Euler tour")

    used = [False] * mg.m
    ptr = [0] * mg.n  # next unused index into adj[v]

    def walk_from(v: int, first_edge: int | None) -> list[tuple[int, int]]:
        steps = []
        cur = v
        forced = first_edge
        while True:
            if forced is not None:
                eid = forced
                forced = None
            else:
                while ptr[cur] < len(adj[cur]) and used[adj[cur][ptr[cur]][1]]:
                    ptr[cur] += 1
                if ptr[cur] >= len(adj[cur]):
                    break
                eid = adj[cur][ptr[cur]][1]
            used[eid] = True
            a, b = mg.edges[eid]
            nxt = b if a == cur else a
            steps.append((cur, eid))
            cur = nxt
            if cur == v and forced is None:
                # Closed; continue only if v still has unused edges, which
                # the outer splice loop handles.
                break
        return steps

    u0, v0 = mg.edges[start_edge]
    start = min(u0, v0)
    tour = walk_from(start, start_edge)
    # Splice sub-tours at the earliest position with unused incident edges.
    i = 0
    while i < len(tour):
        v = tour[i][0]
        while ptr[v] < len(adj[v]) and used[adj[v][ptr[v]][1]]:
            ptr[v] += 1
        if ptr[v] < len(adj[v]):
            sub = walk_from(v, None)
            tour[i:i] = sub
        else:
            i += 1
    if len(tour) != mg.m:
        raise RejectedInstanceError("edge set is disconnected: no single Euler tour")
    return tour


@dataclass(frozen=True)
class EulerLabelingResult:
    orientation: Orientation
    labeling: ArcLabeling
    flavor: Flavor
    bounds: tuple[tuple[int, int], ...]  # per-vertex (lo, hi)


def _component_tour(g: Graph, comp: list[int], eids: list[int]) -> list[tuple[int, int]]:
    """Euler tour of one component, starting with an original edge of g."""
    sub = Multigraph(g.n, [g.edges[e] for e in eids])
    # Map sub edge ids back to g edge ids; added pairing edges map to -1.
    sub_star, added = pair_odd_vertices_mg(sub)
    # Start with the lowest-id original edge incident to the lowest-id vertex.
    v0 = comp[0]
    start = None
    for k, e in enumerate(eids):
        if v0 in sub.edges[k]:
            start = k
            break
    assert start is not None
    tour = euler_tour(sub_star, start)
    if added:
        # Rotate so the tour ends with an added pairing edge and begins with
        # an original edge.  The wrap-around of the closed tour then involves
        # an unlabeled edge, so it cannot stack a full-window jump on top of
        # the start vertex's pairing-edge contribution; without this the
        # per-vertex bounds can fail at the start vertex.
        L = len(tour)
        for k in range(L):
            if tour[k - 1][1] >= sub.m and tour[k][1] < sub.m:
                tour = tour[k:] + tour[:k]
                break
    out = []
    for v, k in tour:
        out.append((v, eids[k] if k < sub.m else -1))
    return out


def pair_odd_vertices_mg(mg: Multigraph) -> tuple[Multigraph, list[tuple[int, int]]]:
    odd = [v for v, d in enumerate(mg.degrees()) if d % 2 == 1]
    ell = len(odd) // 2
    added = [(odd[i], odd[i + ell]) for i in range(ell)]
    return Multigraph(mg.n, tuple(mg.edges) + tuple(added)), added


def orient_and_label(g: Graph, p: int, flavor: Flavor) -> EulerLabelingResult:
    """Orient g and label its edges from {p+1..p+m} within the flavor bounds.

    Disconnected input is handled per nontrivial component with consecutive
    disjoint label sub-windows in ascending order of smallest vertex id; the
    per-vertex bounds use the global p+m and therefore still hold.  An
    edgeless graph yields the empty labeling with every sum 0.
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    if flavor not in ("sigma1", "sigma2"):
        raise ValueError(f"unknown flavor {flavor!r}")
    m = g.m
    deg = g.degrees()
    sign = -1 if flavor == "sigma1" else 1
    bounds = tuple(
        (sign * ((d - 1) // 2 if d else 0) - (p + m), sign * ((d - 1) // 2 if d else 0) + (p + m))
        for d in deg
    )
    if m == 0:
        return EulerLabelingResult(
            Orientation(g, ()), ArcLabeling((), offset=p), flavor, bounds
        )

    # Group edges by component (components ordered by smallest vertex id).
    adj = g.adjacency()
    comp_of = [-1] * g.n
    comps: list[list[int]] = []
    for v in range(g.n):
        if comp_of[v] >= 0 or deg[v] == 0:
            continue
        comp = []
        stack = [v]
        comp_of[v] = len(comps)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y, _ in adj[x]:
                if comp_of[y] < 0:
                    comp_of[y] = len(comps)
                    stack.append(y)
        comps.append(sorted(comp))

    forward: list[bool] = [True] * m
    labels: list[int] = [0] * m
    offset = p
    for ci, comp in enumerate(comps):
        eids = [e for e, (u, v) in enumerate(g.edges) if comp_of[u] == ci]
        mc = len(eids)
        tour = _component_tour(g, comp, eids)
        j = 0
        for step, (v, e) in enumerate(tour):
            if e < 0:
                continue  # added pairing edge: never oriented, never labeled
            j += 1
            u, w = g.edges[e]
            forward[e] = v == u  # orient along the tour
            if flavor == "sigma1":
                labels[e] = offset + j
            else:
                labels[e] = offset + mc + 1 - j
        assert j == mc
        offset += mc
    assert offset == p + m
    return EulerLabelingResult(
        Orientation(g, forward), ArcLabeling(labels, offset=p), flavor, bounds
    )
