"""Graph, orientation and labeling data model plus the antimagic verifier.

Vertices are dense integers ``0..n-1`` and edge ids are dense integers
``0..m-1``; every operation iterates in ascending id order so results are
deterministic.  All values are immutable after construction and all
operations are pure functions.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import MalformedLabelingError, ParseError

INF = math.inf


def _check_edges(n: int, edges: Sequence[tuple[int, int]], allow_parallel: bool):
    seen = set()
    for k, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {k}: endpoint out of range")
        if u == v:
            raise ValueError(f"edge {k}: loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if not allow_parallel:
            if key in seen:
                raise ValueError(f"edge {k}: duplicate endpoint pair {key}")
            seen.add(key)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no parallel edges."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        edges = tuple((int(u), int(v)) for u, v in edges)
        _check_edges(n, edges, allow_parallel=False)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of (neighbor, edge_id), ascending edge id."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return adj

    def neighbor_sets(self) -> list[set[int]]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return nbrs

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in {
            (min(a, b), max(a, b)) for a, b in self.edges
        }

    def edge_id(self, u: int, v: int) -> Optional[int]:
        key = (min(u, v), max(u, v))
        for eid, (a, b) in enumerate(self.edges):
            if (min(a, b), max(a, b)) == key:
                return eid
        return None


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph; parallel edges allowed (internal Euler pairing)."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        edges = tuple((int(u), int(v)) for u, v in edges)
        _check_edges(n, edges, allow_parallel=True)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


@dataclass(frozen=True)
class Orientation:
    """Per-edge direction over a graph's edge ids.

    ``forward[eid]`` is True when edge ``(u, v)`` is oriented u -> v in the
    stored endpoint order.
    """

    graph: Graph
    forward: tuple[bool, ...]

    def __init__(self, graph: Graph, forward: Iterable[bool]):
        forward = tuple(bool(b) for b in forward)
        if len(forward) != graph.m:
            raise ValueError("orientation must cover exactly the graph's edges")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "forward", forward)

    def arc(self, eid: int) -> tuple[int, int]:
        """(tail, head) of the arc carrying edge ``eid``."""
        u, v = self.graph.edges[eid]
        return (u, v) if self.forward[eid] else (v, u)

    def reversed(self) -> "Orientation":
        return Orientation(self.graph, tuple(not b for b in self.forward))


@dataclass(frozen=True)
class ArcLabeling:
    """Bijection from edge ids onto the window ``{offset+1 .. offset+m}``."""

    labels: tuple[int, ...]
    offset: int = 0

    def __init__(self, labels: Iterable[int], offset: int = 0):
        labels = tuple(int(x) for x in labels)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "offset", int(offset))

    @property
    def window(self) -> range:
        return range(self.offset + 1, self.offset + len(self.labels) + 1)

    def validate(self):
        m = len(self.labels)
        if sorted(self.labels) != list(self.window):
            raise MalformedLabelingError(
                f"labels are not a bijection onto {{{self.offset + 1}..{self.offset + m}}}"
            )


@dataclass(frozen=True)
class VertexSumProfile:
    sums: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.sums[v]

    def __len__(self) -> int:
        return len(self.sums)


def vertex_sums(orientation: Orientation, labeling: ArcLabeling) -> VertexSumProfile:
    """Signed label sums: entering arcs count positive, leaving negative.

    Isolated vertices carry 0.
    """
    labeling.validate()
    g = orientation.graph
    if len(labeling.labels) != g.m:
        raise MalformedLabelingError("labeling does not cover the graph's edge ids")
    s = [0] * g.n
    for eid in range(g.m):
        tail, head = orientation.arc(eid)
        lab = labeling.labels[eid]
        s[head] += lab
        s[tail] -= lab
    return VertexSumProfile(tuple(s))


def is_antimagic(
    orientation: Orientation, labeling: ArcLabeling
) -> tuple[bool, Optional[tuple[int, int]]]:
    """True iff all vertex-sums are pairwise distinct.

    The labeling window must be exactly {1..m}.  On failure the certificate
    names the lowest colliding vertex pair.
    """
    if labeling.offset != 0:
        raise MalformedLabelingError("verifier requires the window {1..m}")
    profile = vertex_sums(orientation, labeling)
    seen: dict[int, int] = {}
    for v, s in enumerate(profile.sums):
        if s in seen:
            return False, (seen[s], v)
        seen[s] = v
    return True, None


def distance(g: Graph, u: int, v: int) -> float:
    """BFS shortest-path length; ``inf`` when u and v are disconnected."""
    if u == v:
        return 0
    adj = g.adjacency()
    dist = [-1] * g.n
    dist[u] = 0
    q = deque([u])
    while q:
        x = q.popleft()
        for y, _ in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                q.append(y)
    return INF


def _eccentricities(g: Graph) -> list[float]:
    adj = g.adjacency()
    ecc: list[float] = []
    for u in range(g.n):
        dist = [-1] * g.n
        dist[u] = 0
        q = deque([u])
        while q:
            x = q.popleft()
            for y, _ in adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    q.append(y)
        ecc.append(INF if any(d < 0 for d in dist) else max(dist))
    return ecc


def radius(g: Graph) -> float:
    """Minimum eccentricity; ``inf`` when disconnected."""
    if g.n == 0:
        return 0
    return min(_eccentricities(g))


def center_vertices(g: Graph) -> list[int]:
    """Vertices achieving the radius, ascending id."""
    ecc = _eccentricities(g)
    r = min(ecc)
    return [v for v in range(g.n) if ecc[v] == r]


def set_distance(g: Graph, v: int, xs: Iterable[int]) -> float:
    """Minimum distance from ``v`` to the set ``xs``; ``v`` must not be in it."""
    xs = set(xs)
    if not xs:
        raise ValueError("set_distance requires a nonempty set")
    if v in xs:
        raise ValueError("set_distance requires v outside the set")
    adj = g.adjacency()
    dist = [-1] * g.n
    dist[v] = 0
    q = deque([v])
    while q:
        x = q.popleft()
        if x in xs:
            return dist[x]
        for y, _ in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                q.append(y)
    return INF


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return radius(g) != INF


def components(g: Graph) -> list[list[int]]:
    """Connected components as ascending vertex lists, ordered by smallest id."""
    adj = g.adjacency()
    seen = [False] * g.n
    out: list[list[int]] = []
    for v in range(g.n):
        if seen[v]:
            continue
        comp = []
        q = deque([v])
        seen[v] = True
        while q:
            x = q.popleft()
            comp.append(x)
            for y, _ in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    q.append(y)
        out.append(sorted(comp))
    return out


# ---------------------------------------------------------------------------
# Text formats.  Edge-list: first line "n m", then m lines "u v" with
# 0 <= u < v < n in ascending lexicographic order; line k defines edge k-2.
# Certificate: m lines "t h L" (arc tail -> head, label), ascending edge id.
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input", line=1)
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("first line must be 'n m'", line=1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("first line must be 'n m'", line=1) from None
    if n < 0 or m < 0:
        raise ParseError("n and m must be nonnegative", line=1)
    body = [ln for ln in lines[1:]]
    # Trailing blank lines are tolerated; blank lines inside the body are not.
    while body and not body[-1].strip():
        body.pop()
    if len(body) != m:
        raise ParseError(f"expected {m} edge lines, found {len(body)}", line=len(lines))
    edges = []
    prev = None
    for k, ln in enumerate(body):
        parts = ln.split()
        lineno = k + 2
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge line must be 'u v'", line=lineno) from None
        if not (0 <= u < v < n):
            raise ParseError(f"edge must satisfy 0 <= u < v < n, got {u} {v}", line=lineno)
        if prev is not None and (u, v) <= prev:
            raise ParseError("edges must be in ascending lexicographic order", line=lineno)
        prev = (u, v)
        edges.append((u, v))
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = sorted((min(u, v), max(u, v)) for u, v in g.edges)
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def canonical_edge_order(g: Graph) -> Graph:
    """Re-id edges into ascending lexicographic endpoint order."""
    edges = sorted((min(u, v), max(u, v)) for u, v in g.edges)
    return Graph(g.n, edges)


def parse_certificate(text: str, g: Graph) -> tuple[Orientation, ArcLabeling]:
    """Parse a labeled-orientation file against its graph.

    Raises ParseError on syntax errors, MalformedLabelingError when an arc
    does not match the graph's edge of the same id or labels are not a
    bijection onto {1..m}.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != g.m:
        raise ParseError(f"expected {g.m} arc lines, found {len(lines)}", line=len(lines) + 1)
    forward = []
    labels = []
    for eid, ln in enumerate(lines):
        parts = ln.split()
        if len(parts) != 3:
            raise ParseError("arc line must be 't h L'", line=eid + 1)
        try:
            t, h, lab = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError("arc line must be 't h L'", line=eid + 1) from None
        u, v = g.edges[eid]
        if (t, h) == (u, v):
            forward.append(True)
        elif (t, h) == (v, u):
            forward.append(False)
        else:
            raise MalformedLabelingError(
                f"arc line {eid + 1}: ({t},{h}) does not match edge {eid} = ({u},{v})"
            )
        labels.append(lab)
    labeling = ArcLabeling(labels)
    labeling.validate()
    return Orientation(g, forward), labeling


def format_certificate(orientation: Orientation, labeling: ArcLabeling) -> str:
    lines = []
    for eid in range(orientation.graph.m):
        t, h = orientation.arc(eid)
        lines.append(f"{t} {h} {labeling.labels[eid]}")
    return "\n".join(lines) + "\n"
