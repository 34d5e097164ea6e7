"""Deterministic seeded graph family generators.

Every family is reproducible from (family, parameters, seed) via the
package's linear congruential generator.  Post-conditions (degrees,
independence number, connectivity) are checked, not assumed; families
with random resampling retry up to a fixed budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GenerationFailureError
from .graph import Graph, is_connected, radius
from .prng import Lcg

RETRY_BUDGET = 60


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0


def generate(spec: FamilySpec) -> Graph:
    fn = _FAMILIES.get(spec.family)
    if fn is None:
        raise ValueError(f"unknown family {spec.family!r}")
    return fn(spec.params, spec.seed)


def _star(params, seed):
    k = params["k"]
    if k < 1:
        raise ValueError("star needs k >= 1")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def _wheel(params, seed):
    k = params["k"]
    if k < 3:
        raise ValueError("wheel needs k >= 3")
    rim = [(i, i + 1) for i in range(1, k)] + [(1, k)]
    return Graph(k + 1, sorted([(0, i) for i in range(1, k + 1)] + [tuple(sorted(e)) for e in rim]))


def _complete(params, seed):
    n = params["n"]
    if n < 1:
        raise ValueError("complete needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _path(params, seed):
    n = params["n"]
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(params, seed):
    n = params["n"]
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, sorted([(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]))


def _biregular(params, seed):
    """Connected bipartite graph, degree a on side B (first), b on side A.

    a * |B| must equal b * |A|.  A deterministic circulant base (B_i joined
    to a consecutive A-indices starting at i*a mod |A|) is randomized by
    degree-preserving double edge swaps, retrying until connected.
    """
    a, b = params["a"], params["b"]
    nb, na = params["left"], params["right"]
    if a < 1 or b < 1 or nb < 1 or na < 1 or a > na or b > nb:
        raise ValueError("infeasible biregular parameters")
    if a * nb != b * na:
        raise ValueError("biregular needs a*left == b*right")
    rng = Lcg(seed)
    for _ in range(RETRY_BUDGET):
        edges = set()
        for i in range(nb):
            for j in range(a):
                edges.add((i, nb + (i * a + j) % na))
        edges = sorted(edges)
        for _ in range(8 * len(edges)):
            k1 = rng.randint(0, len(edges) - 1)
            k2 = rng.randint(0, len(edges) - 1)
            (u1, v1), (u2, v2) = edges[k1], edges[k2]
            if u1 == u2 or v1 == v2:
                continue
            e1, e2 = (u1, v2), (u2, v1)
            eset = set(edges)
            if e1 in eset or e2 in eset:
                continue
            edges[k1], edges[k2] = e1, e2
        g = Graph(nb + na, sorted(edges))
        if is_connected(g):
            return g
    raise GenerationFailureError("biregular: no connected sample in budget")


def _radius2_ball(params, seed):
    """Connected graph with radius <= 2 (vertex 0 reaches all within 2)."""
    n = params["n"]
    extra = params.get("extra", n)
    if n < 2:
        raise ValueError("radius2-ball needs n >= 2")
    rng = Lcg(seed)
    inner = rng.randint(1, n - 1)
    ring = list(range(1, inner + 1))
    edges = {(0, v) for v in ring}
    for v in range(inner + 1, n):
        edges.add(tuple(sorted((v, ring[rng.randint(0, len(ring) - 1)]))))
    for _ in range(extra):
        u = rng.randint(0, n - 1)
        v = rng.randint(0, n - 1)
        if u != v:
            edges.add(tuple(sorted((u, v))))
    g = Graph(n, sorted(edges))
    assert radius(g) <= 2
    return g


def _matchings(rng: Lcg, c: int, r: int, left0: int, right0: int) -> set:
    """r disjoint perfect matchings between two size-c cliques' vertex ranges."""
    edges = set()
    mates = {i: set() for i in range(c)}
    for _ in range(r):
        perm = list(range(c))
        rng.shuffle(perm)
        # repair collisions with already-used mates by rotating
        for _ in range(c * c):
            bad = [i for i in range(c) if perm[i] in mates[i]]
            if not bad:
                break
            i = bad[0]
            j = rng.randint(0, c - 1)
            perm[i], perm[j] = perm[j], perm[i]
        if any(perm[i] in mates[i] for i in range(c)):
            continue
        for i in range(c):
            mates[i].add(perm[i])
            edges.add((left0 + i, right0 + perm[i]))
    return edges


def _alpha_bounded(params, seed):
    """k cliques in a path joined by seeded matchings; alpha <= k, delta >= d.

    End cliques get enough parallel matchings to push minimum degree to
    delta_min; middle links stay sparse so the ends remain far apart.
    """
    k = params.get("k", 4)
    delta_min = params.get("delta_min", 11)
    n = params["n"]
    if n % k != 0:
        raise ValueError("alpha-bounded needs k | n")
    c = n // k
    r_end = max(2, delta_min + 1 - c)
    if r_end > c - 1:
        raise ValueError("cliques too small for the degree target")
    rng = Lcg(seed)
    for _ in range(RETRY_BUDGET):
        edges = set()
        for q in range(k):
            base = q * c
            for i in range(c):
                for j in range(i + 1, c):
                    edges.add((base + i, base + j))
        for q in range(k - 1):
            r = r_end if q in (0, k - 2) else 1
            edges |= _matchings(rng, c, r, q * c, (q + 1) * c)
        g = Graph(n, sorted(edges))
        if not is_connected(g):
            continue
        if min(g.degrees()) < delta_min:
            continue
        from .alpha import max_independent_set

        cert = max_independent_set(g, k)
        if cert is None or cert.alpha != k:
            continue
        return g
    raise GenerationFailureError("alpha-bounded: no valid sample in budget")


def _two_dominator(params, seed):
    """Two centers covering every other vertex, joined by an edge or a
    shared neighbor, plus random padding edges."""
    n = params["n"]
    shared = params.get("shared", False)
    extra = params.get("extra", n)
    if n < 4:
        raise ValueError("two-dominator needs n >= 4")
    rng = Lcg(seed)
    edges = set()
    if shared:
        edges.add((0, 2))
        edges.add((1, 2))
    else:
        edges.add((0, 1))
    for v in range(2, n):
        edges.add(tuple(sorted((v, rng.randint(0, 1)))))
    for _ in range(extra):
        u = rng.randint(0, n - 1)
        v = rng.randint(0, n - 1)
        if u != v:
            edges.add(tuple(sorted((u, v))))
    return Graph(n, sorted(edges))


_FAMILIES = {
    "star": _star,
    "wheel": _wheel,
    "complete": _complete,
    "path": _path,
    "cycle": _cycle,
    "biregular": _biregular,
    "radius2-ball": _radius2_ball,
    "alpha-bounded": _alpha_bounded,
    "two-dominator": _two_dominator,
}
