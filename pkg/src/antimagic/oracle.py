"""Brute-force existence oracle for antimagic orientations of tiny graphs.

Searches every orientation (up to global reversal, which negates all sums
and preserves distinctness) and, per orientation, backtracks over label
assignments, pruning as soon as two vertices with all incident edges
labeled share a sum.  Bounded to m <= 9 edges.
"""

from __future__ import annotations

from .errors import BudgetError
from .graph import ArcLabeling, Graph, Orientation, is_antimagic

MAX_EDGES = 9


def oracle_antimagic_exists(
    g: Graph,
) -> tuple[bool, tuple[Orientation, ArcLabeling] | None]:
    """(exists, witness) by exhaustive search; witness is None on False."""
    m = g.m
    if m > MAX_EDGES:
        raise BudgetError(f"oracle handles at most {MAX_EDGES} edges, got {m}")
    if m == 0:
        orientation = Orientation(g, ())
        labeling = ArcLabeling(())
        ok, _ = is_antimagic(orientation, labeling)
        return (ok, (orientation, labeling)) if ok else (False, None)

    deg = g.degrees()
    incident = [[] for _ in range(g.n)]
    for eid, (u, v) in enumerate(g.edges):
        incident[u].append(eid)
        incident[v].append(eid)

    # Orientation loop: edge 0 is fixed forward by reversal symmetry.
    for bits in range(1 << (m - 1)):
        forward = [True] + [bool(bits >> k & 1) for k in range(m - 1)]
        sums = [0] * g.n
        remaining = deg[:]
        used = [False] * (m + 1)
        labels = [0] * m
        taken_sums: set[int] = set()
        closed = [d == 0 for d in remaining]
        if sum(closed) > 1:
            continue  # two isolated vertices always tie at 0
        if any(closed):
            taken_sums.add(0)

        def assign(eid: int) -> bool:
            if eid == m:
                return True
            u, v = g.edges[eid]
            tail, head = (u, v) if forward[eid] else (v, u)
            for lab in range(1, m + 1):
                if used[lab]:
                    continue
                used[lab] = True
                labels[eid] = lab
                sums[head] += lab
                sums[tail] -= lab
                remaining[head] -= 1
                remaining[tail] -= 1
                ok = True
                newly = [w for w in (head, tail) if remaining[w] == 0]
                for w in newly:
                    if sums[w] in taken_sums:
                        ok = False
                        break
                if ok:
                    added = []
                    for w in newly:
                        if sums[w] not in taken_sums:
                            taken_sums.add(sums[w])
                            added.append(sums[w])
                    if len(added) == len(newly) and assign(eid + 1):
                        return True
                    for s in added:
                        taken_sums.discard(s)
                used[lab] = False
                sums[head] -= lab
                sums[tail] += lab
                remaining[head] += 1
                remaining[tail] += 1
            return False

        if assign(0):
            orientation = Orientation(g, forward)
            labeling = ArcLabeling(labels)
            ok, _ = is_antimagic(orientation, labeling)
            assert ok
            return True, (orientation, labeling)
    return False, None
