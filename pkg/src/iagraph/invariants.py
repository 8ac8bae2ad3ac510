"""Graph invariants and isomorphism testing.

Diameter and girth use BFS; both have exact shortcuts for the common dense
cases (completeness, diameter-2 via common neighbors, girth-3 via triangle
scan) so that sweeps over many graphs stay cheap.  Infinite values are
represented by ``None`` and serialized as the string ``"inf"``; no floating
point is involved anywhere.

Isomorphism is decided by backtracking over candidate vertex images, pruned
by degree and iterated neighborhood-degree refinement, with a configurable
vertex cap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph
from .rings import CapExceededError

DEFAULT_ISO_VERTEX_CAP = 64


@dataclass(frozen=True)
class InvariantReport:
    vertex_count: int
    edge_count: int
    connected: bool
    diameter: int | None  # None encodes infinity
    girth: int | None  # None encodes infinity
    complete: bool
    totally_disconnected: bool
    bipartite_parts: tuple[int, int] | None
    degree_sequence: tuple[int, ...]
    degenerate: bool  # fewer than 2 vertices: diameter 0 by convention

    def to_json_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "connected": self.connected,
            "diameter": "inf" if self.diameter is None else self.diameter,
            "girth": "inf" if self.girth is None else self.girth,
            "complete": self.complete,
            "totally_disconnected": self.totally_disconnected,
            "bipartite_parts": list(self.bipartite_parts) if self.bipartite_parts else None,
            "degree_sequence": list(self.degree_sequence),
            "degenerate": self.degenerate,
        }

    @staticmethod
    def csv_header() -> list[str]:
        return [
            "vertex_count",
            "edge_count",
            "connected",
            "diameter",
            "girth",
            "complete",
            "totally_disconnected",
            "bipartite_m",
            "bipartite_n",
            "degree_sequence",
            "degenerate",
        ]

    def csv_row(self) -> list[str]:
        parts = self.bipartite_parts or ("", "")
        return [
            str(self.vertex_count),
            str(self.edge_count),
            str(self.connected).lower(),
            "inf" if self.diameter is None else str(self.diameter),
            "inf" if self.girth is None else str(self.girth),
            str(self.complete).lower(),
            str(self.totally_disconnected).lower(),
            str(parts[0]),
            str(parts[1]),
            " ".join(str(d) for d in self.degree_sequence),
            str(self.degenerate).lower(),
        ]


# ---------------------------------------------------------------------------
# connectivity / distance


def _bfs_reach(neighbors, start: int) -> list[int]:
    """Distances from start, -1 where unreachable."""
    dist = [-1] * len(neighbors)
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in neighbors[u]:
            if dist[v] < 0:
                dist[v] = du + 1
                queue.append(v)
    return dist


def is_connected(graph: Graph) -> bool:
    n = graph.vertex_count
    if n <= 1:
        return True
    return all(d >= 0 for d in _bfs_reach(graph.neighbors, 0))


def diameter(graph: Graph) -> int | None:
    """Longest shortest-path distance; None when disconnected, 0 below 2 vertices."""
    n = graph.vertex_count
    if n <= 1:
        return 0
    nbrs = graph.neighbors
    first = _bfs_reach(nbrs, 0)
    if min(first) < 0:
        return None
    if graph.edge_count == n * (n - 1) // 2:
        return 1
    # exact diameter-2 test: every non-adjacent pair shares a neighbor
    if all(
        v in nbrs[u] or not nbrs[u].isdisjoint(nbrs[v])
        for u in range(n)
        for v in range(u + 1, n)
    ):
        return 2
    best = max(first)
    for s in range(1, n):
        best = max(best, max(_bfs_reach(nbrs, s)))
    return best


def girth(graph: Graph) -> int | None:
    """Length of a shortest cycle, None when acyclic."""
    n = graph.vertex_count
    nbrs = graph.neighbors
    # triangle scan first; almost every cyclic graph here has one
    for u in range(n):
        for v in nbrs[u]:
            if v > u and not nbrs[u].isdisjoint(nbrs[v]):
                return 3
    best: int | None = None
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                continue
            for v in nbrs[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    cand = dist[u] + dist[v] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def invariants(graph: Graph) -> InvariantReport:
    n = graph.vertex_count
    e = graph.edge_count
    degenerate = n < 2
    if degenerate:
        return InvariantReport(
            vertex_count=n,
            edge_count=0,
            connected=True,
            diameter=0,
            girth=None,
            complete=True,
            totally_disconnected=True,
            bipartite_parts=None,
            degree_sequence=tuple(graph.degree_sequence()),
            degenerate=True,
        )
    diam = diameter(graph)
    return InvariantReport(
        vertex_count=n,
        edge_count=e,
        connected=diam is not None,
        diameter=diam,
        girth=girth(graph),
        complete=e == n * (n - 1) // 2,
        totally_disconnected=e == 0,
        bipartite_parts=is_complete_bipartite(graph),
        degree_sequence=tuple(graph.degree_sequence()),
        degenerate=False,
    )


def is_complete_bipartite(graph: Graph) -> tuple[int, int] | None:
    """Part sizes (m, n) with m <= n iff the graph is exactly K^{m,n}."""
    n = graph.vertex_count
    if n < 2:
        return None
    nbrs = graph.neighbors
    color = [-1] * n
    color[0] = 0
    queue = deque([0])
    seen = 1
    while queue:
        u = queue.popleft()
        for v in nbrs[u]:
            if color[v] < 0:
                color[v] = 1 - color[u]
                seen += 1
                queue.append(v)
            elif color[v] == color[u]:
                return None  # odd cycle
    if seen < n:
        return None  # disconnected
    a = color.count(0)
    b = n - a
    if a == 0 or b == 0:
        return None
    if graph.edge_count != a * b:
        return None
    return (min(a, b), max(a, b))


# ---------------------------------------------------------------------------
# isomorphism


def _refine_colors(neighbors, init):
    """Iterated neighborhood color refinement until stable."""
    colors = list(init)
    n = len(neighbors)
    while True:
        sig = [
            (colors[u], tuple(sorted(colors[v] for v in neighbors[u]))) for u in range(n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def is_isomorphic(
    g: Graph, h: Graph, vertex_cap: int = DEFAULT_ISO_VERTEX_CAP
) -> tuple[bool, dict[str, str] | None]:
    """Exact isomorphism test; returns (verdict, label mapping when true)."""
    if g.vertex_count > vertex_cap or h.vertex_count > vertex_cap:
        raise CapExceededError(
            f"isomorphism cap {vertex_cap} exceeded "
            f"({g.vertex_count} vs {h.vertex_count} vertices)"
        )
    n = g.vertex_count
    if n != h.vertex_count or g.edge_count != h.edge_count:
        return False, None
    if g.degree_sequence() != h.degree_sequence():
        return False, None
    if n == 0:
        return True, {}

    gn, hn = g.neighbors, h.neighbors
    gc = _refine_colors(gn, [len(s) for s in gn])
    hc = _refine_colors(hn, [len(s) for s in hn])
    if sorted(gc) != sorted(hc):
        return False, None

    candidates = [[v for v in range(n) if hc[v] == gc[u]] for u in range(n)]
    order = sorted(range(n), key=lambda u: (len(candidates[u]), -len(gn[u])))
    mapping = [-1] * n
    used = [False] * n

    def backtrack(pos: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        for v in candidates[u]:
            if used[v]:
                continue
            ok = True
            for w in order[:pos]:
                # edges and non-edges among mapped vertices must both carry over
                if (w in gn[u]) != (mapping[w] in hn[v]):
                    ok = False
                    break
            if ok:
                mapping[u] = v
                used[v] = True
                if backtrack(pos + 1):
                    return True
                used[v] = False
                mapping[u] = -1
        return False

    if backtrack(0):
        return True, {g.labels[u]: h.labels[mapping[u]] for u in range(n)}
    return False, None
