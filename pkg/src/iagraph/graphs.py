"""Graph builders over finite rings.

Three element-level graphs share one adjacency idea:

* the compressed graph: vertices are the annihilator classes of the
  nonzero zero-divisors, two classes adjacent iff their annihilators meet
  beyond 0 (representative choice provably does not matter);
* the torsion graph: same adjacency but on the uncompressed elements;
* the total graph: vertices are all ring elements, x adjacent to y iff
  x + y is a zero-divisor.

Two symbolic builders scale past element enumeration: the divisor form of
the compressed graph of Z_n (vertices are the divisors strictly between 1
and n, adjacency is gcd != 1) and the support-pattern form for products of
integral domains (vertices are proper nonzero 0/1 support vectors,
adjacency holds iff the union of supports misses some coordinate).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as cartesian

import numpy as np

from .rings import (
    CapExceededError,
    DEFAULT_ELEMENT_CAP,
    Element,
    FiniteRing,
    ProductRing,
    format_element,
)

DEFAULT_GRAPH_VERTEX_CAP = 4096


@dataclass(frozen=True)
class VertexClass:
    """One annihilator class: canonical representative, opaque key, size."""

    representative: Element
    key: object
    size: int

    @property
    def label(self) -> str:
        return format_element(self.representative)


class Graph:
    """Labeled simple undirected graph with adjacency sets."""

    __slots__ = ("labels", "neighbors", "class_sizes", "_label_index")

    def __init__(self, labels, edges, class_sizes=None):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate vertex labels")
        nbrs = [set() for _ in labels]
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            nbrs[i].add(j)
            nbrs[j].add(i)
        self.labels = labels
        self.neighbors = tuple(frozenset(s) for s in nbrs)
        if class_sizes is None:
            class_sizes = tuple(1 for _ in labels)
        self.class_sizes = tuple(class_sizes)
        self._label_index = None

    @classmethod
    def from_neighbors(cls, labels, neighbor_sets, class_sizes=None) -> "Graph":
        """Construct from prebuilt symmetric neighbor sets (no edge scatter)."""
        graph = cls.__new__(cls)
        graph.labels = tuple(labels)
        if len(set(graph.labels)) != len(graph.labels):
            raise ValueError("duplicate vertex labels")
        graph.neighbors = tuple(frozenset(s) for s in neighbor_sets)
        for i, nbrs in enumerate(graph.neighbors):
            if i in nbrs:
                raise ValueError(f"loop at vertex {i}")
        if class_sizes is None:
            class_sizes = tuple(1 for _ in graph.labels)
        graph.class_sizes = tuple(class_sizes)
        graph._label_index = None
        return graph

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.neighbors) // 2

    def adjacent(self, i: int, j: int) -> bool:
        return j in self.neighbors[i]

    def edges(self) -> list[tuple[int, int]]:
        """Each edge once as (i, j) with i < j, sorted."""
        return sorted(
            (i, j) for i, nbrs in enumerate(self.neighbors) for j in nbrs if i < j
        )

    def degree_sequence(self) -> list[int]:
        return sorted(len(s) for s in self.neighbors)

    def index(self, label: str) -> int:
        if self._label_index is None:
            self._label_index = {lab: i for i, lab in enumerate(self.labels)}
        return self._label_index[label]

    def edge_labels(self) -> set[frozenset[str]]:
        return {frozenset((self.labels[i], self.labels[j])) for i, j in self.edges()}

    def __repr__(self) -> str:
        return f"Graph({self.vertex_count} vertices, {self.edge_count} edges)"


# ---------------------------------------------------------------------------
# element-level builders


def compress_classes(
    ring: FiniteRing, cap: int | None = DEFAULT_ELEMENT_CAP
) -> list[VertexClass]:
    """Annihilator classes of Z*(R), sorted by canonical representative.

    The representative is the lexicographically least member, which for Z_n
    is gcd(x, n), i.e. the divisor representative.
    """
    return [
        VertexClass(representative=members[0], key=key, size=len(members))
        for key, members in ring.annihilator_classes(cap)
    ]


def build_ia(
    ring: FiniteRing,
    cap: int | None = DEFAULT_ELEMENT_CAP,
    vertex_cap: int = DEFAULT_GRAPH_VERTEX_CAP,
) -> Graph:
    """Compressed annihilator-intersection graph of the ring."""
    classes = compress_classes(ring, cap)
    if len(classes) > vertex_cap:
        raise CapExceededError(f"{len(classes)} vertices above graph cap {vertex_cap}")
    edges = [
        (i, j)
        for i in range(len(classes))
        for j in range(i + 1, len(classes))
        if ring.ann_sets_intersect(classes[i].key, classes[j].key)
    ]
    return Graph(
        labels=[c.label for c in classes],
        edges=edges,
        class_sizes=[c.size for c in classes],
    )


def build_torsion(
    ring: FiniteRing,
    cap: int | None = DEFAULT_ELEMENT_CAP,
    vertex_cap: int = DEFAULT_GRAPH_VERTEX_CAP,
) -> Graph:
    """Uncompressed graph on Z*(R) with the same intersection adjacency.

    Adjacency is evaluated pairwise on the elements themselves, not via the
    class structure, so this build stays an independent object to compare
    the compressed graph against.
    """
    zero = ring.zero
    verts = sorted(x for x in ring.zero_divisor_set(cap) if x != zero)
    if len(verts) > vertex_cap:
        raise CapExceededError(f"{len(verts)} vertices above graph cap {vertex_cap}")
    labels = [format_element(x) for x in verts]
    m = len(verts)
    if isinstance(ring, ProductRing):
        keys = np.array([ring.annihilator_key(x) for x in verts], dtype=np.int64).reshape(
            m, ring.arity
        )
        adj = np.zeros((m, m), dtype=bool)
        for c, mod in enumerate(ring.spec.factors):
            col = keys[:, c]
            adj |= np.lcm.outer(col, col) < mod
        np.fill_diagonal(adj, False)
        neighbor_sets = [np.flatnonzero(adj[i]).tolist() for i in range(m)]
        return Graph.from_neighbors(labels, neighbor_sets)
    edges = []
    rows = [ring._ann_row(x) for x in verts]
    for i in range(m):
        for j in range(i + 1, m):
            if int((rows[i] & rows[j]).sum()) >= 2:
                edges.append((i, j))
    return Graph(labels=labels, edges=edges)


def build_total(
    ring: FiniteRing,
    cap: int | None = DEFAULT_ELEMENT_CAP,
    vertex_cap: int = DEFAULT_GRAPH_VERTEX_CAP,
) -> Graph:
    """Total graph: all elements, x adjacent to y iff x + y is a zero-divisor."""
    verts = list(ring.elements(cap))
    if len(verts) > vertex_cap:
        raise CapExceededError(f"{len(verts)} vertices above graph cap {vertex_cap}")
    zset = ring.zero_divisor_set(cap)
    mods = ring.spec.factors
    edges = []
    for i, x in enumerate(verts):
        for j in range(i + 1, len(verts)):
            y = verts[j]
            if tuple((a + b) % n for a, b, n in zip(x, y, mods)) in zset:
                edges.append((i, j))
    return Graph(labels=[format_element(x) for x in verts], edges=edges)


# ---------------------------------------------------------------------------
# symbolic builders


def build_ia_zn_symbolic(
    factorization: dict[int, int],
    vertex_cap: int = DEFAULT_GRAPH_VERTEX_CAP,
) -> Graph:
    """Compressed graph of Z_n from the factorization of n, no enumeration.

    Vertices are the divisors d of n with 1 < d < n; d and e are adjacent
    iff gcd(d, e) != 1.
    """
    if not factorization:
        raise ValueError("empty factorization")
    primes = sorted(factorization)
    for p in primes:
        if p < 2 or any(p % q == 0 for q in range(2, int(math.isqrt(p)) + 1)):
            raise ValueError(f"{p} is not prime")
        if factorization[p] < 1:
            raise ValueError(f"exponent {factorization[p]} below 1 for prime {p}")
    n_vertices = math.prod(e + 1 for e in factorization.values()) - 2
    if n_vertices > vertex_cap:
        raise CapExceededError(
            f"{n_vertices} divisor vertices above graph cap {vertex_cap}"
        )
    n = math.prod(p**e for p, e in factorization.items())
    ds = [1]
    for p, e in sorted(factorization.items()):
        ds = [d * p**i for d in ds for i in range(e + 1)]
    verts = sorted(d for d in ds if 1 < d < n)
    gcd = math.gcd
    edges = [
        (i, j)
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
        if gcd(verts[i], verts[j]) != 1
    ]
    return Graph(labels=[str(d) for d in verts], edges=edges)


def zn_symbolic_from_n(n: int, vertex_cap: int = DEFAULT_GRAPH_VERTEX_CAP) -> Graph:
    from .rings import factorize

    return build_ia_zn_symbolic(dict(factorize(n)), vertex_cap)


def build_ia_domain_product(
    k: int, vertex_cap: int = DEFAULT_GRAPH_VERTEX_CAP
) -> Graph:
    """Compressed graph of a product of k integral domains.

    Every annihilator class is determined by the support of its elements,
    so vertices are the 0/1 support vectors other than all-zero and
    all-one.  Two supports are adjacent iff their union misses a
    coordinate: the complements then share a coordinate, which carries a
    common nonzero annihilator.
    """
    if k < 2:
        raise ValueError("need at least 2 factors")
    n_vertices = 2**k - 2
    if n_vertices > vertex_cap:
        raise CapExceededError(f"{n_vertices} vertices above graph cap {vertex_cap}")
    verts = [v for v in cartesian((0, 1), repeat=k) if 0 < sum(v) < k]
    verts.sort()
    edges = [
        (i, j)
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
        if any(a == 0 and b == 0 for a, b in zip(verts[i], verts[j]))
    ]
    return Graph(labels=["".join(map(str, v)) for v in verts], edges=edges)


# ---------------------------------------------------------------------------
# serialization


def graph_to_dot(graph: Graph, name: str = "IA") -> str:
    """DOT text: sorted vertex lines, then each edge once in sorted label order."""
    lines = [f"graph {name} {{"]
    for label in sorted(graph.labels):
        lines.append(f'  "{label}";')
    edge_pairs = sorted(
        tuple(sorted((graph.labels[i], graph.labels[j]))) for i, j in graph.edges()
    )
    for a, b in edge_pairs:
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json_dict(graph: Graph, ring: str, graph_kind: str) -> dict:
    return {
        "ring": ring,
        "graph_kind": graph_kind,
        "vertices": [
            {"label": lab, "class_size": size}
            for lab, size in zip(graph.labels, graph.class_sizes)
        ],
        "edges": [[i, j] for i, j in graph.edges()],
    }
