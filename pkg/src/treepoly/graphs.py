"""Labeled graphs with a fixed vertex order: tree families, spiders, clan graphs.

Everything downstream (weight-map enumeration, serialization, the class
partition audits) depends on the canonical vertex order of these builders,
so the order is part of each builder's contract and never changes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class Graph:
    """Immutable simple graph with sorted neighbor lists and unique labels."""

    __slots__ = ("n", "adj", "labels", "_by_label")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if labels is None:
            labels = tuple(f"u{i}" for i in range(n))
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise ValueError("label count does not match vertex count")
        if len(set(labels)) != n:
            raise ValueError("labels must be unique")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for i, j in edges:
            if i == j:
                raise ValueError("loops are not allowed")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i},{j}) out of range")
            nbrs[i].add(j)
            nbrs[j].add(i)
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.labels = labels
        self._by_label = {s: i for i, s in enumerate(labels)}

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (i, j) with i < j, sorted lexicographically."""
        return [(i, j) for i in range(self.n) for j in self.adj[i] if i < j]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def index_of(self, label: str) -> int:
        return self._by_label[label]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.adj, self.labels) == (other.n, other.adj, other.labels)

    def __hash__(self) -> int:
        return hash((self.n, self.adj, self.labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "labels": list(self.labels), "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Graph":
        return cls(data["n"], [tuple(e) for e in data["edges"]], data.get("labels"))


@dataclass(frozen=True)
class Bipartition:
    """Color class sizes of a connected bipartite graph, ordered p >= q."""

    p: int
    q: int

    def as_pair(self) -> tuple[int, int]:
        return (self.p, self.q)

    @property
    def unbalanced(self) -> bool:
        return self.p - self.q >= 2


# ---------------------------------------------------------------------------
# family builders


def t3mn(m: int, n: int) -> Graph:
    """Tree on 2m+2n+10 vertices: root v0 with branches v1 (3 legs), v2 (m legs),
    v3 (n legs), every leg a path head-foot.

    Canonical order: v0; v1,v2,v3; heads of branch 1; feet of branch 1;
    heads of branch 2; feet of branch 2; heads of branch 3; feet of branch 3.
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    lay = family_layout(m, n, star=False)
    return Graph(lay.size, lay.edge_list(), lay.label_list())


def t3mn_star(m: int, n: int) -> Graph:
    """t3mn(m, n) with the third leg of branch 1 extended by a path of two
    extra vertices x, y appended last in the order."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    lay = family_layout(m, n, star=True)
    return Graph(lay.size, lay.edge_list(), lay.label_list())


def spider2(n: int) -> Graph:
    """Spider with n legs of length two: order v0; v1..vn; v1'..vn'."""
    if n < 0:
        raise ValueError("leg count must be nonnegative")
    edges = []
    labels = ["v0"]
    for j in range(1, n + 1):
        labels.append(f"v{j}")
        edges.append((0, j))
    for j in range(1, n + 1):
        labels.append(f"v{j}'")
        edges.append((j, n + j))
    return Graph(2 * n + 1, edges, labels)


def spider12(k: int, r: int) -> Graph:
    """Spider with k legs of length one and r legs of length two.

    Order: center; the k pendant vertices; the r leg heads; the r leg feet.
    """
    if k < 0 or r < 0:
        raise ValueError("leg counts must be nonnegative")
    edges = []
    labels = ["v0"]
    for j in range(1, k + 1):
        labels.append(f"u{j}")
        edges.append((0, j))
    for j in range(1, r + 1):
        labels.append(f"w{j}")
        edges.append((0, k + j))
    for j in range(1, r + 1):
        labels.append(f"w{j}'")
        edges.append((k + j, k + r + j))
    return Graph(k + 2 * r + 1, edges, labels)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)], [f"p{i}" for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], [f"k{i}" for i in range(n)])


@dataclass(frozen=True)
class FamilyLayout:
    """Index bookkeeping for the two tree families.

    Branch i has leg_count(i) legs; head(i, j) and foot(i, j) use 1-based j.
    For the star variant the extra path vertices x, y sit at the end.
    """

    m: int
    n: int
    star: bool

    @property
    def size(self) -> int:
        return 2 * self.m + 2 * self.n + (12 if self.star else 10)

    @property
    def v0(self) -> int:
        return 0

    def branch(self, i: int) -> int:
        return i

    def leg_count(self, i: int) -> int:
        return (3, self.m, self.n)[i - 1]

    def head(self, i: int, j: int) -> int:
        base = (4, 10, 10 + 2 * self.m)[i - 1]
        return base + (j - 1)

    def foot(self, i: int, j: int) -> int:
        return self.head(i, j) + self.leg_count(i)

    @property
    def x(self) -> int:
        if not self.star:
            raise AttributeError("x exists only in the star family")
        return 2 * self.m + 2 * self.n + 10

    @property
    def y(self) -> int:
        return self.x + 1

    def slice_vertices(self, i: int) -> tuple[int, ...]:
        """Branch slice in spider order: center, heads ascending, feet ascending."""
        lc = self.leg_count(i)
        return (self.branch(i),) + tuple(self.head(i, j) for j in range(1, lc + 1)) + tuple(
            self.foot(i, j) for j in range(1, lc + 1)
        )

    def core_vertices(self) -> tuple[int, ...]:
        """All vertices except the star extension (the whole graph when not star)."""
        return tuple(range(2 * self.m + 2 * self.n + 10))

    def edge_list(self) -> list[tuple[int, int]]:
        edges = []
        for i in (1, 2, 3):
            edges.append((self.v0, self.branch(i)))
            for j in range(1, self.leg_count(i) + 1):
                edges.append((self.branch(i), self.head(i, j)))
                edges.append((self.head(i, j), self.foot(i, j)))
        if self.star:
            edges.append((self.foot(1, 3), self.x))
            edges.append((self.x, self.y))
        return edges

    def label_list(self) -> list[str]:
        labels = ["v0", "v1", "v2", "v3"]
        for j in range(1, 4):
            labels.append(f"v1{j}")
        for j in range(1, 4):
            labels.append(f"v1{j}'")
        for j in range(1, self.m + 1):
            labels.append(f"v2{j}")
        for j in range(1, self.m + 1):
            labels.append(f"v2{j}'")
        for j in range(1, self.n + 1):
            labels.append(f"v3{j}")
        for j in range(1, self.n + 1):
            labels.append(f"v3{j}'")
        if self.star:
            labels.extend(["x", "y"])
        return labels


def family_layout(m: int, n: int, star: bool = False) -> FamilyLayout:
    return FamilyLayout(m, n, star)


# ---------------------------------------------------------------------------
# structural operations


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, each sorted, ordered by minimum."""
    seen = bytearray(g.n)
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = 1
        stack = [start]
        comp = [start]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = 1
                    stack.append(w)
                    comp.append(w)
        out.append(tuple(sorted(comp)))
    return out


def two_coloring(g: Graph) -> Optional[tuple[int, ...]]:
    """A proper 2-coloring with each component's smallest vertex colored 0,
    or None if some component has an odd cycle."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            cu = color[u]
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - cu
                    stack.append(w)
                elif color[w] == cu:
                    return None
    return tuple(color)


def bipartition_of(g: Graph, component: Iterable[int]) -> Optional[Bipartition]:
    """Bipartition sizes of one connected component, or None on an odd cycle.

    The result is swap stable: it does not depend on which side the coloring
    starts from.
    """
    comp = sorted(component)
    if not comp:
        return None
    color = {comp[0]: 0}
    stack = [comp[0]]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in color:
                color[w] = 1 - color[u]
                stack.append(w)
            elif color[w] == color[u]:
                return None
    if set(color) != set(comp):
        raise ValueError("vertex set is not a connected component")
    ones = sum(color[v] for v in comp)
    zeros = len(comp) - ones
    return Bipartition(max(zeros, ones), min(zeros, ones))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on the given vertices, order and labels inherited."""
    verts = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(verts)}
    edges = [
        (pos[u], pos[w]) for u in verts for w in g.adj[u] if u < w and w in pos
    ]
    return Graph(len(verts), edges, [g.labels[v] for v in verts])


def is_forest(g: Graph) -> bool:
    comps = connected_components(g)
    return g.edge_count == g.n - len(comps) and two_coloring(g) is not None


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    """Disjoint union; labels get a per-part prefix to stay unique."""
    edges: list[tuple[int, int]] = []
    labels: list[str] = []
    offset = 0
    for idx, g in enumerate(parts):
        labels.extend(f"c{idx}.{s}" for s in g.labels)
        edges.extend((offset + i, offset + j) for i, j in g.edges())
        offset += g.n
    return Graph(offset, edges, labels)


def clan_graph(g: Graph, weights: Sequence[int]) -> Graph:
    """Blow each vertex v up into a clique of size weights[v], joining the
    cliques of adjacent vertices completely.

    Clan vertices are ordered by (owner vertex, copy index) and labeled
    "<owner label>^(i)" so ownership is recoverable from the label.
    """
    if len(weights) != g.n:
        raise ValueError("weight map length does not match vertex count")
    if any(a < 0 for a in weights):
        raise ValueError("weights must be nonnegative")
    offsets = []
    total = 0
    for v in range(g.n):
        offsets.append(total)
        total += weights[v]
    labels = [
        f"{g.labels[v]}^({i + 1})" for v in range(g.n) for i in range(weights[v])
    ]
    edges = []
    for v in range(g.n):
        base = offsets[v]
        for a in range(weights[v]):
            for b in range(a + 1, weights[v]):
                edges.append((base + a, base + b))
        for w in g.adj[v]:
            if w < v:
                continue
            wbase = offsets[w]
            for a in range(weights[v]):
                for b in range(weights[w]):
                    edges.append((base + a, wbase + b))
    return Graph(total, edges, labels)


def clan_owners(g: Graph, weights: Sequence[int]) -> tuple[int, ...]:
    """Owner vertex of each clan vertex, in clan order."""
    return tuple(v for v in range(g.n) for _ in range(weights[v]))
