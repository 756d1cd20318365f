"""Graph families under study and the structural queries everything else uses.

Graphs are immutable simple undirected graphs over vertex labels
0 .. n_vertices-1, stored as sorted per-vertex neighbor tuples.  The module
generates plain cycles, cartesian products of cycles (toroidal grids, labeled
row-major), and cycle powers (circulants), and realizes a ``FamilySpec`` into
the concrete graph it names.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InvalidParameterError

# Family tags accepted by FamilySpec / the CLI.
C3XC = "c3xc"  # C3 x Cn
C4XC = "c4xc"  # C4 x Cn
POW2 = "pow2"  # Cn^2
POW3 = "pow3"  # Cn^3
POWM = "powm"  # Cn^m, m arbitrary

_FAMILY_KINDS = (C3XC, C4XC, POW2, POW3, POWM)
_MIN_N = {C3XC: 3, C4XC: 4, POW2: 4, POW3: 5, POWM: 3}


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with contiguous integer labels."""

    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.adjacency)
        for v, nbrs in enumerate(self.adjacency):
            last = -1
            for u in nbrs:
                if not 0 <= u < n:
                    raise InvalidParameterError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise InvalidParameterError(f"self-loop at vertex {v}")
                if u <= last:
                    raise InvalidParameterError(f"adjacency of {v} not sorted/unique")
                last = u
                if v < u and not self.has_edge(u, v):
                    raise InvalidParameterError(f"edge {v}-{u} has no mirror entry")

    @property
    def n_vertices(self) -> int:
        return len(self.adjacency)

    @cached_property
    def n_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adjacency), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        lo, hi = 0, len(nbrs)
        while lo < hi:
            mid = (lo + hi) // 2
            if nbrs[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(nbrs) and nbrs[lo] == v

    def vertices(self) -> range:
        return range(self.n_vertices)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if u > v:
                    yield (v, u)

    @staticmethod
    def from_edges(n_vertices: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; symmetry is implied, duplicates collapse."""
        if n_vertices < 0:
            raise InvalidParameterError("n_vertices must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(n_vertices)]
        for u, v in edges:
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise InvalidParameterError(f"edge ({u},{v}) out of range")
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return Graph(tuple(tuple(sorted(s)) for s in nbrs))


@dataclass(frozen=True)
class TorusCoord:
    """(row, col) position on an m-by-n torus; label = row * n_cols + col."""

    row: int
    col: int

    def label(self, n_cols: int) -> int:
        return self.row * n_cols + self.col


def torus_coord(label: int, n_cols: int) -> TorusCoord:
    return TorusCoord(label // n_cols, label % n_cols)


@dataclass(frozen=True)
class FamilySpec:
    """One instance of a supported graph family.

    kind is one of "c3xc", "c4xc", "pow2", "pow3", "powm"; n is the cycle
    length; m is the power exponent and only present for kind "powm".
    """

    kind: str
    n: int
    m: int | None = field(default=None)

    def __post_init__(self):
        if self.kind not in _FAMILY_KINDS:
            raise InvalidParameterError(f"unknown family kind {self.kind!r}")
        if self.n < _MIN_N[self.kind]:
            raise InvalidParameterError(
                f"family {self.kind!r} needs n >= {_MIN_N[self.kind]}, got {self.n}"
            )
        if self.kind == POWM:
            if self.m is None or self.m < 1:
                raise InvalidParameterError("powm needs a power m >= 1")
        elif self.m is not None:
            raise InvalidParameterError(f"family {self.kind!r} takes no power parameter")

    @staticmethod
    def c3xc(n: int) -> "FamilySpec":
        return FamilySpec(C3XC, n)

    @staticmethod
    def c4xc(n: int) -> "FamilySpec":
        return FamilySpec(C4XC, n)

    @staticmethod
    def pow2(n: int) -> "FamilySpec":
        return FamilySpec(POW2, n)

    @staticmethod
    def pow3(n: int) -> "FamilySpec":
        return FamilySpec(POW3, n)

    @staticmethod
    def powm(n: int, m: int) -> "FamilySpec":
        return FamilySpec(POWM, n, m)

    @property
    def power(self) -> int | None:
        """Effective power exponent for cycle-power families, else None."""
        if self.kind == POW2:
            return 2
        if self.kind == POW3:
            return 3
        if self.kind == POWM:
            return self.m
        return None

    @property
    def torus_rows(self) -> int | None:
        """Number of torus rows for product families, else None."""
        if self.kind == C3XC:
            return 3
        if self.kind == C4XC:
            return 4
        return None

    def describe(self) -> str:
        if self.kind == C3XC:
            return f"C3 x C{self.n}"
        if self.kind == C4XC:
            return f"C4 x C{self.n}"
        return f"C{self.n}^{self.power}"


def make_cycle(n: int) -> Graph:
    """The cycle graph on n >= 3 vertices, i adjacent to (i +- 1) mod n."""
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    return Graph(tuple(tuple(sorted(((i - 1) % n, (i + 1) % n))) for i in range(n)))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; (u, v) maps to label u * h.n_vertices + v."""
    if g.n_vertices == 0 or h.n_vertices == 0:
        raise InvalidParameterError("cartesian product of an empty graph")
    nh = h.n_vertices
    adjacency = []
    for u in g.vertices():
        for v in h.vertices():
            row = [u * nh + w for w in h.neighbors(v)]
            row.extend(t * nh + v for t in g.neighbors(u))
            adjacency.append(tuple(sorted(row)))
    return Graph(tuple(adjacency))


def bfs_distances(g: Graph, source: int) -> list[int]:
    """BFS distances from source; unreachable vertices get -1."""
    dist = [-1] * g.n_vertices
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n_vertices == 0:
        return True
    return bfs_distances(g, 0).count(-1) == 0


def graph_power(g: Graph, k: int) -> Graph:
    """Same vertices; uv is an edge iff 1 <= dist_g(u, v) <= k.

    Cross-component distances are infinite, so components never merge.
    """
    if k < 1:
        raise InvalidParameterError(f"power exponent must be >= 1, got {k}")
    adjacency = []
    for v in g.vertices():
        dist = bfs_distances(g, v)
        adjacency.append(tuple(u for u in g.vertices() if 0 < dist[u] <= k))
    return Graph(tuple(adjacency))


def make_cycle_power(n: int, m: int) -> Graph:
    """Circulant form of the m-th power of Cn: i ~ j iff cyclic distance in [1, m]."""
    if n < 3:
        raise InvalidParameterError(f"cycle power needs n >= 3, got {n}")
    if m < 1:
        raise InvalidParameterError(f"cycle power needs m >= 1, got {m}")
    reach = min(m, n // 2)
    adjacency = []
    for i in range(n):
        nbrs = set()
        for d in range(1, reach + 1):
            nbrs.add((i + d) % n)
            nbrs.add((i - d) % n)
        adjacency.append(tuple(sorted(nbrs)))
    return Graph(tuple(adjacency))


def realize(spec: FamilySpec) -> Graph:
    """The concrete graph a FamilySpec names, with deterministic labels."""
    if spec.kind == C3XC:
        return cartesian_product(make_cycle(3), make_cycle(spec.n))
    if spec.kind == C4XC:
        return cartesian_product(make_cycle(4), make_cycle(spec.n))
    return make_cycle_power(spec.n, spec.power)


def adjacency_dump(g: Graph) -> str:
    """Plain-text adjacency listing, one `label: n1 n2 ...` line per vertex."""
    lines = [f"{v}: {' '.join(map(str, g.neighbors(v)))}" for v in g.vertices()]
    return "\n".join(lines) + "\n"


def to_dot(
    g: Graph,
    highlight: frozenset[int] | set[int] = frozenset(),
    torus_rows: int | None = None,
    name: str = "G",
) -> str:
    """DOT rendering with the highlighted set filled and doubly circled.

    Edges of the subgraph induced by the non-highlighted vertices are drawn
    thick; edges incident to highlighted vertices thin.  For torus layouts
    vertices carry pinned grid positions usable by neato.
    """
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    n_cols = g.n_vertices // torus_rows if torus_rows else 0
    for v in g.vertices():
        attrs = []
        if torus_rows:
            attrs.append(f'pos="{v % n_cols},{v // n_cols}!"')
        if v in highlight:
            attrs.append("style=filled fillcolor=gray80 peripheries=2")
        lines.append(f"  {v} [{' '.join(attrs)}];" if attrs else f"  {v};")
    for u, v in g.edges():
        if u in highlight or v in highlight:
            lines.append(f"  {u} -- {v} [penwidth=0.5];")
        else:
            lines.append(f"  {u} -- {v} [penwidth=2.5];")
    lines.append("}")
    return "\n".join(lines) + "\n"
