"""Undirected simple graphs and the constructions everything else consumes.

Vertices are the integers 0..n-1.  Edges are pairs (u, v) with u < v, stored
sorted lexicographically.  That single canonical order propagates everywhere:
line-graph vertex numbering, polynomial factor order, orientation bit order,
so results are reproducible byte for byte.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import SizeGuardExceeded

# Default guards for the exact searches in this module.  Callers may pass
# larger bounds explicitly; the defaults fail loudly rather than run away.
EDGE_COLOR_GUARD = 24
FACTORIZATION_GUARD = 12

Edge = tuple[int, int]


class Graph:
    """Immutable simple graph on vertices 0..n-1 with a canonical edge list."""

    __slots__ = ("n", "edges", "labels", "_adj")

    def __init__(self, n: int, edges, labels=None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = []
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if not (0 <= u and v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            canon.append((u, v))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        self.n = n
        self.edges = tuple(canon)
        self.labels = tuple(labels) if labels is not None else None
        self._adj = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> tuple[frozenset, ...]:
        if self._adj is None:
            adj = [set() for _ in range(self.n)]
            for u, v in self.edges:
                adj[u].add(v)
                adj[v].add(u)
            self._adj = tuple(frozenset(s) for s in adj)
        return self._adj

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency()[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency()[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency())

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency()[u] if 0 <= u < self.n else False

    def edge_index(self) -> dict[Edge, int]:
        """Canonical edge -> position in the sorted edge list."""
        return {e: i for i, e in enumerate(self.edges)}

    def is_regular(self) -> bool:
        degs = self.degrees()
        return len(set(degs)) <= 1

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum vertex."""
        seen = [False] * self.n
        adj = self.adjacency()
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def induced(self, vertices) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph plus the old->new vertex map."""
        vs = sorted(set(vertices))
        remap = {v: i for i, v in enumerate(vs)}
        sub = [(remap[u], remap[v]) for u, v in self.edges if u in remap and v in remap]
        return Graph(len(vs), sub), remap

    def relabel(self, perm) -> "Graph":
        """Image under the vertex permutation perm (old index -> new index)."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class VertexRole:
    """Provenance of one vertex in a subdivision or total graph."""

    vertex: int
    role: str  # "original" | "edge"
    source: int | Edge

    def to_json_obj(self):
        src = self.source if self.role == "original" else list(self.source)
        return {"vertex": self.vertex, "role": self.role, "source": src}


@dataclass(frozen=True)
class VertexRoleMap:
    roles: tuple[VertexRole, ...]

    def originals(self) -> tuple[int, ...]:
        return tuple(r.vertex for r in self.roles if r.role == "original")

    def edge_vertices(self) -> tuple[int, ...]:
        return tuple(r.vertex for r in self.roles if r.role == "edge")

    def to_json_obj(self):
        return [r.to_json_obj() for r in self.roles]


@dataclass(frozen=True)
class OneFactorization:
    """Partition of a regular graph's edges into perfect matchings."""

    factors: tuple[tuple[Edge, ...], ...]

    def validate(self, graph: Graph) -> bool:
        """Re-check the defining properties against graph, post hoc."""
        seen = set()
        for factor in self.factors:
            touched = set()
            for u, v in factor:
                if (u, v) in seen or not graph.has_edge(u, v):
                    return False
                seen.add((u, v))
                if u in touched or v in touched:
                    return False
                touched.update((u, v))
            if len(touched) != graph.n:
                return False
        return len(seen) == graph.m


@dataclass(frozen=True)
class ChromaticIndexResult:
    class_number: int  # 1 if chi' = Delta, else 2 (Vizing)
    chromatic_index: int
    coloring: tuple[int, ...] | None  # per-edge colors witnessing chi'


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def line_graph(g: Graph) -> tuple[Graph, dict[Edge, int]]:
    """Line graph of g plus the bijection edge-of-g -> vertex index.

    Vertices of the result are g's edges in canonical order; two are adjacent
    exactly when the edges share an endpoint.
    """
    edges_of_g = g.edges
    index = {e: i for i, e in enumerate(edges_of_g)}
    out = []
    for i in range(len(edges_of_g)):
        a, b = edges_of_g[i]
        for j in range(i + 1, len(edges_of_g)):
            c, d = edges_of_g[j]
            if a == c or a == d or b == c or b == d:
                out.append((i, j))
    return Graph(len(edges_of_g), out), index


def subdivision_graph(g: Graph) -> tuple[Graph, VertexRoleMap]:
    """Replace every edge of g with a path of length two through a new vertex.

    Originals keep their ids 0..n-1; the edge-vertex for the i-th canonical
    edge is n+i.  The result is bipartite with every edge-vertex of degree 2.
    """
    n = g.n
    out = []
    roles = [VertexRole(v, "original", v) for v in range(n)]
    for i, (u, v) in enumerate(g.edges):
        w = n + i
        out.append((u, w))
        out.append((v, w))
        roles.append(VertexRole(w, "edge", (u, v)))
    labels = [f"v{v}" for v in range(n)] + [f"e({u},{v})" for u, v in g.edges]
    return Graph(n + g.m, out, labels=labels), VertexRoleMap(tuple(roles))


def total_graph(g: Graph) -> tuple[Graph, VertexRoleMap]:
    """Square of the subdivision graph, on the same vertex ids.

    Restricted to originals it is g; restricted to edge-vertices it is the
    line graph; the cross edges are exactly the subdivision's edges.
    """
    s, roles = subdivision_graph(g)
    n = g.n
    out = list(s.edges)
    out.extend(g.edges)
    lg, _ = line_graph(g)
    out.extend((n + a, n + b) for a, b in lg.edges)
    return Graph(n + g.m, out, labels=s.labels), roles


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shifted = [(a.n + u, a.n + v) for u, v in b.edges]
    return Graph(a.n + b.n, list(a.edges) + shifted)


def disjoint_double(g: Graph) -> Graph:
    """Two disjoint copies of g; vertex i of the second copy is n+i."""
    return disjoint_union(g, g)


def round_robin_factorization(c: int) -> list[list[Edge]]:
    """The circle-method one-factorization of the complete graph K_c, c even.

    Factor r pairs c-1 with r and folds the remaining indices symmetrically
    around r.  Deterministic, and the c-1 factors partition all pairs.
    """
    if c % 2 != 0 or c < 2:
        raise ValueError("round robin needs an even number of players")
    factors = []
    for r in range(c - 1):
        pairs = [tuple(sorted((c - 1, r)))]
        for i in range(1, c // 2):
            x = (r + i) % (c - 1)
            y = (r - i) % (c - 1)
            pairs.append(tuple(sorted((x, y))))
        factors.append(sorted(pairs))
    return factors


def regular_embed_class1(
    g: Graph, max_edges: int = EDGE_COLOR_GUARD
) -> tuple[Graph, dict[int, int]]:
    """Embed a class-1 graph into a Delta-regular host, plus the embedding map.

    Takes c disjoint copies of g (c = Delta, or Delta+1 if Delta is odd, so c
    is even) and repairs every deficient vertex with cross edges: vertex v
    with deficiency d gets, across its c copies, the first d factors of the
    round-robin one-factorization of the copy-index set.  Each copy of v gains
    exactly d edges, so the host is Delta-regular, and g sits inside as the
    induced subgraph on copy 0.
    """
    degs = g.degrees()
    d = g.max_degree()
    if d < 1:
        raise ValueError("need at least one edge")
    if 0 in degs:
        raise ValueError("isolated vertices cannot be repaired to degree Delta")
    cls = chromatic_index_class(g, max_edges=max_edges)
    if cls.class_number != 1:
        raise ValueError("input must be class 1")
    c = d if d % 2 == 0 else d + 1
    n = g.n
    out = []
    for j in range(c):
        out.extend((j * n + u, j * n + v) for u, v in g.edges)
    factors = round_robin_factorization(c) if c >= 2 else []
    for v in range(n):
        need = d - degs[v]
        for factor in factors[:need]:
            out.extend((a * n + v, b * n + v) for a, b in factor)
    host = Graph(c * n, out)
    embedding = {v: v for v in range(n)}
    return host, embedding


def class2_augment(
    g: Graph, max_edges: int = EDGE_COLOR_GUARD
) -> tuple[Graph, int]:
    """Attach a pendant vertex to a maximum-degree vertex of a class-2 graph.

    The attachment point is the smallest-index vertex of degree Delta, which
    forces the result to have maximum degree Delta+1; a (Delta+1)-edge-coloring
    of g leaves a free color there, so the result is class 1.
    """
    cls = chromatic_index_class(g, max_edges=max_edges)
    if cls.class_number != 2:
        raise ValueError("input is class 1; augmentation is for class-2 graphs only")
    d = g.max_degree()
    v = min(w for w in range(g.n) if g.degree(w) == d)
    return Graph(g.n + 1, list(g.edges) + [(v, g.n)]), v


# ---------------------------------------------------------------------------
# exact edge coloring and one-factorization
# ---------------------------------------------------------------------------


def edge_coloring(g: Graph, k: int, max_edges: int = EDGE_COLOR_GUARD):
    """A proper k-edge-coloring as a per-edge color tuple, or None.

    Backtracking over edges in canonical order, smallest feasible color first,
    with new colors introduced in order (color symmetry breaking).
    """
    if g.m > max_edges:
        raise SizeGuardExceeded(f"edge coloring guard: m={g.m} > {max_edges}")
    if k < 0:
        return None
    m = g.m
    if m == 0:
        return ()
    used = [0] * g.n  # bitmask of colors present at each vertex
    colors = [-1] * m
    edges = g.edges

    def rec(i: int, introduced: int) -> bool:
        if i == m:
            return True
        u, v = edges[i]
        occupied = used[u] | used[v]
        top = min(k, introduced + 1)
        for c in range(top):
            bit = 1 << c
            if occupied & bit:
                continue
            used[u] |= bit
            used[v] |= bit
            colors[i] = c
            if rec(i + 1, max(introduced, c + 1)):
                return True
            used[u] &= ~bit
            used[v] &= ~bit
            colors[i] = -1
        return False

    return tuple(colors) if rec(0, 0) else None


def chromatic_index_class(
    g: Graph, max_edges: int = EDGE_COLOR_GUARD
) -> ChromaticIndexResult:
    """Decide class 1 versus class 2 by exact search for a Delta-edge-coloring.

    By Vizing the chromatic index is Delta or Delta+1, so one search settles
    it; the Delta+1 value is reported without a second search.
    """
    d = g.max_degree()
    if d == 0:
        return ChromaticIndexResult(1, 0, ())
    witness = edge_coloring(g, d, max_edges=max_edges)
    if witness is not None:
        return ChromaticIndexResult(1, d, witness)
    return ChromaticIndexResult(2, d + 1, None)


def _perfect_matchings(n: int, adj: list[set]):
    """Yield perfect matchings of the graph given by adj, lexicographically.

    Always matches the lowest unmatched vertex, trying partners in increasing
    order, so matchings appear in lexicographic order of their edge lists.
    """
    matched = [False] * n
    chosen: list[Edge] = []

    def rec(start: int):
        u = start
        while u < n and matched[u]:
            u += 1
        if u == n:
            yield tuple(chosen)
            return
        matched[u] = True
        for v in sorted(adj[u]):
            if not matched[v]:
                matched[v] = True
                chosen.append((u, v))
                yield from rec(u + 1)
                chosen.pop()
                matched[v] = False
        matched[u] = False

    yield from rec(0)


def one_factorization(
    g: Graph, max_n: int = FACTORIZATION_GUARD
) -> OneFactorization | None:
    """First one-factorization in lexicographic order, or None if none exists.

    None is the definitive negative for regular graphs of even order, and is
    returned immediately for odd order or irregular input.  Backtracks over
    perfect matchings; removing one from an r-regular graph leaves an
    (r-1)-regular graph, so the recursion depth is exactly Delta.
    """
    if g.n > max_n:
        raise SizeGuardExceeded(f"factorization guard: n={g.n} > {max_n}")
    if not g.is_regular() or g.n % 2 == 1:
        return None
    d = g.max_degree()
    if d == 0:
        return OneFactorization(())
    adj = [set(s) for s in g.adjacency()]
    acc: list[tuple[Edge, ...]] = []

    def rec(level: int) -> bool:
        if level == d:
            return True
        for pm in _perfect_matchings(g.n, adj):
            for u, v in pm:
                adj[u].discard(v)
                adj[v].discard(u)
            acc.append(pm)
            if rec(level + 1):
                return True
            acc.pop()
            for u, v in pm:
                adj[u].add(v)
                adj[v].add(u)
        return False

    if rec(0):
        return OneFactorization(tuple(acc))
    return None


# ---------------------------------------------------------------------------
# small named graphs
# ---------------------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


_SPECIALS = {
    "petersen": petersen_graph,
    "paw": lambda: Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)]),
    "diamond": lambda: Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    "bull": lambda: Graph(5, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)]),
}


def named_graph(name: str) -> Graph:
    """Small-graph registry: K5, C4, P3, K2,3, 2K2, petersen, paw, ..."""
    key = name.strip()
    if key.lower() in _SPECIALS:
        return _SPECIALS[key.lower()]()
    mm = re.fullmatch(r"(\d+)K(\d+)", key)
    if mm:
        copies, size = int(mm.group(1)), int(mm.group(2))
        g = complete_graph(size)
        out = Graph(0, [])
        for _ in range(copies):
            out = disjoint_union(out, g)
        return out
    mm = re.fullmatch(r"K(\d+),(\d+)", key)
    if mm:
        return complete_bipartite(int(mm.group(1)), int(mm.group(2)))
    mm = re.fullmatch(r"([KCP])(\d+)", key)
    if mm:
        kind, size = mm.group(1), int(mm.group(2))
        if kind == "K":
            return complete_graph(size)
        if kind == "C":
            return cycle_graph(size)
        return path_graph(size)
    raise ValueError(f"unknown graph name: {name!r}")


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def to_edge_list_text(g: Graph) -> str:
    """Canonical edge-list text: 'n m' then one 'u v' line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list_text(text: str) -> Graph:
    rows = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


def to_dot(g: Graph, name: str = "G") -> str:
    """Graphviz DOT text for visual inspection."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = g.labels[v] if g.labels else str(v)
        lines.append(f'  {v} [label="{label}"];')
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
