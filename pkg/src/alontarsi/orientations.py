"""Orientations, Eulerian subdigraph censuses, and the orientation route to
the Alon-Tarsi number.

An Eulerian subdigraph here is any arc subset with indegree equal to
outdegree at every vertex; it need not be connected, untouched vertices are
fine, and the empty subset counts (it is even).  An orientation is Alon-Tarsi
when its even and odd censuses differ; every acyclic orientation qualifies,
since only the empty subset balances.

This module is deliberately naive: plain enumeration over orientations and
arc subsets, with feasibility pruning only.  It is the trusted oracle the
polynomial route is checked against, so it gets no symmetry cleverness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeGuardExceeded
from .graphs import Graph
from .polynomials import AtnCertificate, coefficient_of

CENSUS_GUARD = 22


@dataclass(frozen=True)
class Orientation:
    """Direction bits over the canonical edge list: 0 is u->v, 1 is v->u."""

    graph: Graph
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != self.graph.m:
            raise ValueError("one direction bit per edge required")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("direction bits must be 0 or 1")

    @classmethod
    def from_int(cls, graph: Graph, value: int) -> "Orientation":
        return cls(graph, tuple((value >> i) & 1 for i in range(graph.m)))

    def to_int(self) -> int:
        out = 0
        for i, b in enumerate(self.bits):
            out |= b << i
        return out

    def bits_hex(self) -> str:
        return format(self.to_int(), "#x")

    def arcs(self) -> tuple[tuple[int, int], ...]:
        """Directed (tail, head) pairs in canonical edge order."""
        out = []
        for (u, v), b in zip(self.graph.edges, self.bits):
            out.append((v, u) if b else (u, v))
        return tuple(out)

    def outdegrees(self) -> tuple[int, ...]:
        degs = [0] * self.graph.n
        for tail, _ in self.arcs():
            degs[tail] += 1
        return tuple(degs)

    def reversed(self) -> "Orientation":
        return Orientation(self.graph, tuple(1 - b for b in self.bits))


@dataclass(frozen=True)
class EulerianCensus:
    even: int
    odd: int

    @property
    def difference(self) -> int:
        return abs(self.even - self.odd)

    @property
    def alon_tarsi(self) -> bool:
        return self.even != self.odd


def eulerian_census(d: Orientation, max_edges: int = CENSUS_GUARD) -> EulerianCensus:
    """Count even- and odd-arc Eulerian subdigraphs of the orientation.

    Recursive arc-by-arc inclusion/exclusion.  bal tracks out minus in over
    included arcs; a branch dies as soon as some vertex's imbalance exceeds
    its count of still-undecided incident arcs, so every completion that
    survives is balanced.
    """
    m = d.graph.m
    if m > max_edges:
        raise SizeGuardExceeded(f"census guard: m={m} > {max_edges}")
    arcs = d.arcs()
    n = d.graph.n
    rem = [0] * n
    for t, h in arcs:
        rem[t] += 1
        rem[h] += 1
    bal = [0] * n
    counts = [0, 0]

    def rec(i: int, parity: int):
        if i == m:
            counts[parity] += 1
            return
        t, h = arcs[i]
        rem[t] -= 1
        rem[h] -= 1
        if abs(bal[t]) <= rem[t] and abs(bal[h]) <= rem[h]:
            rec(i + 1, parity)
        bal[t] += 1
        bal[h] -= 1
        if abs(bal[t]) <= rem[t] and abs(bal[h]) <= rem[h]:
            rec(i + 1, parity ^ 1)
        bal[t] -= 1
        bal[h] += 1
        rem[t] += 1
        rem[h] += 1

    rec(0, 0)
    return EulerianCensus(counts[0], counts[1])


def is_alon_tarsi(d: Orientation, max_edges: int = CENSUS_GUARD) -> bool:
    return eulerian_census(d, max_edges=max_edges).alon_tarsi


def atn_from_orientations(
    g: Graph, max_edges: int = CENSUS_GUARD
) -> tuple[int, AtnCertificate]:
    """Alon-Tarsi number as 1 + the least maximum outdegree over Alon-Tarsi
    orientations, with the first such orientation (in bit-vector order) as
    the certificate.

    Walks the 2^m orientations as a binary tree in bit order, pruning any
    subtree whose partial maximum outdegree already matches the incumbent.
    There is always an acyclic orientation, so an optimum exists.
    """
    m = g.m
    if m > max_edges:
        raise SizeGuardExceeded(f"orientation guard: m={m} > {max_edges}")
    edges = g.edges
    out = [0] * g.n
    best_value = m + 2
    best_bits: tuple[int, ...] | None = None
    best_census: EulerianCensus | None = None
    bits = [0] * m

    def rec(i: int, partial_max: int):
        nonlocal best_value, best_bits, best_census
        if partial_max >= best_value:
            return
        if i == m:
            cand = Orientation(g, tuple(bits))
            census = eulerian_census(cand, max_edges=max_edges)
            if census.alon_tarsi:
                best_value = partial_max
                best_bits = tuple(bits)
                best_census = census
            return
        u, v = edges[i]
        for b, tail in ((0, u), (1, v)):
            out[tail] += 1
            if out[tail] < best_value:
                bits[i] = b
                rec(i + 1, max(partial_max, out[tail]))
            out[tail] -= 1
        bits[i] = 0

    rec(0, 0)
    cert = AtnCertificate(
        kind="orientation",
        atn=best_value + 1,
        bits=best_bits,
        arcs=Orientation(g, best_bits).arcs(),
        census=(best_census.even, best_census.odd),
    )
    return best_value + 1, cert


def duality_check(g: Graph, d: Orientation, max_edges: int = CENSUS_GUARD) -> bool:
    """Cross-validate the two Alon-Tarsi-number definitions on one orientation.

    The graph polynomial coefficient at the orientation's outdegree vector
    must match the census difference in absolute value.
    """
    census = eulerian_census(d, max_edges=max_edges)
    return abs(coefficient_of(g, d.outdegrees())) == census.difference


def orientation_census_table(
    g: Graph, max_edges: int = 16
) -> tuple[list[int], list[int]]:
    """Eulerian censuses of every orientation at once: (even, odd) tables
    indexed by the orientation's bit-vector integer.

    Works from circulations instead of orientations: a balanced arc subset
    needs even undirected degree everywhere, so candidate supports are
    exactly the cycle space.  Each balanced direction assignment d on support
    S is Eulerian in every orientation agreeing with d on S, and those are
    spread to the tables by supermask enumeration.  Used by the bulk duality
    campaign; eulerian_census is the per-orientation reference it is tested
    against.
    """
    m = g.m
    if m > max_edges:
        raise SizeGuardExceeded(f"census table guard: m={m} > {max_edges}")
    n = g.n
    full = (1 << m) - 1
    inc = [0] * n
    low = [0] * n  # edges where the vertex is the smaller endpoint
    high = [0] * n
    for e, (u, v) in enumerate(g.edges):
        inc[u] |= 1 << e
        inc[v] |= 1 << e
        low[u] |= 1 << e
        high[v] |= 1 << e

    # cycle space basis from a spanning forest
    parent = {}
    parent_edge = {}
    adj = [[] for _ in range(n)]
    for e, (u, v) in enumerate(g.edges):
        adj[u].append((v, e))
        adj[v].append((u, e))
    tree_edges = set()
    for root in range(n):
        if root in parent:
            continue
        parent[root] = root
        parent_edge[root] = -1
        stack = [root]
        while stack:
            x = stack.pop()
            for y, e in adj[x]:
                if y not in parent:
                    parent[y] = x
                    parent_edge[y] = e
                    tree_edges.add(e)
                    stack.append(y)

    def path_to_root_mask(x: int) -> int:
        mask = 0
        while parent[x] != x:
            mask ^= 1 << parent_edge[x]
            x = parent[x]
        return mask

    basis = []
    for e, (u, v) in enumerate(g.edges):
        if e in tree_edges:
            continue
        basis.append((1 << e) ^ path_to_root_mask(u) ^ path_to_root_mask(v))

    supports = [0]
    for b in basis:
        supports.extend([s ^ b for s in supports])

    even = [0] * (1 << m)
    odd = [0] * (1 << m)
    for s in supports:
        verts = [v for v in range(n) if inc[v] & s]
        halves = [(inc[v] & s).bit_count() // 2 for v in verts]
        parity = s.bit_count() & 1
        table = odd if parity else even
        comp = full & ~s
        # enumerate direction assignments d on the support
        d = s
        while True:
            balanced = True
            for v, half in zip(verts, halves):
                flow = ((~d & low[v]) | (d & high[v])) & s
                if flow.bit_count() != half:
                    balanced = False
                    break
            if balanced:
                t = comp
                while True:
                    table[d | t] += 1
                    if t == 0:
                        break
                    t = (t - 1) & comp
            if d == 0:
                break
            d = (d - 1) & s
    return even, odd
