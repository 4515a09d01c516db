"""Simple graphs on prime-labeled vertices, plus the exact searches the
n-exactness test needs: maximum clique, odd cycles, bipartiteness,
Hamiltonicity, components, and brute-force isomorphism for small instances.

Graphs are immutable after construction.  Every search is deterministic:
ties break by ascending vertex order, so identical inputs give identical
certificates.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import BadParameter, TooLarge, UnknownVertex, VertexClash
from .numtheory import is_prime

MAX_CLIQUE_VERTICES = 64
MAX_CYCLE_VERTICES = 25
MAX_HAMILTON_VERTICES = 20
MAX_ISO_VERTICES = 8


class PrimeGraph:
    """Immutable simple graph whose vertices are primes.

    Edges are stored canonically as (smaller, larger) pairs; equality and
    hashing are structural (same vertex set, same edge set).
    """

    __slots__ = ("vertices", "edges", "_adj")

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()) -> None:
        verts = tuple(sorted(set(vertices)))
        for v in verts:
            if not is_prime(v):
                raise BadParameter(f"vertex {v} is not prime")
        vset = set(verts)
        canon = set()
        for a, b in edges:
            if a == b:
                raise BadParameter(f"loop at vertex {a}")
            if a not in vset or b not in vset:
                raise UnknownVertex(f"edge ({a}, {b}) has an endpoint outside the vertex set")
            canon.add((a, b) if a < b else (b, a))
        self.vertices = verts
        self.edges = frozenset(canon)
        adj: dict[int, set[int]] = {v: set() for v in verts}
        for a, b in canon:
            adj[a].add(b)
            adj[b].add(a)
        self._adj = {v: frozenset(nbrs) for v, nbrs in adj.items()}

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(f"vertex {v} is not in the graph") from None

    def has_edge(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PrimeGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"PrimeGraph(vertices={self.vertices}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class CycleWitness:
    """A simple cycle given by its vertices in traversal order."""

    vertices_in_order: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices_in_order", tuple(self.vertices_in_order))
        if len(self.vertices_in_order) < 3:
            raise BadParameter("a cycle has at least 3 vertices")
        if len(set(self.vertices_in_order)) != len(self.vertices_in_order):
            raise BadParameter("cycle vertices must be distinct")

    @property
    def length(self) -> int:
        return len(self.vertices_in_order)

    def validates_in(self, g: PrimeGraph) -> bool:
        """True when every consecutive pair (cyclically) is an edge of g."""
        vs = self.vertices_in_order
        if any(v not in g for v in vs):
            return False
        return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


class KnFreeResult(NamedTuple):
    is_free: bool
    witness: tuple[int, ...] | None


class BipartiteResult(NamedTuple):
    is_bipartite: bool
    parts: tuple[tuple[int, ...], tuple[int, ...]] | None
    odd_cycle: CycleWitness | None


class HamiltonResult(NamedTuple):
    is_hamiltonian: bool
    cycle: CycleWitness | None


def complement(g: PrimeGraph) -> PrimeGraph:
    """Same vertices; an edge exactly where g has none."""
    edges = [
        (a, b)
        for a, b in itertools.combinations(g.vertices, 2)
        if not g.has_edge(a, b)
    ]
    return PrimeGraph(g.vertices, edges)


def induced_subgraph(g: PrimeGraph, subset: Iterable[int]) -> PrimeGraph:
    sub = set(subset)
    missing = sorted(sub - set(g.vertices))
    if missing:
        raise UnknownVertex(f"vertices {missing} are not in the graph")
    edges = [(a, b) for a, b in g.edges if a in sub and b in sub]
    return PrimeGraph(sub, edges)


def join(g1: PrimeGraph, g2: PrimeGraph) -> PrimeGraph:
    """Disjoint union plus every cross edge."""
    overlap = set(g1.vertices) & set(g2.vertices)
    if overlap:
        raise VertexClash(f"vertex sets overlap on {sorted(overlap)}")
    cross = [(a, b) for a in g1.vertices for b in g2.vertices]
    return PrimeGraph(g1.vertices + g2.vertices, list(g1.edges) + list(g2.edges) + cross)


def _masks(g: PrimeGraph) -> tuple[tuple[int, ...], list[int]]:
    verts = g.vertices
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for a, b in g.edges:
        i, j = index[a], index[b]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return verts, adj


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_number(adj: list[int], full: int) -> int:
    """Maximum clique size by branch and bound with a greedy coloring bound."""
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            if size > best:
                best = size
            return
        # greedy-color the candidates in ascending order; the color index
        # bounds the clique size reachable through each vertex
        classes: list[int] = []
        order: list[tuple[int, int]] = []
        for v in _bits(cand):
            for c, cls in enumerate(classes):
                if not (adj[v] & cls):
                    classes[c] |= 1 << v
                    order.append((c + 1, v))
                    break
            else:
                classes.append(1 << v)
                order.append((len(classes), v))
        order.sort()
        while order:
            color, v = order.pop()
            if size + color <= best:
                return
            expand(size + 1, cand & adj[v])
            cand &= ~(1 << v)

    expand(0, full)
    return best


def _lex_clique_of_size(adj: list[int], n: int, k: int) -> int:
    """Bitmask of the lexicographically least clique of size k (must exist)."""
    if k == 0:
        return 0

    def extend(chosen: int, cand: int, need: int) -> int | None:
        if need == 0:
            return chosen
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            nxt = cand & adj[v]
            if nxt.bit_count() >= need - 1:
                found = extend(chosen | (1 << v), nxt, need - 1)
                if found is not None:
                    return found
        return None

    result = extend(0, (1 << n) - 1, k)
    assert result is not None
    return result


def max_clique(g: PrimeGraph) -> tuple[int, ...]:
    """Lexicographically least maximum clique, as an ascending tuple."""
    if g.order > MAX_CLIQUE_VERTICES:
        raise TooLarge(f"clique search is capped at {MAX_CLIQUE_VERTICES} vertices, got {g.order}")
    if g.order == 0:
        return ()
    verts, adj = _masks(g)
    omega = _clique_number(adj, (1 << len(verts)) - 1)
    mask = _lex_clique_of_size(adj, len(verts), omega)
    return tuple(verts[i] for i in _bits(mask))


def is_kn_free(g: PrimeGraph, n: int) -> KnFreeResult:
    """Whether g contains no clique on n vertices; witness clique when it does."""
    if n < 2:
        raise BadParameter(f"clique-freeness needs n >= 2, got {n}")
    clique = max_clique(g)
    if len(clique) < n:
        return KnFreeResult(True, None)
    return KnFreeResult(False, clique[:n])


def is_bipartite(g: PrimeGraph) -> BipartiteResult:
    """2-colorability with certificate: the parts, or an odd cycle."""
    color: dict[int, int] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        parent: dict[int, int | None] = {root: None}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in sorted(g.neighbors(v)):
                if w not in color:
                    color[w] = color[v] ^ 1
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return BipartiteResult(False, None, _conflict_cycle(v, w, parent))
    part0 = tuple(v for v in g.vertices if color[v] == 0)
    part1 = tuple(v for v in g.vertices if color[v] == 1)
    return BipartiteResult(True, (part0, part1), None)


def _conflict_cycle(v: int, w: int, parent: dict[int, int | None]) -> CycleWitness:
    """Odd cycle through the offending edge (v, w) of a BFS tree."""

    def path_to_root(x: int) -> list[int]:
        path = [x]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])  # type: ignore[arg-type]
        return path

    pv, pw = path_to_root(v), path_to_root(w)
    ancestors = set(pv)
    lca = next(x for x in pw if x in ancestors)
    up = pv[: pv.index(lca) + 1]          # v .. lca
    down = pw[: pw.index(lca)][::-1]      # lca-child .. w
    return CycleWitness(tuple(up + down))


def longest_odd_cycle_at_least(g: PrimeGraph, min_length: int) -> CycleWitness | None:
    """First odd simple cycle of length >= min_length in canonical search
    order (ascending start vertex, ascending neighbor), or None.

    min_length must be an odd integer >= 3; even values are a caller error.
    """
    if g.order > MAX_CYCLE_VERTICES:
        raise TooLarge(f"cycle search is capped at {MAX_CYCLE_VERTICES} vertices, got {g.order}")
    if min_length < 3 or min_length % 2 == 0:
        raise BadParameter(f"cycle length target must be an odd integer >= 3, got {min_length}")
    if is_bipartite(g).is_bipartite:
        return None
    verts, adj = _masks(g)
    n = len(verts)
    path: list[int] = []

    def dfs(start: int, v: int, visited: int, allowed: int, length: int) -> bool:
        if length >= min_length and length % 2 == 1 and (adj[v] >> start) & 1:
            return True
        if length + (allowed & ~visited).bit_count() < min_length:
            return False
        cand = adj[v] & allowed & ~visited
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            path.append(w)
            if dfs(start, w, visited | (1 << w), allowed, length + 1):
                return True
            path.pop()
        return False

    full = (1 << n) - 1
    for s in range(n):
        if n - s < min_length:
            break
        allowed = full & ~((1 << s) - 1)  # cycles whose least vertex is s
        path.clear()
        path.append(s)
        if dfs(s, s, 1 << s, allowed, 1):
            return CycleWitness(tuple(verts[i] for i in path))
    return None


def is_hamiltonian(g: PrimeGraph) -> HamiltonResult:
    """Exact Hamiltonian-cycle search with connectivity/degree pruning."""
    n = g.order
    if n > MAX_HAMILTON_VERTICES:
        raise TooLarge(f"Hamilton search is capped at {MAX_HAMILTON_VERTICES} vertices, got {n}")
    if n < 3:
        return HamiltonResult(False, None)
    verts, adj = _masks(g)
    if any(a.bit_count() < 2 for a in adj):
        return HamiltonResult(False, None)
    full = (1 << n) - 1
    if not _spans(adj, full, 0):
        return HamiltonResult(False, None)
    path = [0]

    def dfs(v: int, visited: int) -> bool:
        if visited == full:
            return bool(adj[v] & 1)
        rem = full & ~visited
        if not _spans(adj, rem | (1 << v), v):
            return False
        avail = rem | (1 << v) | 1
        for u in _bits(rem):
            if (adj[u] & avail).bit_count() < 2:
                return False
        cand = adj[v] & rem
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            path.append(w)
            if dfs(w, visited | (1 << w)):
                return True
            path.pop()
        return False

    if dfs(0, 1):
        return HamiltonResult(True, CycleWitness(tuple(verts[i] for i in path)))
    return HamiltonResult(False, None)


def _spans(adj: list[int], mask: int, seed: int) -> bool:
    """True when every vertex of mask is reachable from seed inside mask."""
    seen = 1 << seed
    frontier = seen
    while frontier:
        reach = 0
        for i in _bits(frontier):
            reach |= adj[i] & mask
        frontier = reach & ~seen
        seen |= frontier
    return seen & mask == mask


def connected_components(g: PrimeGraph) -> list[tuple[int, ...]]:
    """Maximal connected vertex sets, ordered by least element."""
    seen: set[int] = set()
    components = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        components.append(tuple(sorted(comp)))
    return components


def isomorphic_small(g1: PrimeGraph, g2: PrimeGraph) -> bool:
    """Brute-force isomorphism for graphs on at most 8 vertices."""
    if g1.order > MAX_ISO_VERTICES or g2.order > MAX_ISO_VERTICES:
        raise TooLarge(f"isomorphism check is capped at {MAX_ISO_VERTICES} vertices")
    if g1.order != g2.order or g1.size != g2.size:
        return False
    deg1 = sorted(len(g1.neighbors(v)) for v in g1.vertices)
    deg2 = sorted(len(g2.neighbors(v)) for v in g2.vertices)
    if deg1 != deg2:
        return False
    for perm in itertools.permutations(g2.vertices):
        mapping = dict(zip(g1.vertices, perm))
        if all(g2.has_edge(mapping[a], mapping[b]) for a, b in g1.edges):
            return True
    return False
