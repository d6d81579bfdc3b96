"""Exhaustive census of small labelled chordal planar graphs.

Nothing here touches the series code.  A graph on ``n <= 8`` vertices is an
edge bitmask over the pairs ``(i, j)``, ``i < j``, in lexicographic order;
vertex neighbourhoods are kept as integer bitmasks.  Planarity is decided by
the Demoucron-Malgrange-Pertuiset face-embedding algorithm on each block.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

MAX_VERTICES = 8
MAX_CENSUS = 6


class OracleError(ValueError):
    pass


@lru_cache(maxsize=None)
def vertex_pairs(n: int) -> tuple:
    return tuple(combinations(range(n), 2))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SmallGraph:
    n: int
    edges: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise OracleError(f"n must be between 0 and {MAX_VERTICES}")
        if self.edges >> len(vertex_pairs(self.n)):
            raise OracleError("edge mask has bits beyond the vertex pairs")

    @classmethod
    def from_edges(cls, n: int, edge_list) -> "SmallGraph":
        index = {p: k for k, p in enumerate(vertex_pairs(n))}
        mask = 0
        for u, v in edge_list:
            if u == v:
                raise OracleError("loops are not allowed")
            mask |= 1 << index[(min(u, v), max(u, v))]
        return cls(n, mask)

    @classmethod
    def complete(cls, n: int) -> "SmallGraph":
        return cls(n, (1 << len(vertex_pairs(n))) - 1)

    @classmethod
    def cycle(cls, n: int) -> "SmallGraph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @property
    def edge_list(self) -> list[tuple[int, int]]:
        pairs = vertex_pairs(self.n)
        return [pairs[k] for k in _bits(self.edges)]

    @property
    def edge_count(self) -> int:
        return bin(self.edges).count("1")

    def adjacency(self) -> list[int]:
        adj = [0] * self.n
        for u, v in self.edge_list:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj


# -- connectivity -----------------------------------------------------------

def _component_count(adj: list[int], alive: int) -> int:
    count = 0
    left = alive
    while left:
        seed = left & -left
        seen = frontier = seed
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= alive & ~seen
            seen |= nxt
            frontier = nxt
        left &= ~seen
        count += 1
    return count


def component_count(g: SmallGraph) -> int:
    return _component_count(g.adjacency(), (1 << g.n) - 1)


def is_connected(g: SmallGraph) -> bool:
    return g.n > 0 and component_count(g) == 1


def is_k_connected(g: SmallGraph, k: int) -> bool:
    """Connected after deleting any ``k - 1`` vertices, with more than ``k`` vertices."""
    if g.n <= k:
        return False
    adj = g.adjacency()
    full = (1 << g.n) - 1
    for removed in combinations(range(g.n), k - 1):
        alive = full
        for v in removed:
            alive &= ~(1 << v)
        if _component_count(adj, alive) != 1:
            return False
    return True


def is_biconnected(g: SmallGraph) -> bool:
    """No cut vertex; the single edge on two vertices counts as 2-connected."""
    if g.n == 2:
        return g.edges == 1
    return is_k_connected(g, 2)


# -- chordality -------------------------------------------------------------

def is_chordal(g: SmallGraph) -> bool:
    """Delete simplicial vertices until the graph empties or gets stuck."""
    adj = g.adjacency()
    alive = (1 << g.n) - 1
    while alive:
        for v in _bits(alive):
            nb = adj[v] & alive
            if all(nb & ~(1 << u) & ~adj[u] == 0 for u in _bits(nb)):
                alive &= ~(1 << v)
                break
        else:
            return False
    return True


def is_chordal_mcs(g: SmallGraph) -> bool:
    """Maximum cardinality search, then check the reverse order is a perfect
    elimination ordering."""
    adj = g.adjacency()
    weight = [0] * g.n
    order = []
    numbered = 0
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not numbered >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        numbered |= 1 << v
        for u in _bits(adj[v] & ~numbered):
            weight[u] += 1
    # order[i]'s earlier neighbours must form a clique
    seen = 0
    for v in order:
        earlier = adj[v] & seen
        if earlier:
            parent = max(_bits(earlier), key=order.index)
            if earlier & ~(1 << parent) & ~adj[parent]:
                return False
        seen |= 1 << v
    return True


# -- planarity --------------------------------------------------------------

def _blocks(n: int, adj: list[set]) -> list[set]:
    """Edge sets of the biconnected components (Hopcroft-Tarjan)."""
    index = [-1] * n
    low = [0] * n
    counter = [0]
    stack: list[tuple[int, int]] = []
    blocks = []

    def visit(v, parent):
        index[v] = low[v] = counter[0]
        counter[0] += 1
        for w in adj[v]:
            if index[w] == -1:
                stack.append((v, w))
                visit(w, v)
                low[v] = min(low[v], low[w])
                if low[w] >= index[v]:
                    block = set()
                    while True:
                        e = stack.pop()
                        block.add(frozenset(e))
                        if e == (v, w):
                            break
                    blocks.append(block)
            elif w != parent and index[w] < index[v]:
                stack.append((v, w))
                low[v] = min(low[v], index[w])

    for v in range(n):
        if index[v] == -1:
            visit(v, -1)
    return blocks


def _find_cycle(adj: dict) -> list:
    start = next(iter(adj))
    parent = {start: None}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w == parent[v]:
                continue
            if w in parent:
                # walk both ends back to their common ancestor
                pv, pw = [v], [w]
                while pv[-1] is not None:
                    pv.append(parent[pv[-1]])
                while pw[-1] is not None:
                    pw.append(parent[pw[-1]])
                pv.pop(), pw.pop()
                common = next(x for x in pv if x in pw)
                left = pv[:pv.index(common) + 1]
                right = pw[:pw.index(common)]
                return left[::-1] + right
            parent[w] = v
            stack.append(w)
    raise OracleError("block has no cycle")


def _fragments(adj: dict, placed: set, embedded: set):
    """Bridges of the embedded subgraph: ``(attachments, path_finder)`` pairs."""
    out = []
    for v in placed:
        for w in adj[v]:
            if w in placed and v < w and frozenset((v, w)) not in embedded:
                out.append(({v, w}, [v, w]))
    seen = set()
    for s in adj:
        if s in placed or s in seen:
            continue
        comp = {s}
        todo = [s]
        while todo:
            v = todo.pop()
            for w in adj[v]:
                if w not in placed and w not in comp:
                    comp.add(w)
                    todo.append(w)
        seen |= comp
        attach = {w for v in comp for w in adj[v] if w in placed}
        out.append((attach, comp))
    return out


def _fragment_path(adj: dict, attach: set, body) -> list:
    if isinstance(body, list):
        return body
    comp = body
    a = min(attach)
    start = next(v for v in sorted(comp) if a in adj[v])
    parent = {start: a}
    todo = [start]
    while todo:
        v = todo.pop(0)
        ends = [w for w in adj[v] if w in attach and w != a]
        if ends:
            path = [min(ends), v]
            while path[-1] != a:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in adj[v]:
            if w in comp and w not in parent:
                parent[w] = v
                todo.append(w)
    raise OracleError("fragment with a single attachment in a block")


def _block_planar(edges: set) -> bool:
    adj: dict = {}
    for e in edges:
        u, v = tuple(e)
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    n, m = len(adj), len(edges)
    if m <= 2 or m <= n:
        return True
    if m > 3 * n - 6:
        return False
    cycle = _find_cycle(adj)
    faces = [list(cycle), list(cycle)]
    placed = set(cycle)
    embedded = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    while len(embedded) < m:
        frags = _fragments(adj, placed, embedded)
        choice = None
        for attach, body in frags:
            ok = [i for i, f in enumerate(faces) if attach <= set(f)]
            if not ok:
                return False
            if choice is None or len(ok) < len(choice[2]):
                choice = (attach, body, ok)
            if len(ok) == 1:
                break
        attach, body, ok = choice
        path = _fragment_path(adj, attach, body)
        face = faces.pop(ok[0])
        i, j = face.index(path[0]), face.index(path[-1])
        k = len(face)
        arc1 = [face[(i + t) % k] for t in range((j - i) % k + 1)]
        arc2 = [face[(j + t) % k] for t in range((i - j) % k + 1)]
        inner = path[1:-1]
        faces.append(arc1 + inner[::-1])
        faces.append(arc2 + inner)
        placed.update(path)
        embedded.update(frozenset(p) for p in zip(path, path[1:]))
    return True


def is_planar(g: SmallGraph) -> bool:
    if g.n >= 3 and g.edge_count > 3 * g.n - 6:
        return False
    adj = [set(_bits(a)) for a in g.adjacency()]
    return all(_block_planar(b) for b in _blocks(g.n, adj))


# -- census -----------------------------------------------------------------

@dataclass(frozen=True)
class Census:
    n: int
    all: int
    connected: int
    two_connected: int
    three_connected: int
    triangulations: int

    def to_dict(self) -> dict:
        return {"n": self.n, "all": self.all, "connected": self.connected,
                "two_connected": self.two_connected,
                "three_connected": self.three_connected,
                "triangulations": self.triangulations}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def chordal_planar_graphs(n: int):
    """Every labelled chordal planar graph on ``n`` vertices."""
    for mask in range(1 << len(vertex_pairs(n))):
        g = SmallGraph(n, mask)
        if is_chordal(g) and is_planar(g):
            yield g


def census(n: int) -> Census:
    """Count labelled chordal planar graphs on ``n`` vertices by connectivity."""
    if not 1 <= n <= MAX_CENSUS:
        raise OracleError(f"census is limited to 1 <= n <= {MAX_CENSUS}")
    total = conn = bi = tri = maximal = 0
    for g in chordal_planar_graphs(n):
        total += 1
        if not is_connected(g):
            continue
        conn += 1
        if is_biconnected(g):
            bi += 1
        if is_k_connected(g, 3):
            tri += 1
        if n >= 3 and g.edge_count == 3 * n - 6:
            maximal += 1
    return Census(n, total, conn, bi, tri, maximal)
