"""EPR graphs, weighted security graphs and entangled hypergraphs.

Agents are vertices 0..n-1; an edge is a shared EPR pair, a hyperedge a
shared maximal multipartite state.  Everything here is a pure value with
canonical (sorted) ordering, so serialization is bit-exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DomainError, InternalError, InvalidInputError, LimitError

ENUMERATION_LIMIT = 8  # spanning-tree enumeration guard


def canonical_edge(a: int, b: int) -> tuple[int, int]:
    if a == b:
        raise InvalidInputError(f"self-loop at {a}")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class EprGraph:
    """Undirected simple graph of agents sharing EPR pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(
            self, "edges", frozenset(canonical_edge(*e) for e in self.edges)
        )
        for a, b in self.edges:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise InvalidInputError(f"edge ({a},{b}) outside 0..{self.n - 1}")

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> list[int]:
        return sorted(b if a == v else a for a, b in self.edges if v in (a, b))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


def graph(n: int, edges) -> EprGraph:
    return EprGraph(n, frozenset(canonical_edge(*e) for e in edges))


@dataclass(frozen=True, eq=False)
class WeightedEprGraph:
    """EPR graph with a non-negative resource cost per edge."""

    graph: EprGraph
    weights: dict[tuple[int, int], float]

    def __post_init__(self):
        fixed = {canonical_edge(*e): float(w) for e, w in self.weights.items()}
        object.__setattr__(self, "weights", fixed)
        if set(fixed) != set(self.graph.edges):
            raise InvalidInputError("weights must cover exactly the graph edges")
        if any(w < 0 for w in fixed.values()):
            raise InvalidInputError("weights must be non-negative")


@dataclass(frozen=True)
class SpanningTree(EprGraph):
    """Connected EPR graph with exactly n-1 edges."""

    def __post_init__(self):
        super().__post_init__()
        if len(self.edges) != self.n - 1:
            raise InvalidInputError(
                f"spanning tree on {self.n} vertices needs {self.n - 1} edges, got {len(self.edges)}"
            )
        if not is_connected(self):
            raise InvalidInputError("spanning tree must be connected")


def tree(n: int, edges) -> SpanningTree:
    return SpanningTree(n, frozenset(canonical_edge(*e) for e in edges))


@dataclass(frozen=True)
class EntangledHypergraph:
    """Agents plus subsets sharing maximal multipartite entanglement.

    Duplicate hyperedges are only allowed with multi=True (the multi-copy
    variant the LOCC engine uses to count state copies).
    """

    n: int
    hyperedges: tuple[frozenset[int], ...]
    multi: bool = False

    def __post_init__(self):
        fixed = tuple(frozenset(int(v) for v in e) for e in self.hyperedges)
        object.__setattr__(self, "hyperedges", fixed)
        for e in fixed:
            if len(e) < 2:
                raise InvalidInputError("hyperedges must have size >= 2")
            if not all(0 <= v < self.n for v in e):
                raise InvalidInputError(f"hyperedge {sorted(e)} outside 0..{self.n - 1}")
        if not self.multi and len(set(fixed)) != len(fixed):
            raise InvalidInputError("duplicate hyperedges need multi=True")

    def sorted_hyperedges(self) -> list[list[int]]:
        return sorted([sorted(e) for e in self.hyperedges])


def hypergraph(n: int, hyperedges, multi: bool = False) -> EntangledHypergraph:
    return EntangledHypergraph(n, tuple(frozenset(e) for e in hyperedges), multi)


# ---- connectivity ---------------------------------------------------------


def _components(n: int, adjacency) -> list[set[int]]:
    seen: set[int] = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adjacency(v):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: EprGraph) -> bool:
    """True iff the graph has a single component."""
    if g.n < 1:
        raise InvalidInputError("need at least one agent")
    return len(_components(g.n, g.neighbors)) == 1


def hypergraph_is_connected(h: EntangledHypergraph) -> bool:
    """True iff every vertex pair is joined by a hyperpath."""
    if h.n < 1:
        raise InvalidInputError("need at least one agent")
    adj: dict[int, set[int]] = {v: set() for v in range(h.n)}
    for e in h.hyperedges:
        for v in e:
            adj[v] |= e
    return len(_components(h.n, lambda v: adj[v] - {v})) == 1


# ---- spanning trees -------------------------------------------------------


def minimum_spanning_tree(g: WeightedEprGraph) -> SpanningTree:
    """Kruskal with lexicographic tie-break; disconnected input is a DomainError."""
    base = g.graph
    if not is_connected(base):
        raise DomainError("no spanning tree: graph is disconnected")
    parent = list(range(base.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    chosen = []
    for w, a, b in sorted((g.weights[e], e[0], e[1]) for e in base.edges):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            chosen.append((a, b))
    return tree(base.n, chosen)


def enumerate_spanning_trees(g: EprGraph) -> list[SpanningTree]:
    """All spanning trees, canonically ordered; guarded to n <= 8."""
    if g.n > ENUMERATION_LIMIT:
        raise LimitError(f"spanning-tree enumeration limited to n <= {ENUMERATION_LIMIT}")
    if g.n == 1:
        return [tree(1, [])]
    edges = g.sorted_edges()
    out = []
    for combo in itertools.combinations(edges, g.n - 1):
        candidate = EprGraph(g.n, frozenset(combo))
        if is_connected(candidate):
            out.append(tree(g.n, combo))
    out.sort(key=lambda t: t.sorted_edges())
    return out


def complete_graph(n: int) -> EprGraph:
    return graph(n, itertools.combinations(range(n), 2))


def quantum_distance(t1: SpanningTree, t2: SpanningTree) -> int:
    """Number of edges of t1 absent from t2 (symmetric for spanning trees)."""
    if t1.n != t2.n:
        raise InvalidInputError("trees must share the vertex set")
    return len(t1.edges - t2.edges)


# ---- hypertree structure --------------------------------------------------


def pendant_vertices(h: EntangledHypergraph) -> set[int]:
    """Vertices belonging to exactly one hyperedge."""
    count: dict[int, int] = {}
    for e in h.hyperedges:
        for v in e:
            count[v] = count.get(v, 0) + 1
    return {v for v, c in count.items() if c == 1}


def _simple_hyperpaths(h: EntangledHypergraph, u: int, v: int):
    """All hyperedge sequences (no repeats) forming a hyperpath u -> v."""
    edges = list(h.hyperedges)
    paths = []

    def extend(seq, used):
        last = edges[seq[-1]]
        if v in last:
            paths.append(frozenset(seq))
        for j, e in enumerate(edges):
            if j not in used and edges[seq[-1]] & e:
                extend(seq + [j], used | {j})

    for j, e in enumerate(edges):
        if u in e:
            extend([j], {j})
    return paths


def has_disjoint_hyperpath_pair(h: EntangledHypergraph, u: int, v: int) -> bool:
    """True iff two hyperedge-disjoint hyperpaths join u and v (a cycle)."""
    paths = _simple_hyperpaths(h, u, v)
    for i in range(len(paths)):
        for j in range(i + 1, len(paths)):
            if not (paths[i] & paths[j]):
                return True
    return False


def is_r_uniform_hypertree(h: EntangledHypergraph, r: int) -> bool:
    """Uniform size r, connected, acyclic, and n = m*(r-1) + 1."""
    if r < 2:
        raise InvalidInputError("uniformity requires r >= 2")
    if any(len(e) != r for e in h.hyperedges):
        return False
    if not hypergraph_is_connected(h):
        return False
    m = len(h.hyperedges)
    if h.n != m * (r - 1) + 1:
        return False
    for u, v in itertools.combinations(range(h.n), 2):
        if has_disjoint_hyperpath_pair(h, u, v):
            return False
    return True


def find_separating_pair(
    h1: EntangledHypergraph, h2: EntangledHypergraph, r: int
) -> tuple[int, int]:
    """First vertex pair sharing a hyperedge in h2 but none in h1.

    Existence for distinct r-uniform hypertrees (r >= 3) is a theorem; a
    miss therefore signals an internal error.
    """
    if r < 3:
        raise InvalidInputError("separating pairs are defined for r >= 3")
    if h1.n != h2.n:
        raise InvalidInputError("hypertrees must share the vertex set")
    if set(h1.hyperedges) == set(h2.hyperedges):
        raise InvalidInputError("hypertrees must be distinct")
    for rt, name in ((h1, "h1"), (h2, "h2")):
        if not is_r_uniform_hypertree(rt, r):
            raise InvalidInputError(f"{name} is not a {r}-uniform hypertree")
    for u, v in itertools.combinations(range(h1.n), 2):
        in_h2 = any(u in e and v in e for e in h2.hyperedges)
        in_h1 = any(u in e and v in e for e in h1.hyperedges)
        if in_h2 and not in_h1:
            return (u, v)
    raise InternalError("no separating pair found for distinct r-uniform hypertrees")


def enumerate_r_uniform_hypertrees(n: int, r: int) -> list[EntangledHypergraph]:
    """All r-uniform hypertrees on n labeled vertices (empty when none exist)."""
    if r < 2:
        raise InvalidInputError("uniformity requires r >= 2")
    if n > 9:
        raise LimitError("hypertree enumeration limited to n <= 9")
    if (n - 1) % (r - 1) != 0:
        return []
    m = (n - 1) // (r - 1)
    candidates = [frozenset(c) for c in itertools.combinations(range(n), r)]
    out = []
    for combo in itertools.combinations(candidates, m):
        if len(set().union(*combo)) != n:
            continue
        h = EntangledHypergraph(n, combo)
        if is_r_uniform_hypertree(h, r):
            out.append(h)
    out.sort(key=lambda h: h.sorted_hyperedges())
    return out


# ---- canonical JSON -------------------------------------------------------


def graph_to_json(g: EprGraph, weights: dict | None = None) -> dict:
    doc = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if weights is not None:
        fixed = {canonical_edge(*e): float(w) for e, w in weights.items()}
        doc["weights"] = [fixed[e] for e in g.sorted_edges()]
    return doc


def weighted_to_json(g: WeightedEprGraph) -> dict:
    return graph_to_json(g.graph, g.weights)


def graph_from_json(doc: dict) -> EprGraph | WeightedEprGraph:
    g = graph(int(doc["n"]), [tuple(e) for e in doc["edges"]])
    if "weights" in doc:
        weights = dict(zip((canonical_edge(*e) for e in doc["edges"]), doc["weights"]))
        return WeightedEprGraph(g, weights)
    return g


def hypergraph_to_json(h: EntangledHypergraph) -> dict:
    return {"n": h.n, "hyperedges": h.sorted_hyperedges(), "multi": h.multi}


def hypergraph_from_json(doc: dict) -> EntangledHypergraph:
    return hypergraph(int(doc["n"]), doc["hyperedges"], bool(doc.get("multi", False)))
