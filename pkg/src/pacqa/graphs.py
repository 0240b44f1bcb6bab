"""Mixed graphs on the arrow set: generator graphs, relation graphs,
directed-cycle detection, clique enumeration and DOT export.

The generator graph of an ideal has one vertex per arrow, a directed edge
``a -> b`` per monomial generator ``ab`` (squares give self-loops) and an
undirected edge per relation pair.  The relation graph of the quotient
algebra additionally has a directed edge for every ordered pair whose
composition is zero for endpoint reasons; self-pairs of non-loops are not
drawn (they carry no information about the quotient).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .ideal import IdealSpec, orthogonal

GENERATOR_KIND = "generator"
RELATION_KIND = "relation"


@dataclass(frozen=True)
class MixedGraph:
    vertices: tuple[str, ...]
    directed: tuple[tuple[str, str], ...]
    undirected: tuple[tuple[str, str], ...]
    kind: str
    loops: frozenset[str] = frozenset()  # vertices that are quiver loops

    @cached_property
    def _order(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def directed_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.directed)

    @cached_property
    def undirected_adjacency(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a, b in self.undirected:
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(s) for v, s in adj.items()}

    def has_edge(self, a: str, b: str) -> bool:
        return (a, b) in self.directed_set

    def joined(self, a: str, b: str) -> bool:
        return b in self.undirected_adjacency[a]

    def sort_vertices(self, vertices) -> tuple[str, ...]:
        return tuple(sorted(vertices, key=self._order.__getitem__))


def generator_graph(spec: IdealSpec) -> MixedGraph:
    q = spec.quiver
    return MixedGraph(
        vertices=q.arrow_names,
        directed=spec.monomials,
        undirected=spec.relations,
        kind=GENERATOR_KIND,
        loops=frozenset(q.loops),
    )


def relation_graph(spec: IdealSpec) -> MixedGraph:
    """Directed edge ``a -> b`` whenever ``ab = 0`` in the quotient: the pair
    is non-composable, or ``ab`` is a monomial generator.  Self-pairs only
    appear for loops whose square is a generator."""
    q = spec.quiver
    directed = []
    for a in q.arrow_names:
        for b in q.arrow_names:
            if q.composable(a, b):
                if (a, b) in spec.monomial_set:
                    directed.append((a, b))
            elif a != b:
                directed.append((a, b))
    directed.sort(key=lambda p: (q.arrow_index(p[0]), q.arrow_index(p[1])))
    return MixedGraph(
        vertices=q.arrow_names,
        directed=tuple(directed),
        undirected=spec.relations,
        kind=RELATION_KIND,
        loops=frozenset(q.loops),
    )


def has_directed_cycle(g: MixedGraph) -> tuple[bool, tuple[str, ...] | None]:
    """Depth-first cycle search over the directed edges only.

    Returns the first cycle in DFS order over sorted adjacency as a vertex
    sequence ``(v1, ..., vk, v1)``; deterministic for equal graphs.
    """
    order = {v: i for i, v in enumerate(g.vertices)}
    adjacency: dict[str, list[str]] = {v: [] for v in g.vertices}
    for a, b in g.directed:
        adjacency[a].append(b)
    for v in adjacency:
        adjacency[v].sort(key=order.__getitem__)

    WHITE, GREY, BLACK = 0, 1, 2
    color = {v: WHITE for v in g.vertices}
    path: list[str] = []

    def visit(v: str) -> tuple[str, ...] | None:
        color[v] = GREY
        path.append(v)
        for w in adjacency[v]:
            if color[w] == GREY:
                return tuple(path[path.index(w):]) + (w,)
            if color[w] == WHITE:
                found = visit(w)
                if found is not None:
                    return found
        color[v] = BLACK
        path.pop()
        return None

    for v in g.vertices:
        if color[v] == WHITE:
            cycle = visit(v)
            if cycle is not None:
                return True, cycle
            assert not path
    return False, None


@dataclass(frozen=True)
class AdmissibilityVerdict:
    admissible: bool
    cycle: tuple[str, ...] | None
    nilpotency_bound: int | None
    orthogonal: IdealSpec

    def witness_text(self) -> str:
        if self.admissible:
            return f"nilpotency bound: {self.nilpotency_bound}"
        return "cycle: " + " -> ".join(self.cycle)


def is_admissible(spec: IdealSpec) -> AdmissibilityVerdict:
    """The ideal is admissible iff the generator graph of its orthogonal
    ideal has no directed cycle; an admissible ideal kills every path longer
    than the number of arrows, whence the nilpotency bound."""
    orth = orthogonal(spec)
    found, cycle = has_directed_cycle(generator_graph(orth))
    bound = None if found else len(spec.quiver.arrows) + 1
    return AdmissibilityVerdict(not found, cycle, bound, orth)


@dataclass(frozen=True)
class Clique:
    vertices: tuple[str, ...]
    all_loops: bool
    maximal: bool


def enumerate_cliques(g: MixedGraph, loops_only: bool = False
                      ) -> tuple[Clique, ...]:
    """All nonempty cliques of the undirected subgraph, optionally restricted
    to loop vertices, sorted by (size, vertex list).  Maximality is judged
    within the same vertex domain."""
    domain = [v for v in g.vertices if not loops_only or v in g.loops]
    adj = g.undirected_adjacency
    found: list[tuple[str, ...]] = []

    def grow(base: tuple[str, ...], candidates: list[str]) -> None:
        for i, v in enumerate(candidates):
            clique = base + (v,)
            found.append(clique)
            grow(clique, [w for w in candidates[i + 1:] if w in adj[v]])

    grow((), domain)
    domain_set = set(domain)
    order = {v: i for i, v in enumerate(g.vertices)}
    found.sort(key=lambda c: (len(c), tuple(order[v] for v in c)))
    cliques = []
    for members in found:
        member_set = set(members)
        maximal = not any(
            w in domain_set and member_set <= adj[w]
            for w in domain_set - member_set)
        cliques.append(Clique(
            vertices=members,
            all_loops=all(v in g.loops for v in members),
            maximal=maximal,
        ))
    return tuple(cliques)


def to_dot(g: MixedGraph) -> str:
    """Deterministic DOT text; undirected edges are drawn with dir=none.
    Equal graphs produce byte-identical output."""
    lines = [f"digraph {g.kind} {{", "  node [shape=circle];"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for a, b in g.directed:
        lines.append(f'  "{a}" -> "{b}";')
    for a, b in g.undirected:
        lines.append(f'  "{a}" -> "{b}" [dir=none];')
    lines.append("}")
    return "\n".join(lines) + "\n"
