"""Central monomials of a partly (anti-)commutative quiver algebra.

For a square-free ideal the positive part of the center has a monomial
basis.  In the commutative flavor a monomial is central iff its support is a
clique of loops in the relation graph and every other arrow either extends
the clique or is annihilated by it in both directions.  In the
anticommutative flavor the same support condition applies, with parity on
top: even-degree central monomials carry every arrow an even number of
times, odd-degree ones carry every arrow an odd number of times and need
*every* outside arrow annihilated in both directions (an outside arrow that
merely anti-commutes with the block blocks odd degrees).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import FalsificationError, HypothesisError, IdealError
from .graphs import MixedGraph, enumerate_cliques, is_admissible, relation_graph
from .ideal import (ANTICOMMUTATIVE, COMMUTATIVE, IdealSpec,
                    is_square_free, orthogonal)
from .normalform import canonical_form
from .quiver import Path

Word = tuple[str, ...]

DEFAULT_MAX_DEGREE = 8


@dataclass(frozen=True)
class CenterElement:
    """One basis element: a signed combination of canonical words.  Theorem
    mode always produces monomials (a single +1 term)."""

    terms: tuple[tuple[int, Word], ...]
    basepoint: str | None

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1 and self.terms[0][0] == 1

    @property
    def word(self) -> Word:
        if not self.is_monomial:
            raise ValueError("not a monomial element")
        return self.terms[0][1]

    def render(self) -> str:
        parts = []
        for coeff, word in self.terms:
            text = "*".join(word)
            if coeff == 1:
                parts.append(("+ " if parts else "") + text)
            elif coeff == -1:
                parts.append("- " + text)
            else:
                parts.append(f"{'+' if coeff > 0 else '-'} {abs(coeff)}*{text}")
        return " ".join(parts)


@dataclass(frozen=True)
class CenterBasis:
    flavor: str
    max_degree: int
    provenance: str  # 'theorem' | 'oracle'
    by_degree: tuple[tuple[int, tuple[CenterElement, ...]], ...]
    identity_components: int
    notes: tuple[str, ...] = ()

    def degree_slice(self, degree: int) -> tuple[CenterElement, ...]:
        for d, elements in self.by_degree:
            if d == degree:
                return elements
        return ()

    def words_at(self, degree: int) -> tuple[Word, ...]:
        return tuple(e.word for e in self.degree_slice(degree))

    def all_monomial_words(self) -> tuple[Word, ...]:
        out = []
        for _, elements in self.by_degree:
            out.extend(e.word for e in elements)
        return tuple(out)

    @property
    def is_monomial(self) -> bool:
        return all(e.is_monomial
                   for _, elements in self.by_degree for e in elements)


def surviving_multi_vertex_cycle(spec: IdealSpec) -> Word | None:
    """A rotation of a simple multi-vertex cycle that survives modulo the
    ideal, if one exists.

    Such a surviving cycle word can carry central elements that are not
    products of loops (for the 2-cycle quiver with the zero ideal,
    ``cd + dc`` is central), so the loop-clique machinery refuses these
    quivers and defers to the oracle.
    """
    from .normalform import monomial_in_ideal
    from .quiver import multi_vertex_cycles

    for cycle in multi_vertex_cycles(spec.quiver):
        for shift in range(len(cycle)):
            rotation = cycle[shift:] + cycle[:shift]
            if not monomial_in_ideal(spec, rotation):
                return rotation
    return None


def hypothesis_report(spec: IdealSpec) -> dict:
    """The theorem-mode preconditions and their outcomes."""
    verdict = is_admissible(orthogonal_of(spec))
    survivor = surviving_multi_vertex_cycle(spec)
    return {
        "square_free": is_square_free(spec),
        "orthogonal_admissible": verdict.admissible,
        "orthogonal_cycle": verdict.cycle,
        "loop_supported": survivor is None,
        "surviving_multi_vertex_cycle": survivor,
    }


def orthogonal_of(spec: IdealSpec) -> IdealSpec:
    return orthogonal(spec)


def require_loop_hypotheses(spec: IdealSpec) -> None:
    """Square-free plus admissible orthogonal: the preconditions for the
    loop-clique characterizations on loop-supported components."""
    report = hypothesis_report(spec)
    if not report["square_free"]:
        raise HypothesisError(
            "ideal is not square-free: the monomial characterization of the "
            "center does not apply; use the oracle")
    if not report["orthogonal_admissible"]:
        raise HypothesisError(
            "orthogonal ideal is not admissible (generator graph of the "
            "ideal has the directed cycle "
            + " -> ".join(report["orthogonal_cycle"])
            + "); theorem mode refused, use the oracle")


def require_hypotheses(spec: IdealSpec) -> None:
    require_loop_hypotheses(spec)
    survivor = surviving_multi_vertex_cycle(spec)
    if survivor is not None:
        raise HypothesisError(
            "a multi-vertex cycle survives modulo the ideal ("
            + "*".join(survivor)
            + "); central elements need not be products of loops there, so "
            "theorem mode is refused: use the oracle")


@dataclass(frozen=True)
class CliqueStatus:
    """Outcome of the outside-arrow scan for one clique of loops.

    ``central_ok`` is the extend-or-annihilate condition (centrality of
    monomials over this support; in the anticommutative flavor this governs
    even degrees).  ``kill_only`` is the stronger all-annihilated condition
    required at odd degrees in the anticommutative flavor.
    """

    clique: tuple[str, ...]
    basepoint: str
    central_ok: bool
    kill_only: bool
    blocker: str | None  # first outsider failing extend-or-annihilate
    blocker_missing: str | None  # rendered missing edge
    extender: str | None  # first outsider passing only via extension


def _outsider_killed(g: MixedGraph, clique: Sequence[str], b: str
                     ) -> tuple[bool, str | None]:
    into = any(g.has_edge(c, b) for c in clique)
    back = any(g.has_edge(b, c) for c in clique)
    if into and back:
        return True, None
    if not into:
        return False, f"{'{' + ','.join(clique) + '}'} -> {b}"
    return False, f"{b} -> {'{' + ','.join(clique) + '}'}"


def clique_status(spec: IdealSpec, g: MixedGraph, clique: Sequence[str]
                  ) -> CliqueStatus:
    q = spec.quiver
    members = set(clique)
    central_ok = True
    kill_only = True
    blocker = None
    blocker_missing = None
    extender = None
    for b in q.arrow_names:
        if b in members:
            continue
        killed, missing = _outsider_killed(g, clique, b)
        extends = (b in g.loops
                   and all(g.joined(b, c) for c in clique)
                   and q.origin(b) == q.origin(clique[0]))
        if not killed:
            kill_only = False
            if extends and extender is None:
                extender = b
        if not (killed or extends) and central_ok:
            central_ok = False
            blocker = b
            blocker_missing = missing
    return CliqueStatus(
        clique=tuple(clique),
        basepoint=q.origin(clique[0]),
        central_ok=central_ok,
        kill_only=kill_only,
        blocker=blocker,
        blocker_missing=blocker_missing,
        extender=extender,
    )


def loop_clique_statuses(spec: IdealSpec) -> tuple[CliqueStatus, ...]:
    """Status of every clique of loops in the relation graph, in
    deterministic (size, vertex list) order."""
    g = relation_graph(spec)
    cliques = enumerate_cliques(g, loops_only=True)
    return tuple(clique_status(spec, g, c.vertices) for c in cliques)


@dataclass(frozen=True)
class Centrality:
    central: bool
    reason: str


def is_central_monomial(spec: IdealSpec, m: Path | Sequence[str]) -> Centrality:
    """Decide centrality of a monomial from the relation graph."""
    require_hypotheses(spec)
    word = m.arrows if isinstance(m, Path) else tuple(m)
    if not word:
        raise IdealError("centrality is decided for words of degree >= 1")
    q = spec.quiver
    if canonical_form(spec, word) is None:
        return Centrality(False, "the monomial is zero in the quotient")
    support = sorted(set(word), key=q.arrow_index)
    base = {q.origin(a) for a in support} | {q.target(a) for a in support}
    if len(base) != 1:
        return Centrality(False, "not a product of loops at one vertex")
    g = relation_graph(spec)
    for i, a in enumerate(support):
        for b in support[i + 1:]:
            if not g.joined(a, b):
                return Centrality(
                    False, f"support is not a clique: {a} and {b} do not "
                           "commute by a relation")
    status = clique_status(spec, g, support)
    if spec.flavor == COMMUTATIVE:
        if status.central_ok:
            return Centrality(True, "support clique extends or annihilates "
                                    "every other arrow")
        return Centrality(
            False, f"outside arrow {status.blocker} neither extends the "
                   f"clique nor is annihilated (missing "
                   f"{status.blocker_missing})")
    counts = Counter(word)
    if len(word) % 2 == 0:
        if any(c % 2 for c in counts.values()):
            return Centrality(
                False, "even-degree word with an odd multiplicity")
        if status.central_ok:
            return Centrality(True, "even multiplicities over a clique that "
                                    "extends or annihilates every other arrow")
        return Centrality(
            False, f"outside arrow {status.blocker} neither extends the "
                   f"clique nor is annihilated (missing "
                   f"{status.blocker_missing})")
    if any(c % 2 == 0 for c in counts.values()):
        return Centrality(False, "odd-degree word with an even multiplicity")
    if status.kill_only:
        return Centrality(True, "odd multiplicities over a clique that "
                                "annihilates every other arrow both ways")
    who = status.extender if status.extender is not None else status.blocker
    return Centrality(
        False, f"odd degree requires every outside arrow annihilated both "
               f"ways, but {who} is not")


def _compositions(total: int, parts: int, minimum: int, step: int
                  ) -> Iterator[tuple[int, ...]]:
    """All ``parts``-tuples of integers ``>= minimum`` congruent to
    ``minimum`` mod ``step`` summing to ``total``, lexicographically."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    first = minimum
    while first <= total - minimum * (parts - 1):
        for rest in _compositions(total - first, parts - 1, minimum, step):
            yield (first,) + rest
        first += step


def _sorted_word(clique: Sequence[str], multiplicities: Sequence[int]) -> Word:
    out: list[str] = []
    for a, m in zip(clique, multiplicities):
        out.extend([a] * m)
    return tuple(out)


def central_monomials_upto(spec: IdealSpec,
                           max_degree: int = DEFAULT_MAX_DEGREE
                           ) -> CenterBasis:
    """All central canonical monomials of degree 1..max_degree, grouped by
    degree and sorted by arrow order; complete for square-free ideals."""
    require_hypotheses(spec)
    statuses = loop_clique_statuses(spec)
    q = spec.quiver
    anti = spec.flavor == ANTICOMMUTATIVE
    notes: list[str] = []
    if anti:
        for st in statuses:
            if st.central_ok and not st.kill_only and len(st.clique) % 2 == 1:
                notes.append(
                    "odd-degree-exclusion: odd-degree products over the "
                    f"block {{{','.join(st.clique)}}} are not central "
                    f"although even-degree ones are; outside arrow "
                    f"{st.extender if st.extender else st.blocker} "
                    "(anti-)commutes with the block instead of annihilating "
                    "it, and odd degree requires two-sided annihilation")
    by_degree: list[tuple[int, tuple[CenterElement, ...]]] = []
    for d in range(1, max_degree + 1):
        words: list[tuple[Word, str]] = []
        for st in statuses:
            k = len(st.clique)
            if not anti:
                if not st.central_ok:
                    continue
                for mult in _compositions(d, k, 1, 1):
                    words.append((_sorted_word(st.clique, mult), st.basepoint))
            else:
                if d % 2 == 0 and st.central_ok:
                    for mult in _compositions(d, k, 2, 2):
                        words.append(
                            (_sorted_word(st.clique, mult), st.basepoint))
                if d % 2 == 1 and st.kill_only:
                    for mult in _compositions(d, k, 1, 2):
                        words.append(
                            (_sorted_word(st.clique, mult), st.basepoint))
        words.sort(key=lambda pair: q.word_key(pair[0]))
        elements = []
        for word, basepoint in words:
            if canonical_form(spec, word) is None:
                raise FalsificationError(
                    f"claimed central monomial {'*'.join(word)} is zero in "
                    "the quotient")
            elements.append(CenterElement(((1, word),), basepoint))
        if elements:
            by_degree.append((d, tuple(elements)))
    return CenterBasis(
        flavor=spec.flavor,
        max_degree=max_degree,
        provenance="theorem",
        by_degree=tuple(by_degree),
        identity_components=len(q.connected_components),
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class TrivialityResult:
    trivial: bool
    vertex: str
    block: tuple[str, ...] | None
    scanned: tuple[tuple[tuple[str, ...], str], ...]  # (block, failure)


def center_is_trivial_at(spec: IdealSpec, vertex: str) -> TrivialityResult:
    """Per-vertex triviality: the center based at ``vertex`` is nontrivial
    iff some commutating block there (a clique of co-based loops) has every
    other arrow either joining the block or annihilated by it in both
    directions.  The witness is the first such block; on the trivial side
    the scan of every block with its failure is returned.

    This decides the loop-supported part; on quivers with surviving
    multi-vertex cycles the center may contain further cycle-supported
    elements not based at any single block."""
    if not is_square_free(spec):
        raise HypothesisError(
            "triviality by blocks requires a square-free ideal")
    q = spec.quiver
    if vertex not in q.vertices:
        raise IdealError(f"unknown vertex {vertex!r}")
    if not q.loops_at(vertex):
        return TrivialityResult(True, vertex, None, ())
    scanned: list[tuple[tuple[str, ...], str]] = []
    for st in loop_clique_statuses(spec):
        if st.basepoint != vertex:
            continue
        if st.central_ok:
            return TrivialityResult(False, vertex, st.clique, tuple(scanned))
        scanned.append(
            (st.clique,
             f"arrow {st.blocker} neither joins the block nor is "
             f"annihilated (missing {st.blocker_missing})"))
    return TrivialityResult(True, vertex, None, tuple(scanned))


def even_center_upto(spec: IdealSpec,
                     max_degree: int = DEFAULT_MAX_DEGREE) -> CenterBasis:
    """The even-degree slice of the center."""
    full = central_monomials_upto(spec, max_degree)
    return CenterBasis(
        flavor=full.flavor,
        max_degree=max_degree,
        provenance=full.provenance,
        by_degree=tuple((d, els) for d, els in full.by_degree if d % 2 == 0),
        identity_components=full.identity_components,
        notes=full.notes,
    )


def graded_center_upto(spec: IdealSpec,
                       max_degree: int = DEFAULT_MAX_DEGREE) -> CenterBasis:
    """The graded center; for square-free ideals away from characteristic 2
    it coincides with the even-degree center."""
    if spec.field_char == 2:
        raise HypothesisError(
            "the graded/even center identification needs characteristic != 2")
    full = central_monomials_upto(spec, max_degree)
    even = tuple((d, els) for d, els in full.by_degree if d % 2 == 0)
    notes = list(full.notes)
    if all(d % 2 == 0 for d, _ in full.by_degree):
        notes.append(
            f"no odd-degree central monomials up to degree {max_degree}: "
            "the even-degree center equals the full center in this range")
    return CenterBasis(
        flavor=full.flavor,
        max_degree=max_degree,
        provenance=full.provenance,
        by_degree=even,
        identity_components=full.identity_components,
        notes=tuple(notes),
    )
