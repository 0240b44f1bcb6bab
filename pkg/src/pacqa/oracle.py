"""Ground-truth engine: exact linear algebra over the truncated quotient.

Independent of the clique machinery, this module computes quotient bases
degree by degree (with a raw Gaussian-elimination self-check over the full
path list), solves the centralizer equations ``a z = z a`` exactly to get
the center, verifies non-nilpotence of central monomials, and produces
degreewise finite-generation evidence by saturating products of
lower-degree central elements.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .center import CenterBasis, CenterElement, surviving_multi_vertex_cycle
from .errors import BudgetError, FalsificationError
from .ideal import IdealSpec, is_square_free
from .linalg import SpanBasis, field_for, nullspace
from .normalform import canonical_index_form, context_for

Word = tuple[str, ...]

BASIS_BUDGET = 200_000
SELF_CHECK_PATH_CAP = 320


@dataclass(frozen=True)
class TruncatedAlgebra:
    """Canonical monomial bases of the quotient, degree by degree.

    Degree 0 is spanned by the vertex idempotents; each higher degree by one
    lexicographically minimal word per surviving equivalence class.
    """

    spec: IdealSpec
    max_degree: int
    basis: tuple[tuple[Word, ...], ...]  # index d -> canonical words
    self_checked: tuple[int, ...]  # degrees re-verified by raw elimination

    @property
    def dimensions(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.basis)


def enumerate_paths(spec: IdealSpec, degree: int) -> list[tuple[int, ...]]:
    """All paths of the given degree as index words, lexicographically."""
    ctx = context_for(spec)
    n = len(ctx.names)
    if degree == 0:
        return []
    words: list[tuple[int, ...]] = [(i,) for i in range(n)]
    for _ in range(degree - 1):
        nxt = []
        for w in words:
            last = w[-1]
            for j in range(n):
                if ctx.compose_ok[last][j]:
                    nxt.append(w + (j,))
        words = nxt
    return words


def count_paths(spec: IdealSpec, degree: int) -> int:
    if degree == 0:
        return len(spec.quiver.vertices)
    ctx = context_for(spec)
    n = len(ctx.names)
    counts = [1] * n
    for _ in range(degree - 1):
        nxt = [0] * n
        for i in range(n):
            if counts[i]:
                for j in range(n):
                    if ctx.compose_ok[i][j]:
                        nxt[j] += counts[i]
        counts = nxt
    return sum(counts)


def _generator_rows(spec: IdealSpec, degree: int, field):
    """Unit/binomial vectors spanning the degree slice of the ideal, over
    the full path list.  Yields (columns dict) rows; the path order defines
    the columns."""
    ctx = context_for(spec)
    paths = enumerate_paths(spec, degree)
    col = {w: i for i, w in enumerate(paths)}
    one = field.of(1)
    eps = field.of(ctx.eps)
    pairs = ([(ctx.index[a], ctx.index[b], False) for a, b in spec.monomials]
             + [(ctx.index[a], ctx.index[b], True) for a, b in spec.relations])

    cache: dict[int, list] = {0: [()]}

    def words_between(length: int):
        if length not in cache:
            cache[length] = enumerate_paths(spec, length)
        return cache[length]

    rows = []
    for i in range(degree - 1):
        lefts = words_between(i)
        rights = words_between(degree - 2 - i)
        for u, v, is_rel in pairs:
            for p in lefts:
                if p and not ctx.compose_ok[p[-1]][u]:
                    continue
                for q in rights:
                    if q and not ctx.compose_ok[v][q[0]]:
                        continue
                    row = [field.of(0)] * len(paths)
                    row[col[p + (u, v) + q]] = one
                    if is_rel:
                        # relation generator uv - eps*vu
                        other = col[p + (v, u) + q]
                        row[other] = field.sub(row[other], eps)
                    rows.append(row)
    return paths, col, rows


def _raw_dimension(spec: IdealSpec, degree: int) -> int:
    """Quotient dimension at one degree by raw elimination:
    dim = #paths - rank(span of p * generator * q)."""
    field = field_for(spec.field_char)
    paths, _, rows = _generator_rows(spec, degree, field)
    span = SpanBasis(len(paths), field)
    for row in rows:
        span.add(row)
    return len(paths) - span.dimension


def quotient_basis_upto(spec: IdealSpec, max_degree: int, *,
                        self_check: bool = True,
                        budget: int = BASIS_BUDGET) -> TruncatedAlgebra:
    """Canonical bases of degrees 0..max_degree.

    The frontier route extends surviving canonical words arrow by arrow; a
    prefix of a surviving word survives, so this reaches every class.  When
    the raw path count at a degree is small enough the dimension is
    recomputed by raw elimination and compared.
    """
    ctx = context_for(spec)
    n = len(ctx.names)
    basis: list[tuple[Word, ...]] = [tuple(spec.quiver.vertices)]
    frontier: list[tuple[int, ...]] = []
    total = 0
    checked: list[int] = []
    for d in range(1, max_degree + 1):
        if d == 1:
            canon = {(i,) for i in range(n)}
        else:
            canon = set()
            for w in frontier:
                last = w[-1]
                for j in range(n):
                    if not ctx.compose_ok[last][j]:
                        continue
                    cf = canonical_index_form(ctx, w + (j,))
                    if cf is not None:
                        canon.add(cf[1])
        frontier = sorted(canon)
        total += len(frontier)
        if total > budget:
            raise BudgetError(
                f"quotient basis exceeds the budget of {budget} words at "
                f"degree {d}")
        if self_check and count_paths(spec, d) <= SELF_CHECK_PATH_CAP:
            raw = _raw_dimension(spec, d)
            if raw != len(frontier):
                raise FalsificationError(
                    f"degree {d}: class-based dimension {len(frontier)} "
                    f"disagrees with raw elimination {raw}")
            checked.append(d)
        basis.append(tuple(ctx.decode(w) for w in frontier))
    return TruncatedAlgebra(spec, max_degree, tuple(basis), tuple(checked))


def raw_monomial_in_ideal(spec: IdealSpec, word: Word) -> bool:
    """Ideal membership by raw span reduction, independent of the class
    BFS; only for degrees where the full path list is affordable."""
    degree = len(word)
    if degree < 2:
        return False
    if count_paths(spec, degree) > SELF_CHECK_PATH_CAP:
        raise BudgetError("path list too large for the raw membership route")
    ctx = context_for(spec)
    field = field_for(spec.field_char)
    paths, col, rows = _generator_rows(spec, degree, field)
    target = ctx.encode(word)
    if target not in col:
        raise FalsificationError(f"{'*'.join(word)} is not a path")
    span = SpanBasis(len(paths), field)
    for row in rows:
        span.add(row)
    vec = [field.of(0)] * len(paths)
    vec[col[target]] = field.of(1)
    return span.contains(vec)


def _multiset(word: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(word))


def oracle_center_upto(spec: IdealSpec, max_degree: int, *,
                       algebra: TruncatedAlgebra | None = None
                       ) -> CenterBasis:
    """Solve ``a z = z a`` for every arrow exactly, degree by degree.

    Candidates are restricted to cycle words (the center of a path algebra
    quotient is spanned by cycles; the vertex-idempotent equations are then
    automatic), and the linear system splits into blocks by arrow multiset:
    multiplying by an arrow maps one multiset block into another, so the
    split is plain sparsity, not an assumption.
    """
    if algebra is None:
        algebra = quotient_basis_upto(spec, max_degree + 1)
    if algebra.max_degree < max_degree + 1:
        raise BudgetError("algebra truncation too small for this degree")
    ctx = context_for(spec)
    field = field_for(spec.field_char)
    q = spec.quiver
    n = len(ctx.names)
    by_degree: list[tuple[int, tuple[CenterElement, ...]]] = []
    # centers are monomial when square-free AND loop-supported; a surviving
    # multi-vertex cycle allows genuine sums over rotations
    expect_monomial = (is_square_free(spec)
                       and surviving_multi_vertex_cycle(spec) is None)
    for d in range(1, max_degree + 1):
        cycles = [ctx.encode(w) for w in algebra.basis[d]
                  if q.origin(w[0]) == q.target(w[-1])]
        blocks: dict[tuple[int, ...], list[tuple[int, ...]]] = defaultdict(list)
        for w in cycles:
            blocks[_multiset(w)].append(w)
        elements: list[CenterElement] = []
        for key in sorted(blocks):
            block = sorted(blocks[key])
            col = {w: i for i, w in enumerate(block)}
            sparse_rows: dict[tuple[int, tuple[int, ...]], dict[int, int]]
            sparse_rows = defaultdict(dict)
            for w in block:
                for a in range(n):
                    if ctx.compose_ok[a][w[0]]:
                        cf = canonical_index_form(ctx, (a,) + w)
                        if cf is not None:
                            sign, rep = cf
                            row = sparse_rows[(a, rep)]
                            row[col[w]] = row.get(col[w], 0) + sign
                    if ctx.compose_ok[w[-1]][a]:
                        cf = canonical_index_form(ctx, w + (a,))
                        if cf is not None:
                            sign, rep = cf
                            row = sparse_rows[(a, rep)]
                            row[col[w]] = row.get(col[w], 0) - sign
            dense = []
            for _, sparse in sorted(sparse_rows.items()):
                row = [field.of(0)] * len(block)
                nonzero = False
                for j, v in sparse.items():
                    fv = field.of(v)
                    row[j] = fv
                    nonzero = nonzero or not field.is_zero(fv)
                if nonzero:
                    dense.append(row)
            for vec in nullspace(dense, len(block), field):
                terms = tuple(
                    (coeff, ctx.decode(block[j]))
                    for j, coeff in enumerate(vec)
                    if not field.is_zero(coeff))
                if not terms:
                    continue
                basepoints = {q.origin(w[0]) for _, w in terms}
                element = CenterElement(
                    terms, basepoints.pop() if len(basepoints) == 1 else None)
                if expect_monomial and not element.is_monomial:
                    raise FalsificationError(
                        "square-free loop-supported ideal but the center "
                        "solver produced a non-monomial basis element "
                        + element.render())
                elements.append(element)
        elements.sort(key=lambda e: q.word_key(e.terms[0][1]))
        if elements:
            by_degree.append((d, tuple(elements)))
    return CenterBasis(
        flavor=spec.flavor,
        max_degree=max_degree,
        provenance="oracle",
        by_degree=tuple(by_degree),
        identity_components=len(q.connected_components),
        notes=(),
    )


@dataclass(frozen=True)
class NilpotenceReport:
    checks: tuple[tuple[Word, int, bool], ...]  # (monomial, power, nonzero)

    @property
    def all_nonzero(self) -> bool:
        return all(ok for _, _, ok in self.checks)


def oracle_nilpotence_check(spec: IdealSpec, basis: CenterBasis,
                            max_degree: int) -> NilpotenceReport:
    """For each central monomial p, verify p^floor(D/deg p) is nonzero; for
    a square-free ideal any failure falsifies the no-nilpotents guarantee."""
    ctx = context_for(spec)
    checks = []
    for _, elements in basis.by_degree:
        for element in elements:
            if not element.is_monomial:
                continue
            word = ctx.encode(element.word)
            power = max_degree // len(word)
            if power < 1:
                continue
            ok = canonical_index_form(ctx, word * power) is not None
            checks.append((element.word, power, ok))
    report = NilpotenceReport(tuple(checks))
    if is_square_free(spec) and not report.all_nonzero:
        bad = [(w, p) for w, p, ok in checks if not ok]
        raise FalsificationError(
            f"nilpotent central monomials over a square-free ideal: {bad}")
    return report


@dataclass(frozen=True)
class FgEvidence:
    max_degree: int
    rows: tuple[tuple[int, int, int], ...]  # (degree, center dim, new dim)

    @property
    def new_generator_degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _, new in self.rows if new > 0)


def oracle_fg_evidence(spec: IdealSpec, max_degree: int, *,
                       algebra: TruncatedAlgebra | None = None,
                       center: CenterBasis | None = None) -> FgEvidence:
    """Degreewise saturation: at each degree, how much of the center lies
    outside the span of products of lower-degree central elements.

    An infinitely generated center keeps producing new generators; a center
    generated in low degree saturates immediately.
    """
    if algebra is None:
        algebra = quotient_basis_upto(spec, max_degree + 1)
    if center is None:
        center = oracle_center_upto(spec, max_degree, algebra=algebra)
    ctx = context_for(spec)
    field = field_for(spec.field_char)

    basis_cols = {
        d: {ctx.encode(w): i for i, w in enumerate(algebra.basis[d])}
        for d in range(1, max_degree + 1)
    }

    def fcoeff(c):
        return field.of(c) if isinstance(c, int) else c

    def to_vector(terms, degree):
        cols = basis_cols[degree]
        vec = [field.of(0)] * len(cols)
        for coeff, word in terms:
            vec[cols[ctx.encode(word)]] = fcoeff(coeff)
        return vec

    def multiply(left_terms, right_terms):
        out: dict[tuple[int, ...], object] = {}
        for lc, lw in left_terms:
            for rc, rw in right_terms:
                li, ri = ctx.encode(lw), ctx.encode(rw)
                if not ctx.compose_ok[li[-1]][ri[0]]:
                    continue
                cf = canonical_index_form(ctx, li + ri)
                if cf is None:
                    continue
                sign, rep = cf
                coeff = field.mul(field.mul(fcoeff(lc), fcoeff(rc)),
                                  field.of(sign))
                out[rep] = field.add(out.get(rep, field.of(0)), coeff)
        return [(c, ctx.decode(rep)) for rep, c in sorted(out.items())
                if not field.is_zero(c)]

    center_terms: dict[int, list] = {d: [] for d in range(1, max_degree + 1)}
    for d, elements in center.by_degree:
        center_terms[d] = [e.terms for e in elements]

    # subalgebra_slice[g]: elements spanning the degree-g part of the
    # subalgebra generated by all central elements of degree <= g
    subalgebra_slice: dict[int, list] = {}
    rows: list[tuple[int, int, int]] = []
    for d in range(1, max_degree + 1):
        product_span = SpanBasis(len(basis_cols[d]), field)
        product_elements: list = []
        for e in range(1, d):
            for z in center_terms[e]:
                for h in subalgebra_slice.get(d - e, ()):
                    prod = multiply(z, h)
                    if prod and product_span.add(to_vector(prod, d)):
                        product_elements.append(prod)
        new = 0
        for z in center_terms[d]:
            if not product_span.contains(to_vector(z, d)):
                new += 1
                product_span.add(to_vector(z, d))
        rows.append((d, len(center_terms[d]), new))
        slice_span = SpanBasis(len(basis_cols[d]), field)
        slice_elements: list = []
        for terms in product_elements + center_terms[d]:
            if slice_span.add(to_vector(terms, d)):
                slice_elements.append(terms)
        subalgebra_slice[d] = slice_elements
    return FgEvidence(max_degree, tuple(rows))
