from __future__ import annotations

from helpers import build, fixture_ideal, two_loop_polynomial
from pacqa.ideal import COMMUTATIVE
from pacqa.koszul import dual_ideal
from pacqa.oracle import (oracle_center_upto, oracle_fg_evidence,
                          oracle_nilpotence_check, quotient_basis_upto)


def degree_words(basis):
    return [(d, ["".join(e.word) for e in els]) for d, els in basis.by_degree]


class TestQuotientBasis:
    def test_two_loops_arrow_dimensions(self):
        alg = quotient_basis_upto(fixture_ideal("comm_two_loops_arrow"), 3)
        assert alg.dimensions == (2, 3, 2, 0)
        assert alg.basis[2] == (("a", "b"), ("b", "c"))
        assert alg.self_checked == (1, 2, 3)

    def test_free_loop_polynomial_ring(self):
        spec = build(["x"], [("a", "x", "x")], COMMUTATIVE)
        alg = quotient_basis_upto(spec, 5)
        assert alg.dimensions == (1, 1, 1, 1, 1, 1)

    def test_free_pair_fixture_degree_two(self):
        # 16 words, 4 squares die, relations glue 5 pairs, c*d and d*c
        # survive separately: dimension 7
        alg = quotient_basis_upto(fixture_ideal("anti_four_loops_free_pair"),
                                  2)
        assert alg.dimensions == (1, 4, 7)
        assert tuple("".join(w) for w in alg.basis[2]) == (
            "ab", "ac", "ad", "bc", "bd", "cd", "dc")
        assert 2 in alg.self_checked

    def test_raw_self_check_runs_on_fixtures(self):
        for name in ("comm_two_loops_arrow", "monomial_two_loops_two_arrows"):
            alg = quotient_basis_upto(fixture_ideal(name), 4)
            assert alg.self_checked

    def test_budget_guard(self):
        import pytest as _pytest
        from pacqa.errors import BudgetError
        spec = build(["x"], [("a", "x", "x"), ("b", "x", "x")], COMMUTATIVE)
        with _pytest.raises(BudgetError):
            quotient_basis_upto(spec, 6, budget=10)


class TestOracleCenter:
    def test_counterexample(self):
        basis = oracle_center_upto(fixture_ideal("comm_four_loops_arrow_out"),
                                   2)
        assert degree_words(basis) == [(1, ["a"]), (2, ["aa", "cd"])]

    def test_anti_two_loops(self):
        basis = oracle_center_upto(fixture_ideal("anti_two_loops_arrow"), 2)
        assert degree_words(basis) == [(2, ["bb"])]

    def test_no_loops_no_positive_center(self):
        # no cycles at all: nothing can be central in positive degrees
        spec = build(["x", "y"], [("c", "x", "y")], COMMUTATIVE)
        assert degree_words(oracle_center_upto(spec, 4)) == []
        # a back-and-forth pair with both compositions killed behaves the
        # same way (the surviving-cycle case is different, see below)
        spec = build(["x", "y"], [("c", "x", "y"), ("d", "y", "x")],
                     COMMUTATIVE, monomials=[("c", "d"), ("d", "c")])
        assert degree_words(oracle_center_upto(spec, 4)) == []

    def test_monomial_basis_under_square_free(self):
        for name in ("anti_two_loops_arrow", "comm_four_loops_arrow_out"):
            basis = oracle_center_upto(fixture_ideal(name), 4)
            assert basis.is_monomial

    def test_cycle_through_two_vertices_allowed(self):
        # cd is a cycle at x even though c and d are not loops
        spec = build(["x", "y"], [("c", "x", "y"), ("d", "y", "x")],
                     COMMUTATIVE)
        basis = oracle_center_upto(spec, 2)
        # cd + dc is central in the free algebra on this cycle quiver
        elements = basis.degree_slice(2)
        assert len(elements) == 1
        assert not elements[0].is_monomial
        assert [(c, "".join(w)) for c, w in elements[0].terms] == \
            [(1, "cd"), (1, "dc")]


class TestNilpotence:
    def test_anti_two_loops_powers(self):
        spec = fixture_ideal("anti_two_loops_arrow")
        basis = oracle_center_upto(spec, 8)
        report = oracle_nilpotence_check(spec, basis, 8)
        assert report.all_nonzero
        assert (("b", "b"), 4, True) in report.checks

    def test_polynomial_pair_all_powers(self):
        spec = two_loop_polynomial()
        basis = oracle_center_upto(spec, 8)
        report = oracle_nilpotence_check(spec, basis, 8)
        assert report.all_nonzero

    def test_vacuous_on_empty_center(self):
        dual = dual_ideal(fixture_ideal("monomial_two_loops_two_arrows"))
        basis = oracle_center_upto(dual, 4)
        report = oracle_nilpotence_check(dual, basis, 4)
        assert report.checks == ()
        assert report.all_nonzero


class TestCharacteristicTwo:
    def test_center_over_prime_field(self):
        # in characteristic 2 the anticommutative relation folds into the
        # commutative one; the oracle works over GF(2) and must agree with
        # the clique engine
        from pacqa.center import central_monomials_upto

        spec = build(["x"], [("a", "x", "x"), ("b", "x", "x")],
                     "anticommutative", relations=[("a", "b")], char=2)
        assert spec.flavor == COMMUTATIVE
        theorem = central_monomials_upto(spec, 4)
        oracle = oracle_center_upto(spec, 4)
        for d in range(1, 5):
            assert theorem.words_at(d) == oracle.words_at(d)

    def test_membership_over_prime_field(self):
        from pacqa.normalform import monomial_in_ideal
        from pacqa.oracle import raw_monomial_in_ideal

        spec = build(["x"], [("a", "x", "x"), ("b", "x", "x")],
                     "anticommutative",
                     monomials=[("a", "a")], relations=[("a", "b")], char=2)
        word = ("b", "a", "a")  # rewrites to a*a*b, killed by the square
        assert monomial_in_ideal(spec, word)
        assert raw_monomial_in_ideal(spec, word)


class TestGenerationConsistency:
    """Finite generation verdicts against the oracle's saturation."""

    def test_finite_verdicts_saturate(self):
        from pacqa.fingen import center_finitely_generated, degree_generators
        specs = [two_loop_polynomial(),
                 dual_ideal(fixture_ideal("anti_four_loops_full")),
                 build(["x"], [("a", "x", "x"), ("b", "x", "x"),
                               ("c", "x", "x")], "anticommutative",
                       relations=[("a", "b"), ("a", "c"), ("b", "c")])]
        for spec in specs:
            verdict = center_finitely_generated(spec)
            if verdict.status != "finitely-generated":
                continue
            max_gen = max(len(w) for w in degree_generators(spec))
            evidence = oracle_fg_evidence(spec, 6)
            assert all(d <= max_gen for d in evidence.new_generator_degrees), \
                (spec.generator_strings(), evidence.rows)

    def test_infinite_verdicts_keep_generating(self):
        evidence = oracle_fg_evidence(
            fixture_ideal("comm_four_loops_arrow_out"), 6)
        flagged = set(evidence.new_generator_degrees)
        assert {2, 4, 6} <= flagged
        dual = dual_ideal(fixture_ideal("comm_two_loops_arrow"))
        evidence = oracle_fg_evidence(dual, 6)
        assert max(evidence.new_generator_degrees) >= 5


class TestFgEvidence:
    def test_counterexample_keeps_generating(self):
        evidence = oracle_fg_evidence(
            fixture_ideal("comm_four_loops_arrow_out"), 6)
        assert evidence.rows == ((1, 1, 1), (2, 2, 1), (3, 4, 2),
                                 (4, 7, 2), (5, 11, 2), (6, 16, 2))
        assert {2, 4, 6} <= set(evidence.new_generator_degrees)

    def test_polynomial_pair_saturates_after_degree_one(self):
        evidence = oracle_fg_evidence(two_loop_polynomial(), 6)
        assert evidence.new_generator_degrees == (1,)

    def test_trivial_center_no_generators(self):
        dual = dual_ideal(fixture_ideal("monomial_two_loops_two_arrows"))
        evidence = oracle_fg_evidence(dual, 4)
        assert evidence.new_generator_degrees == ()
