"""Exact symbolic analysis of quiver algebras bound by quadratic monomial
and (anti-)commutativity relations: admissibility, orthogonal ideals,
centers and their finite generation, Koszul duals, and Hochschild
finite-generation verdicts, all cross-checkable against an exact
linear-algebra oracle."""

__version__ = "0.1.0"

from .errors import (BudgetError, DslError, FalsificationError,
                     HypothesisError, IdealError, InputError, PacqaError,
                     QuiverError)
from .quiver import (Arrow, Path, Quiver, build_quiver, compose, opposite,
                     vertex_subquiver)
from .ideal import (ANTICOMMUTATIVE, COMMUTATIVE, AlgebraPresentation,
                    IdealSpec, contains_all_nonzero_squares, is_square_free,
                    make_presentation, opposite_ideal, orthogonal, restrict,
                    validate_ideal)
from .normalform import (SignedClass, canonical_form, equivalence_class,
                         monomial_in_ideal)
from .graphs import (AdmissibilityVerdict, Clique, MixedGraph,
                     enumerate_cliques, generator_graph, has_directed_cycle,
                     is_admissible, relation_graph, to_dot)
from .center import (CenterBasis, CenterElement, Centrality,
                     central_monomials_upto, center_is_trivial_at,
                     even_center_upto, graded_center_upto,
                     is_central_monomial)
from .fingen import (FinGenVerdict, InfiniteWitness, SCondition,
                     center_finitely_generated, degree_generators,
                     necessary_condition_s)
from .koszul import HochschildVerdict, hochschild_fg, koszul_dual
from .oracle import (FgEvidence, NilpotenceReport, TruncatedAlgebra,
                     oracle_center_upto, oracle_fg_evidence,
                     oracle_nilpotence_check, quotient_basis_upto,
                     raw_monomial_in_ideal)
from .dsl import SpecDocument, parse_spec, print_spec

__all__ = [name for name in dir() if not name.startswith("_")]
