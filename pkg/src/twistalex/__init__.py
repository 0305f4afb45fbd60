"""Exact twisted Alexander polynomials and Reidemeister torsion of knot groups."""

from .algebra import (CyclotomicNumber, LaurentPolynomial, PolyMatrix, RationalFunction,
                      cyclotomic_polynomial, delta, determinant, eq_up_to_unit, eval_numeric,
                      ratfn_normalize)
from .asymptotics import (ConvergenceRow, LimitExpression, convergence_table, tap_limit,
                          torsion_limit)
from .fpgroup import (Abelianization, GroupRingElement, Presentation, Word, abelianization,
                      fox_derivative, free_reduce, parse_word)
from .rep import (MetabelianData, Representation, block_decomposition, conjugacy_check_blocks,
                  direct_sum, metabelian_rep, period, sym_power, validate)
from .tap import (TapResult, reidemeister_torsion, tap_higher, twisted_alexander,
                  wada_criterion)
from .twobridge import (TwoBridgeParams, alexander_polynomial, closed_form_block,
                        closed_form_limit, closed_form_torsion_limit, enumerate_metabelian,
                        lemma_delta_product, lin_presentation, metabelian_data,
                        verification_suite)

__version__ = "0.1.0"

__all__ = [
    "CyclotomicNumber", "LaurentPolynomial", "PolyMatrix", "RationalFunction",
    "cyclotomic_polynomial", "delta", "determinant", "eq_up_to_unit", "eval_numeric",
    "ratfn_normalize", "ConvergenceRow", "LimitExpression", "convergence_table",
    "tap_limit", "torsion_limit", "Abelianization", "GroupRingElement", "Presentation",
    "Word", "abelianization", "fox_derivative", "free_reduce", "parse_word",
    "MetabelianData", "Representation", "block_decomposition", "conjugacy_check_blocks",
    "direct_sum", "metabelian_rep", "period", "sym_power", "validate", "TapResult",
    "reidemeister_torsion", "tap_higher", "twisted_alexander", "wada_criterion",
    "TwoBridgeParams", "alexander_polynomial", "closed_form_block", "closed_form_limit",
    "closed_form_torsion_limit", "enumerate_metabelian", "lemma_delta_product",
    "lin_presentation", "metabelian_data", "verification_suite",
]
