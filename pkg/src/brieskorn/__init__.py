"""Exact invariants of Brieskorn spheres and negative-definite Seifert fibered spaces."""

from .arith import cf_evaluate, neg_continued_fraction, solve_congruence
from .classify import TABLE1, InvariantReport, classify, reproduce_table1, search_two_fillable
from .contact import canonical_vector, d3, fillable_count
from .correction import correction_term, full_path, maslov_grading, verify_vector
from .errors import DomainError, NotApplicable, VerificationMismatch
from .plumbing import PlumbingGraph, intersection_matrix, standard_graph
from .seifert import BrieskornIndex, SeifertData, from_brieskorn, reverse_orientation

__version__ = "0.1.0"

__all__ = [
    "TABLE1", "BrieskornIndex", "DomainError", "InvariantReport", "NotApplicable", "PlumbingGraph",
    "SeifertData", "VerificationMismatch", "canonical_vector", "cf_evaluate", "classify",
    "correction_term", "d3", "fillable_count", "from_brieskorn", "full_path", "intersection_matrix",
    "maslov_grading", "neg_continued_fraction", "reproduce_table1", "reverse_orientation",
    "search_two_fillable", "solve_congruence", "standard_graph", "verify_vector",
]
