"""Exact coherence decisions for two-dimensional Coxeter groups and
small-cancellation incoherence certificates for group presentations."""

from coxco.analyze import (
    CoherenceReport,
    decide_coherence,
    enumerate_infinite_subsets,
    euler_characteristic,
    is_two_dimensional,
    l2_betti_profile,
    npsc_graph_criterion,
)
from coxco.classify import FinitenessVerdict, IrreducibleType, is_finite, match_finite_type
from coxco.coxcore import INF, CoxeterSystem, GeneratorSubset, restrict, validate

__version__ = "0.1.0"
