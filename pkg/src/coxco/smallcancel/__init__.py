"""Free-group words, metric small cancellation and random presentations."""

from coxco.smallcancel.montecarlo import RateRow, RateTable, monte_carlo, wilson_interval
from coxco.smallcancel.pieces import (
    Certificate,
    PieceReport,
    Presentation,
    PresentationError,
    SymmetrizedSet,
    incoherence_certificate,
    is_metric_small_cancellation,
    piece_report,
    symmetrize,
)
from coxco.smallcancel.sampling import count_cyclically_reduced, sample_cyclically_reduced
from coxco.smallcancel.words import (
    EmptyWord,
    Word,
    cyclic_reduce,
    free_reduce,
    inverse,
    is_proper_power,
    word,
    word_str,
)
