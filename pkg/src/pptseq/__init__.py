"""Primitive Pythagorean triples and the pseudorandom structure of their
residue classes.

The package enumerates PPTs in increasing-hypotenuse order, classifies the
odd leg modulo an odd prime, extracts Baudhayana gap sequences (distances
between repeats of one class), and quantifies their statistics:
divisibility censuses, non-normalized autocorrelation, and basic
randomness tests.  A command line front end (``pptseq``) serializes all of
it to CSV/JSONL.
"""

from .autocorr import (
    AutocorrResult,
    AutocorrSummary,
    autocorrelation,
    c0_series_estimate,
    default_gap_model,
    expected_offpeak,
    summarize,
)
from .gaps import (
    GapSequence,
    expected_mean_gap,
    gap_histogram,
    gap_sequence,
    gaps_from_letters,
    mean_gap,
)
from .randomness import (
    CHI_SQUARE_CRIT_99,
    TestReport,
    chi_square_frequencies,
    serial_correlation,
)
from .residues import (
    ClassLabel,
    ClassSequence,
    DivisibilityTable,
    class_frequencies,
    class_sequence,
    classify,
    divisibility_table,
    grid_census,
    is_odd_prime,
    theorem_probability,
)
from .triples import (
    MAX_GENERATOR,
    NotCoprimeError,
    OrderError,
    OverflowGuardError,
    ParityError,
    Triple,
    TripleError,
    TripleStream,
    brute_force_ordered,
    from_st,
    gcd,
    generate_a_values,
    generate_ordered,
)

__version__ = "0.1.0"

__all__ = [
    "AutocorrResult",
    "AutocorrSummary",
    "CHI_SQUARE_CRIT_99",
    "ClassLabel",
    "ClassSequence",
    "DivisibilityTable",
    "GapSequence",
    "MAX_GENERATOR",
    "NotCoprimeError",
    "OrderError",
    "OverflowGuardError",
    "ParityError",
    "TestReport",
    "Triple",
    "TripleError",
    "TripleStream",
    "autocorrelation",
    "brute_force_ordered",
    "c0_series_estimate",
    "chi_square_frequencies",
    "class_frequencies",
    "class_sequence",
    "classify",
    "default_gap_model",
    "divisibility_table",
    "expected_mean_gap",
    "expected_offpeak",
    "from_st",
    "gap_histogram",
    "gap_sequence",
    "gaps_from_letters",
    "gcd",
    "generate_a_values",
    "generate_ordered",
    "grid_census",
    "is_odd_prime",
    "mean_gap",
    "serial_correlation",
    "summarize",
    "theorem_probability",
    "__version__",
]
