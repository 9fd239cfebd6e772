"""Pythagorean triples with a prescribed leg, and the power relations on odd legs."""

from tripleforge.chatetus import (
    CandidateSet,
    DegenerateTriple,
    LegEnumeration,
    LParity,
    Mode,
    NonIntegerResult,
    Rejection,
    Triple,
    TripleError,
    candidate_set,
    divisor_set_D,
    enumerate_leg,
    is_primitive,
    paper_set_P,
    triple_from_leg,
    triples_with_leg,
)
from tripleforge.factorization import (
    Factorization,
    TwoAdic,
    divisors,
    factorize,
    integer_sqrt,
    two_adic,
)
from tripleforge.oracle import (
    DiscrepancyReport,
    LegDiscrepancy,
    cross_check,
    merge_reports,
    oracle_triples_with_leg,
)
from tripleforge.power_relations import (
    PowerRelationReport,
    alternating_factor,
    base_triple,
    geometric_factor,
    power_triple,
    relate,
)

__version__ = "0.1.0"
