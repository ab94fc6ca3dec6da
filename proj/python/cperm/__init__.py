"""Enumerate the permutations of a string that satisfy per-position
allow/forbid constraints, in lexicographic order and without duplicates."""

from ._core import (
    ConstraintKind,
    ConstraintSet,
    GenStats,
    ParseError,
    PermittedMatrix,
    PermutationStream,
    PositionConstraint,
    ValidationReport,
    alphabet_of,
    count,
    generate,
    normalize,
    oracle,
    parse,
    render,
    run_cli,
    validate,
)

__version__ = "0.1.0"


def permutations(s, constraints="", sort_input=True):
    """Parse ``constraints`` (DSL text), validate and normalize them against
    ``s``, and return the lazy permutation stream."""
    cs = parse(constraints, len(s))
    report = validate(cs)
    if not report.ok:
        raise ValueError(report.describe())
    return generate(s, normalize(cs, s), sort_input=sort_input)


__all__ = [
    "ConstraintKind",
    "ConstraintSet",
    "GenStats",
    "ParseError",
    "PermittedMatrix",
    "PermutationStream",
    "PositionConstraint",
    "ValidationReport",
    "alphabet_of",
    "count",
    "generate",
    "normalize",
    "oracle",
    "parse",
    "permutations",
    "render",
    "run_cli",
    "validate",
]
