"""Error taxonomy shared by the whole package.

Every domain failure derives from TropfanError and carries a stable
machine-readable ``code`` so the CLI can emit structured errors and map
them to exit status 1 (usage problems are argparse's exit 2).
"""


class TropfanError(Exception):
    """Base class for all structured errors raised by this package."""

    code = "error"


class DimensionMismatch(TropfanError):
    code = "dimension_mismatch"


class ZeroVector(TropfanError):
    code = "zero_vector"


class BadParameters(TropfanError):
    code = "bad_parameters"


class EmptyPolynomial(TropfanError):
    code = "empty_polynomial"


class NonBooleanInput(TropfanError):
    code = "non_boolean_input"


class NotLeftInvertible(TropfanError):
    code = "not_left_invertible"


class NoMutualFactorization(TropfanError):
    code = "no_mutual_factorization"


class NotRealizable(TropfanError):
    code = "not_realizable"


class NotBalanced(TropfanError):
    code = "not_balanced"


class Inconclusive(TropfanError):
    """Search bound exhausted before membership could be decided."""

    code = "inconclusive"


class InvalidMorphism(TropfanError):
    code = "invalid_morphism"


class CompositionMismatch(TropfanError):
    code = "composition_mismatch"


class NotGeometric(TropfanError):
    code = "not_geometric"


class NoIntegerSolution(TropfanError):
    code = "no_integer_solution"


class SupportViolation(TropfanError):
    code = "support_violation"


class ParseError(TropfanError):
    code = "parse_error"
