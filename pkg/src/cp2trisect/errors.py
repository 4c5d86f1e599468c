"""Exception hierarchy."""


class ComplexError(Exception):
    """Base class for all errors raised by this package."""


class LabelParseError(ComplexError, ValueError):
    pass


class MalformedSimplexError(ComplexError, ValueError):
    pass


class NotAFaceError(ComplexError, KeyError):
    pass


class PurityError(ComplexError, ValueError):
    pass


class LabelCollisionError(ComplexError, ValueError):
    pass


class NonPseudomanifoldError(ComplexError, ValueError):
    """A ridge lies in three or more facets (or the complex is not closed)."""


class DimensionError(ComplexError, ValueError):
    pass


class PermutationError(ComplexError, ValueError):
    """Label outside a permutation's domain, or a map that is not a bijection."""


class SearchLimitError(ComplexError, ValueError):
    """Refusal to run an enumeration beyond its tractable range."""


class GeometryError(ComplexError, ValueError):
    pass


class DomainError(ComplexError, ValueError):
    """A point handed to an evaluator lies outside its domain."""


class FacetFileError(ComplexError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
