"""
Exception hierarchy for the length-density toolkit
"""


class ToolkitError(Exception):
    """Base class for every error raised by the toolkit"""


class InputError(ToolkitError, ValueError):
    """Invalid user input or a violated constructor precondition"""


class EmptyGenerators(InputError):
    """A generator or atom list was empty"""


class InvalidGenerator(InputError):
    """A generator is out of range (zero, negative, malformed)"""


class NonCoprime(InputError):
    """Numerical generators share a common factor; the caller must rescale"""


class DimensionMismatch(InputError):
    """Vectors of different lengths were mixed"""


class ZeroVector(InputError):
    """An affine generator was the zero vector"""


class MalformedRelation(InputError):
    """A relation side is zero, the sides coincide, or the length is wrong"""


class NoPositiveGrading(InputError):
    """A finite presentation admits no positive integer grading"""


class NonAtomicGenerator(InputError):
    """A listed generator is a combination of the other generators"""


class TagMismatch(InputError):
    """An element does not have the shape of the presentation it is used with"""


class NotInMonoid(InputError):
    """An element has no factorization"""


class IndexSpaceMismatch(InputError):
    """Two factorizations live over different atom sets"""


class InvalidSpec(InputError):
    """A construction spec is out of range"""


class InvalidIndex(InputError):
    """A family index is out of range"""


class InvalidLevel(InputError):
    """A truncation level is not implemented"""


class InvalidGroup(InputError):
    """A group description cannot be normalised"""


class ParseError(InputError):
    """Text input does not follow the grammar"""


class NoLdElements(InputError):
    """No scanned element has two or more factorization lengths"""


class BudgetExceeded(ToolkitError):
    """A search hit its node-expansion budget"""


class IncompleteSet(ToolkitError):
    """A factorization set truncated by the budget was passed where a complete one is required"""
