"""
Exception hierarchy shared by every omlkit subpackage.
"""

from typing import Optional, Sequence, Tuple


class ToolkitError(Exception):
    """Base class for all omlkit errors."""

    def __init__(self, message: str, details: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.details = details

    def __reduce__(self):
        """Support for pickling the exception when passing between processes."""
        return self.__class__, (self.message, self.details)

    def __str__(self):
        if self.details:
            return f"{self.message} ({self.details})"
        return self.message


class ConstructionError(ToolkitError):
    """A constructor received input outside its domain (e.g. MO_0)."""

    def __init__(self, message: str, constructor: Optional[str] = None, details: Optional[str] = None):
        super().__init__(message, details)
        self.constructor = constructor

    def __reduce__(self):
        return self.__class__, (self.message, self.constructor, self.details)


class LatticeError(ToolkitError):
    """A meet or join does not exist, or the order is not a lattice order."""

    def __init__(self, message: str, pair: Optional[Tuple[str, str]] = None, details: Optional[str] = None):
        super().__init__(message, details)
        self.pair = pair

    def __reduce__(self):
        return self.__class__, (self.message, self.pair, self.details)


class PastingError(ToolkitError):
    """Blocks cannot be pasted into a consistent orthostructure."""

    def __init__(self, message: str, elements: Optional[Sequence[str]] = None, details: Optional[str] = None):
        super().__init__(message, details)
        self.elements = tuple(elements) if elements else ()

    def __reduce__(self):
        return self.__class__, (self.message, self.elements, self.details)


class DiagramError(ToolkitError):
    """A Greechie diagram violates its structural invariants."""

    def __init__(self, message: str, context: Optional[Sequence[str]] = None, details: Optional[str] = None):
        super().__init__(message, details)
        self.context = tuple(context) if context else ()

    def __reduce__(self):
        return self.__class__, (self.message, self.context, self.details)


class UnknownAtomError(ToolkitError):
    """An atom (or element) label is not part of the structure."""

    def __init__(self, message: str, atom: Optional[str] = None, details: Optional[str] = None):
        super().__init__(message, details)
        self.atom = atom

    def __reduce__(self):
        return self.__class__, (self.message, self.atom, self.details)


class SizeLimitError(ToolkitError):
    """Input exceeds a configured size guard."""

    def __init__(
        self,
        message: str,
        size: Optional[int] = None,
        limit: Optional[int] = None,
        details: Optional[str] = None,
    ):
        super().__init__(message, details)
        self.size = size
        self.limit = limit

    def __reduce__(self):
        return self.__class__, (self.message, self.size, self.limit, self.details)


class ParallelRaysError(ToolkitError):
    """nor() was applied to linearly dependent rays."""

    def __init__(self, message: str, rays: Optional[Sequence[str]] = None, details: Optional[str] = None):
        super().__init__(message, details)
        self.rays = tuple(rays) if rays else ()

    def __reduce__(self):
        return self.__class__, (self.message, self.rays, self.details)


class ClosureLimitError(ToolkitError):
    """Orthogeneration produced more rays than the configured cap."""

    def __init__(self, message: str, cap: Optional[int] = None, details: Optional[str] = None):
        super().__init__(message, details)
        self.cap = cap

    def __reduce__(self):
        return self.__class__, (self.message, self.cap, self.details)


class ContextError(ToolkitError):
    """A ray set has maximal orthogonal subsets that are not triads."""

    def __init__(
        self,
        message: str,
        offending: Optional[Sequence[Sequence[str]]] = None,
        details: Optional[str] = None,
    ):
        super().__init__(message, details)
        self.offending = tuple(tuple(s) for s in offending) if offending else ()

    def __reduce__(self):
        return self.__class__, (self.message, self.offending, self.details)


class DerivationError(ToolkitError):
    """A row of the scripted nor-derivation does not evaluate as recorded."""

    def __init__(self, message: str, row: Optional[str] = None, details: Optional[str] = None):
        super().__init__(message, details)
        self.row = row

    def __reduce__(self):
        return self.__class__, (self.message, self.row, self.details)


class ToleranceError(ToolkitError):
    """A numeric invariant (hermiticity, idempotence, trace) fails beyond tolerance."""

    def __init__(self, message: str, quantity: Optional[float] = None, details: Optional[str] = None):
        super().__init__(message, details)
        self.quantity = quantity

    def __reduce__(self):
        return self.__class__, (self.message, self.quantity, self.details)


class DegenerateParametersError(ToolkitError):
    """Ur-operator parameters are not pairwise distinct."""

    def __reduce__(self):
        return self.__class__, (self.message, self.details)


class SchemeError(ToolkitError):
    """An event scheme violates its invariants."""

    def __reduce__(self):
        return self.__class__, (self.message, self.details)


class DimensionMismatchError(ToolkitError):
    """Operands have incompatible dimensions."""

    def __init__(
        self,
        message: str,
        expected: Optional[int] = None,
        actual: Optional[int] = None,
        details: Optional[str] = None,
    ):
        super().__init__(message, details)
        self.expected = expected
        self.actual = actual

    def __reduce__(self):
        return self.__class__, (self.message, self.expected, self.actual, self.details)


class ParseError(ToolkitError):
    """An input file or argument could not be parsed."""

    def __init__(
        self,
        message: str,
        source: Optional[str] = None,
        line: Optional[int] = None,
        details: Optional[str] = None,
    ):
        super().__init__(message, details)
        self.source = source
        self.line = line

    def __reduce__(self):
        return self.__class__, (self.message, self.source, self.line, self.details)

    def __str__(self):
        where = ""
        if self.source:
            where = f"{self.source}:{self.line}: " if self.line else f"{self.source}: "
        base = f"{where}{self.message}"
        if self.details:
            return f"{base} ({self.details})"
        return base
