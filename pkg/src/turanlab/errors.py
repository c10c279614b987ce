"""Exception hierarchy shared across the package."""


class TuranLabError(Exception):
    """Base class for all package errors."""


class CapacityError(TuranLabError, ValueError):
    """A construction would exceed the 64-vertex word size."""


class GraphDomainError(TuranLabError, ValueError):
    """An operation was called outside its mathematical domain."""


class Graph6Error(TuranLabError, ValueError):
    """Base class for graph6 parse failures."""


class Graph6HeaderError(Graph6Error):
    """The N(n) size header is missing or malformed."""


class Graph6CharacterError(Graph6Error):
    """A byte outside the printable range 63..126 was found."""


class Graph6LengthError(Graph6Error):
    """The body is shorter than the header announces."""


class Graph6TrailingDataError(Graph6Error):
    """Extra bytes follow the announced body."""


class Graph6PaddingError(Graph6Error):
    """Padding bits in the final body byte are not zero."""


class MalformedCertificateError(TuranLabError, ValueError):
    """A Berge-Tutte certificate violates a structural invariant."""


class SearchCapError(TuranLabError, ValueError):
    """An exhaustive search was requested beyond its vertex cap."""
