"""Citation-based taxonomy construction and concentration-based accuracy evaluation.

Builds document-level taxonomies of a citation corpus via direct-citation,
bibliographic-coupling, and co-citation clustering, and scores any taxonomy
(including journal-category schemes) by how strongly it concentrates the
references of long-bibliography "gold standard" papers.
"""

__version__ = "0.1.0"


class CitetaxError(Exception):
    """Base class for toolkit errors."""


class DataError(CitetaxError):
    """Invalid or inconsistent input data (CLI exit code 2)."""
