"""Exception types shared across the package."""


class EtalabError(Exception):
    """Base class for every error raised by this package."""


class PermutationError(EtalabError):
    """Malformed permutation data."""


class GroupError(EtalabError):
    """Invalid group construction or element/subgroup relationship."""


class GroupFileError(EtalabError):
    """Unreadable or malformed group file."""


class CyclotomicError(EtalabError):
    """Invalid cyclotomic arithmetic, e.g. a value outside the target ring."""


class CharacterError(EtalabError):
    """Invalid character operation."""


class TableError(EtalabError):
    """Character table computation failed an internal consistency check."""


class ChainError(EtalabError):
    """Restriction chain construction or classification failed."""


class ConstructionError(EtalabError):
    """A group builder could not produce the requested group."""
