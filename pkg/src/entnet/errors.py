"""Exception hierarchy shared by all entnet modules.

DomainError marks rejections mandated by the theory itself (disconnected
structures, forbidden inflations, ...); the CLI maps it to exit code 2.
Everything else is a plain usage or internal failure (exit code 1).
"""


class EntnetError(Exception):
    """Base class for all entnet errors."""


class InvalidInputError(EntnetError):
    """Malformed or precondition-violating arguments."""


class InvalidGateError(InvalidInputError):
    """Gate matrix is not unitary or does not fit its targets."""


class InvalidChannelError(InvalidInputError):
    """Teleportation channel sites are not in a Bell state."""


class EntangledSiteError(InvalidInputError):
    """Attempt to discard a site that is still entangled with the rest."""


class LimitError(EntnetError):
    """Combinatorial size guard exceeded."""


class DomainError(EntnetError):
    """Rejection required by the theory (e.g. disconnected network)."""


class InternalError(EntnetError):
    """A condition the theory guarantees impossible actually occurred."""
