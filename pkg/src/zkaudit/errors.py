"""Exception types shared across the toolkit."""


class AuditError(Exception):
    """Base class for all zkaudit errors."""


class DecodeError(AuditError):
    """Malformed or non-canonical byte encoding."""


class FormatError(AuditError):
    """Invalid block padding or file structure on reassembly."""


class ProtocolError(AuditError):
    """Protocol-level misuse, e.g. challenge index out of range."""


class CapabilityError(AuditError):
    """Operation requires key material (trapdoor, mode) that is absent."""


class GameError(AuditError):
    """Security-game precondition violated by the adversary."""


class StorageError(AuditError):
    """Server-side record store failure (duplicate, missing, corrupt)."""


class TransportError(AuditError):
    """Wire-transport failure (framing, truncation, unknown message)."""
