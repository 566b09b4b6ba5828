"""Exception hierarchy shared across the package."""


class PeacockError(Exception):
    """Base class for all protocol errors."""


class EmptyKeyword(PeacockError):
    """Keyword is empty after canonicalization."""


class KeywordTooLong(PeacockError):
    """Canonical keyword exceeds 256 UTF-8 bytes."""


class AddressTooLong(PeacockError):
    """Pointing address exceeds 1024 UTF-8 bytes."""


class PlaintextTooLong(PeacockError):
    """Payload plaintext exceeds 1024 bytes."""


class AuthenticationFailure(PeacockError):
    """Wrong key or tampered payload: the AEAD tag did not verify."""


class EpochMismatch(PeacockError):
    """Feather and supplied epoch key belong to different epochs."""


class MalformedFeather(PeacockError):
    """Feather violates its invariants or failed to parse."""


class UnknownEpoch(PeacockError):
    """The announcement board holds no key for the requested epoch."""


class NoEpochAnnounced(PeacockError):
    """The announcement board is empty."""


class RandomnessFailure(PeacockError):
    """The randomness provider could not supply the requested bytes."""


class ConfigMismatch(PeacockError):
    """Sweep configs disagree on fields that must be shared."""
