"""Peacock: keyword rendezvous through an untrusted searching middleman.

A publisher mints a "feather" -- a keyed one-way image of a shared keyword
(the head) attached to the contact address sealed under a keyword-derived
key -- and posts it to a feathers-only registry. A searcher who knows the
keyword recomputes the head under the current TTP-announced epoch key,
asks the middleman to find it, and opens the payload. The middleman
matches heads without learning keywords; its best move is a dictionary
mapping attack, which epoch key rotation starves.
"""

from .core import (
    CanonicalKeyword,
    EpochKey,
    Head,
    PayloadKey,
    SealedPayload,
    canonicalize_keyword,
    compute_head,
    derive_payload_key,
    open_payload,
    seal_payload,
)
from .errors import (
    AddressTooLong,
    AuthenticationFailure,
    ConfigMismatch,
    EmptyKeyword,
    EpochMismatch,
    KeywordTooLong,
    MalformedFeather,
    NoEpochAnnounced,
    PeacockError,
    PlaintextTooLong,
    RandomnessFailure,
    UnknownEpoch,
)
from .feather import (
    Feather,
    PointingAddress,
    decode_feather,
    encode_feather,
    mint_feather,
    open_feather,
)
from .harness import (
    RotationConfig,
    RotationReport,
    ScenarioConfig,
    ScenarioReport,
    run_rendezvous,
    run_rotation_experiment,
    sweep_rotation,
)
from .middleman import AttackReport, MappedFeather, Middleman, QueryLogEntry
from .registry import FeatherStore
from .ttp import AnnouncementBoard

__all__ = [
    "AddressTooLong",
    "AnnouncementBoard",
    "AttackReport",
    "AuthenticationFailure",
    "CanonicalKeyword",
    "ConfigMismatch",
    "EmptyKeyword",
    "EpochKey",
    "EpochMismatch",
    "Feather",
    "FeatherStore",
    "Head",
    "KeywordTooLong",
    "MalformedFeather",
    "MappedFeather",
    "Middleman",
    "NoEpochAnnounced",
    "PayloadKey",
    "PeacockError",
    "PlaintextTooLong",
    "PointingAddress",
    "QueryLogEntry",
    "RandomnessFailure",
    "RotationConfig",
    "RotationReport",
    "ScenarioConfig",
    "ScenarioReport",
    "SealedPayload",
    "UnknownEpoch",
    "canonicalize_keyword",
    "compute_head",
    "decode_feather",
    "derive_payload_key",
    "encode_feather",
    "mint_feather",
    "open_feather",
    "open_payload",
    "run_rendezvous",
    "run_rotation_experiment",
    "seal_payload",
    "sweep_rotation",
]

__version__ = "0.1.0"
