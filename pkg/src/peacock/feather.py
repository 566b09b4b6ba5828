"""Feathers: the published (head, sealed address) pair and its wire format.

Wire schema, one feather per line, lowercase hex, no extra fields:

    {"v":1,"epoch_id":<int>,"head":"<64 hex>","nonce":"<24 hex>",
     "ct":"<hex, even length <= 2048>","tag":"<32 hex>"}
"""

from __future__ import annotations

import json
import secrets
from dataclasses import dataclass
from random import Random
from typing import Optional

from .core import (
    EpochKey,
    HEAD_LEN,
    Head,
    NONCE_LEN,
    SealedPayload,
    TAG_LEN,
    canonicalize_keyword,
    compute_head,
    derive_payload_key,
    open_payload,
    seal_payload,
)
from .errors import (
    AddressTooLong,
    AuthenticationFailure,
    EpochMismatch,
    MalformedFeather,
)

MAX_ADDRESS_BYTES = 1024


@dataclass(frozen=True)
class PointingAddress:
    """Eve's contact locator. Opaque text; no format is imposed."""

    text: str

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError("pointing address must be non-empty")
        if len(self.text.encode("utf-8")) > MAX_ADDRESS_BYTES:
            raise AddressTooLong(
                f"address exceeds {MAX_ADDRESS_BYTES} UTF-8 bytes"
            )


@dataclass(frozen=True)
class Feather:
    """The published unit: epoch binding, one-way head, sealed address."""

    epoch_id: int
    head: Head
    payload: SealedPayload

    def __post_init__(self) -> None:
        if self.epoch_id < 0:
            raise ValueError("epoch_id must be non-negative")
        if len(self.head) != HEAD_LEN:
            raise ValueError(f"head must be {HEAD_LEN} bytes")


def mint_feather(
    raw_keyword: str,
    address: PointingAddress,
    ek: EpochKey,
    rng: Optional[Random] = None,
) -> Feather:
    """Build a feather for posting.

    The head is deterministic in (keyword, epoch key); the nonce is drawn
    fresh per mint, from `rng` when given (seeded harness runs) or from
    system randomness otherwise.
    """
    kw = canonicalize_keyword(raw_keyword)
    nonce = rng.randbytes(NONCE_LEN) if rng is not None else secrets.token_bytes(NONCE_LEN)
    payload = seal_payload(
        derive_payload_key(kw, ek), nonce, address.text.encode("utf-8")
    )
    return Feather(epoch_id=ek.epoch_id, head=compute_head(kw, ek), payload=payload)


def open_feather(f: Feather, raw_keyword: str, ek: EpochKey) -> PointingAddress:
    """Recover the pointing address from a feather.

    Succeeds iff the epoch matches and the keyword is the one used at mint
    time; raises EpochMismatch or AuthenticationFailure otherwise.
    """
    if ek.epoch_id != f.epoch_id:
        raise EpochMismatch(
            f"feather epoch {f.epoch_id} != key epoch {ek.epoch_id}"
        )
    kw = canonicalize_keyword(raw_keyword)
    try:
        plaintext = open_payload(derive_payload_key(kw, ek), f.payload)
    except AuthenticationFailure:
        raise AuthenticationFailure(
            "feather did not open: wrong keyword or tampered feather"
        ) from None
    return PointingAddress(plaintext.decode("utf-8"))


_SCHEMA_KEYS = ("v", "epoch_id", "head", "nonce", "ct", "tag")


def encode_feather(f: Feather) -> str:
    """Serialize a feather to its single-line wire form."""
    return json.dumps(
        {
            "v": 1,
            "epoch_id": f.epoch_id,
            "head": f.head.hex(),
            "nonce": f.payload.nonce.hex(),
            "ct": f.payload.ciphertext.hex(),
            "tag": f.payload.tag.hex(),
        },
        separators=(",", ":"),
    )


def _hex_field(obj: dict, key: str, length: int | None) -> bytes:
    value = obj[key]
    if not isinstance(value, str):
        raise MalformedFeather(f"field {key!r}: expected a hex string")
    if value != value.lower() or len(value) % 2 != 0:
        raise MalformedFeather(f"field {key!r}: not lowercase even-length hex")
    try:
        raw = bytes.fromhex(value)
    except ValueError:
        raise MalformedFeather(f"field {key!r}: invalid hex") from None
    if length is not None and len(raw) != length:
        raise MalformedFeather(
            f"field {key!r}: expected {length} bytes, got {len(raw)}"
        )
    return raw


def decode_feather(s: str) -> Feather:
    """Parse the wire form strictly; unknown fields are rejected."""
    try:
        obj = json.loads(s)
    except json.JSONDecodeError as exc:
        raise MalformedFeather(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise MalformedFeather("feather line must be a JSON object")
    if set(obj) != set(_SCHEMA_KEYS):
        unexpected = set(obj) - set(_SCHEMA_KEYS)
        missing = set(_SCHEMA_KEYS) - set(obj)
        raise MalformedFeather(
            f"bad field set (unknown: {sorted(unexpected)}, "
            f"missing: {sorted(missing)})"
        )
    if obj["v"] != 1:
        raise MalformedFeather(f"unsupported version {obj['v']!r}")
    epoch_id = obj["epoch_id"]
    if not isinstance(epoch_id, int) or isinstance(epoch_id, bool) or epoch_id < 0:
        raise MalformedFeather("field 'epoch_id': expected a non-negative integer")
    head = _hex_field(obj, "head", HEAD_LEN)
    nonce = _hex_field(obj, "nonce", NONCE_LEN)
    ct = _hex_field(obj, "ct", None)
    tag = _hex_field(obj, "tag", TAG_LEN)
    if len(obj["ct"]) > 2048:
        raise MalformedFeather("field 'ct': exceeds 2048 hex characters")
    try:
        payload = SealedPayload(nonce=nonce, ciphertext=ct, tag=tag)
        return Feather(epoch_id=epoch_id, head=head, payload=payload)
    except ValueError as exc:
        raise MalformedFeather(str(exc)) from None
