"""Core cryptographic primitives.

Fixed protocol parameters: 32-byte epoch keys, heads and payload keys,
12-byte nonces, 16-byte tags, keyword at most 256 UTF-8 bytes, payload at
most 1024 bytes.

Instantiation: heads are HMAC-SHA256 under the public epoch key, payload
keys come from HKDF-SHA256 with the keyword as input keying material, and
payload sealing is ChaCha20-Poly1305. Head and payload-key derivations use
distinct context strings, so a head reveals nothing about the payload key.
"""

from __future__ import annotations

import hashlib
import hmac
import struct
import unicodedata
from dataclasses import dataclass
from datetime import datetime

from cryptography.exceptions import InvalidTag
from cryptography.hazmat.primitives.ciphers.aead import ChaCha20Poly1305

from .errors import (
    AuthenticationFailure,
    EmptyKeyword,
    KeywordTooLong,
    PlaintextTooLong,
)

KEY_LEN = 32
HEAD_LEN = 32
NONCE_LEN = 12
TAG_LEN = 16
MAX_KEYWORD_BYTES = 256
MAX_PLAINTEXT_BYTES = 1024

_HEAD_CONTEXT = b"PEACOCK-HEAD-v1"
_PAYLOAD_CONTEXT = b"PEACOCK-PAYLOAD-v1"

# Type aliases: heads and payload keys are opaque 32-byte strings.
Head = bytes
PayloadKey = bytes


@dataclass(frozen=True)
class CanonicalKeyword:
    """A keyword in canonical form: NFC-normalized, lowercased, whitespace
    trimmed and collapsed. Construct via canonicalize_keyword()."""

    text: str

    def encode(self) -> bytes:
        return self.text.encode("utf-8")


@dataclass(frozen=True)
class EpochKey:
    """A TTP-announced public one-way key for one rotation epoch."""

    epoch_id: int
    key: bytes
    issued_at: datetime

    def __post_init__(self) -> None:
        if self.epoch_id < 0:
            raise ValueError("epoch_id must be non-negative")
        if len(self.key) != KEY_LEN:
            raise ValueError(f"epoch key must be {KEY_LEN} bytes")


@dataclass(frozen=True)
class SealedPayload:
    """Authenticated ciphertext: nonce, same-length ciphertext, 16-byte tag."""

    nonce: bytes
    ciphertext: bytes
    tag: bytes

    def __post_init__(self) -> None:
        if len(self.nonce) != NONCE_LEN:
            raise ValueError(f"nonce must be {NONCE_LEN} bytes")
        if len(self.tag) != TAG_LEN:
            raise ValueError(f"tag must be {TAG_LEN} bytes")
        if len(self.ciphertext) > MAX_PLAINTEXT_BYTES:
            raise ValueError("ciphertext exceeds maximum payload size")


def canonicalize_keyword(raw: str) -> CanonicalKeyword:
    """Normalize a raw keyword so that independently typed copies agree.

    Trims, collapses internal whitespace runs to single spaces, lowercases,
    and applies NFC normalization. Idempotent.

    Raises EmptyKeyword if nothing remains, KeywordTooLong past 256 UTF-8
    bytes.
    """
    text = unicodedata.normalize("NFC", raw).lower()
    text = " ".join(text.split())
    text = unicodedata.normalize("NFC", text)
    if not text:
        raise EmptyKeyword("keyword is empty after canonicalization")
    if len(text.encode("utf-8")) > MAX_KEYWORD_BYTES:
        raise KeywordTooLong(
            f"canonical keyword exceeds {MAX_KEYWORD_BYTES} UTF-8 bytes"
        )
    return CanonicalKeyword(text)


def _epoch_tag(epoch_id: int) -> bytes:
    return struct.pack("<Q", epoch_id)


def compute_head(kw: CanonicalKeyword, ek: EpochKey) -> Head:
    """The searchable one-way image of a keyword under an epoch key.

    Deterministic; binding the epoch counter into the message stops a
    dictionary precomputed for one epoch from carrying over to another
    even if an epoch key were ever reused.
    """
    msg = _HEAD_CONTEXT + _epoch_tag(ek.epoch_id) + kw.encode()
    return hmac.new(ek.key, msg, hashlib.sha256).digest()


def _hkdf_sha256(ikm: bytes, salt: bytes, info: bytes) -> bytes:
    prk = hmac.new(salt, ikm, hashlib.sha256).digest()
    return hmac.new(prk, info + b"\x01", hashlib.sha256).digest()


def derive_payload_key(
    kw: CanonicalKeyword, ek: EpochKey, *, epoch_salt: bool = True
) -> PayloadKey:
    """Derive the payload sealing key from the keyword.

    The keyword is the only secret input; the public epoch key is mixed in
    as HKDF salt so ciphertexts rotate with epochs. Pass epoch_salt=False
    for the keyword-only derivation (compatibility switch; the salt then
    defaults to zeros per the extract step's definition).
    """
    salt = ek.key if epoch_salt else b"\x00" * KEY_LEN
    info = _PAYLOAD_CONTEXT + _epoch_tag(ek.epoch_id)
    return _hkdf_sha256(kw.encode(), salt, info)


def seal_payload(pk: PayloadKey, nonce: bytes, plaintext: bytes) -> SealedPayload:
    """Authenticated-encrypt a payload. Ciphertext length equals plaintext
    length; the 16-byte tag is carried separately.

    Nonce freshness per key is the caller's responsibility.
    """
    if len(plaintext) > MAX_PLAINTEXT_BYTES:
        raise PlaintextTooLong(
            f"plaintext exceeds {MAX_PLAINTEXT_BYTES} bytes"
        )
    if len(pk) != KEY_LEN:
        raise ValueError(f"payload key must be {KEY_LEN} bytes")
    if len(nonce) != NONCE_LEN:
        raise ValueError(f"nonce must be {NONCE_LEN} bytes")
    ct_and_tag = ChaCha20Poly1305(pk).encrypt(nonce, plaintext, None)
    return SealedPayload(
        nonce=nonce, ciphertext=ct_and_tag[:-TAG_LEN], tag=ct_and_tag[-TAG_LEN:]
    )


def open_payload(pk: PayloadKey, sp: SealedPayload) -> bytes:
    """Decrypt a sealed payload, or raise AuthenticationFailure.

    Fails atomically: no partial plaintext is ever returned.
    """
    if len(pk) != KEY_LEN:
        raise ValueError(f"payload key must be {KEY_LEN} bytes")
    try:
        return ChaCha20Poly1305(pk).decrypt(
            sp.nonce, sp.ciphertext + sp.tag, None
        )
    except InvalidTag as exc:
        raise AuthenticationFailure("payload tag did not verify") from exc
