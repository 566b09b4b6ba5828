"""Generate vectors/core.json from the independent reference implementations.

Run from the repository root:  python scripts/make_vectors.py

Self-checks against published RFC test vectors run first; the file is only
written if they pass.
"""

import json
import pathlib
import struct
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "tests"))

import reference as ref  # noqa: E402


def self_check() -> None:
    # RFC 4231 test case 2 (HMAC-SHA256)
    mac = ref.hmac_sha256(b"Jefe", b"what do ya want for nothing?")
    assert mac.hex() == (
        "5bdcc146bf60754e6a042426089575c75a003f089d2739839dec58b964ec3843"
    ), "HMAC self-check failed"

    # RFC 5869 test case 1 (HKDF-SHA256)
    okm = ref.hkdf_sha256(
        ikm=bytes.fromhex("0b" * 22),
        salt=bytes.fromhex("000102030405060708090a0b0c"),
        info=bytes.fromhex("f0f1f2f3f4f5f6f7f8f9"),
        length=42,
    )
    assert okm.hex() == (
        "3cb25f25faacd57a90434f64d0362f2a2d2d0a90cf1a5a4c5db02d56ecc4c5bf"
        "34007208d5b887185865"
    ), "HKDF self-check failed"

    # RFC 8439 section 2.8.2 (ChaCha20-Poly1305 AEAD)
    key = bytes(range(0x80, 0xA0))
    nonce = bytes.fromhex("070000004041424344454647")
    aad = bytes.fromhex("50515253c0c1c2c3c4c5c6c7")
    plaintext = (
        b"Ladies and Gentlemen of the class of '99: If I could offer you "
        b"only one tip for the future, sunscreen would be it."
    )
    ct, tag = ref.chacha20poly1305_encrypt(key, nonce, plaintext, aad)
    assert ct.hex().startswith("d31a8d34648e60db7b86afbc53ef7ec2"), (
        "ChaCha20 self-check failed"
    )
    assert tag.hex() == "1ae10b594f09e26a7e902ecbd0600691", (
        "Poly1305 self-check failed"
    )
    assert ref.chacha20poly1305_decrypt(key, nonce, ct, tag, aad) == plaintext


def main() -> None:
    self_check()

    zero_key = b"\x00" * 32
    zero_nonce = b"\x00" * 12
    epoch_id = 1
    keyword = "peacock"
    address = "eve@example"

    head = ref.hmac_sha256(
        zero_key,
        b"PEACOCK-HEAD-v1" + struct.pack("<Q", epoch_id) + keyword.encode(),
    )
    payload_key = ref.hkdf_sha256(
        ikm=keyword.encode(),
        salt=zero_key,
        info=b"PEACOCK-PAYLOAD-v1" + struct.pack("<Q", epoch_id),
        length=32,
    )
    seal_ct, seal_tag = ref.chacha20poly1305_encrypt(
        zero_key, zero_nonce, address.encode()
    )
    feather_ct, feather_tag = ref.chacha20poly1305_encrypt(
        payload_key, zero_nonce, address.encode()
    )
    feather_line = json.dumps(
        {
            "v": 1,
            "epoch_id": epoch_id,
            "head": head.hex(),
            "nonce": zero_nonce.hex(),
            "ct": feather_ct.hex(),
            "tag": feather_tag.hex(),
        },
        separators=(",", ":"),
    )

    vectors = [
        {
            "name": "head-zero-key-epoch1",
            "op": "compute_head",
            "keyword": keyword,
            "epoch_key": zero_key.hex(),
            "epoch_id": epoch_id,
            "head": head.hex(),
        },
        {
            "name": "payload-key-zero-key-epoch1",
            "op": "derive_payload_key",
            "keyword": keyword,
            "epoch_key": zero_key.hex(),
            "epoch_id": epoch_id,
            "payload_key": payload_key.hex(),
        },
        {
            "name": "seal-zero-key-zero-nonce",
            "op": "seal_payload",
            "payload_key": zero_key.hex(),
            "nonce": zero_nonce.hex(),
            "plaintext": address.encode().hex(),
            "ciphertext": seal_ct.hex(),
            "tag": seal_tag.hex(),
        },
        {
            "name": "feather-peacock-epoch1",
            "op": "mint_feather",
            "keyword": keyword,
            "address": address,
            "epoch_key": zero_key.hex(),
            "epoch_id": epoch_id,
            "nonce": zero_nonce.hex(),
            "encoded": feather_line,
        },
    ]

    out = pathlib.Path(__file__).resolve().parent.parent / "vectors" / "core.json"
    out.parent.mkdir(exist_ok=True)
    out.write_text(json.dumps(vectors, indent=2) + "\n")
    print(f"wrote {len(vectors)} vectors to {out}")


if __name__ == "__main__":
    main()
