"""Trusted third party: epoch key generation and the public announcement board.

The board is append-only and strictly outbound: readers get keys, nothing
flows back in. Board file format: header {"v":1,"kind":"ttp-board"}, then
one line {"epoch_id":<int>,"key":"<64 hex>","issued_at":"<RFC 3339 UTC>"}
per epoch. Epoch keys are public by protocol design; the file is not a
secret.
"""

from __future__ import annotations

import json
import secrets
import threading
from datetime import datetime, timezone
from random import Random
from typing import IO, Optional

from .core import KEY_LEN, EpochKey
from .errors import NoEpochAnnounced, RandomnessFailure, UnknownEpoch

BOARD_HEADER = {"v": 1, "kind": "ttp-board"}


def _utc_now() -> datetime:
    return datetime.now(timezone.utc).replace(microsecond=0)


class AnnouncementBoard:
    """Append-only list of epoch keys with a dense, strictly increasing
    epoch counter. Only the TTP appends; everyone reads."""

    def __init__(self, start: int = 0) -> None:
        self._start = start
        self._epochs: list[EpochKey] = []
        self._lock = threading.Lock()

    def announce_epoch(
        self,
        rng: Optional[Random] = None,
        now: Optional[datetime] = None,
    ) -> EpochKey:
        """Generate and publish the next epoch key.

        Key bytes come from `rng` when given (seeded simulations) or from
        system randomness.
        """
        key = rng.randbytes(KEY_LEN) if rng is not None else secrets.token_bytes(KEY_LEN)
        if len(key) != KEY_LEN:
            raise RandomnessFailure(
                f"randomness provider returned {len(key)} bytes, need {KEY_LEN}"
            )
        with self._lock:
            epoch_id = self._start + len(self._epochs)
            ek = EpochKey(
                epoch_id=epoch_id,
                key=key,
                issued_at=now if now is not None else _utc_now(),
            )
            self._epochs.append(ek)
        return ek

    def get_epoch(self, epoch_id: int) -> EpochKey:
        with self._lock:
            index = epoch_id - self._start
            if 0 <= index < len(self._epochs):
                return self._epochs[index]
        raise UnknownEpoch(f"no epoch {epoch_id} on the board")

    def current_epoch(self) -> EpochKey:
        with self._lock:
            if not self._epochs:
                raise NoEpochAnnounced("the board is empty")
            return self._epochs[-1]

    def epochs(self) -> tuple[EpochKey, ...]:
        with self._lock:
            return tuple(self._epochs)

    def write_board(self, fp: IO[str]) -> None:
        fp.write(json.dumps(BOARD_HEADER, separators=(",", ":")) + "\n")
        for ek in self.epochs():
            issued = ek.issued_at.astimezone(timezone.utc)
            fp.write(
                json.dumps(
                    {
                        "epoch_id": ek.epoch_id,
                        "key": ek.key.hex(),
                        "issued_at": issued.strftime("%Y-%m-%dT%H:%M:%SZ"),
                    },
                    separators=(",", ":"),
                )
                + "\n"
            )

    @classmethod
    def read_board(cls, fp: IO[str]) -> "AnnouncementBoard":
        header = fp.readline()
        try:
            if json.loads(header) != BOARD_HEADER:
                raise ValueError("bad ttp board header")
        except json.JSONDecodeError:
            raise ValueError("bad ttp board header") from None
        board: Optional[AnnouncementBoard] = None
        for line in fp:
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            ek = EpochKey(
                epoch_id=obj["epoch_id"],
                key=bytes.fromhex(obj["key"]),
                issued_at=datetime.strptime(
                    obj["issued_at"], "%Y-%m-%dT%H:%M:%SZ"
                ).replace(tzinfo=timezone.utc),
            )
            if board is None:
                board = cls(start=ek.epoch_id)
            elif ek.epoch_id != board._start + len(board._epochs):
                raise ValueError(
                    f"non-contiguous epoch_id {ek.epoch_id} in board file"
                )
            board._epochs.append(ek)
        return board if board is not None else cls()
