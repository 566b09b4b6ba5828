"""The dedicated search site: an append-only store of feathers, nothing else.

Queryable by (epoch_id, head) only. Snapshot file format: a header line
{"v":1,"kind":"registry-snapshot"} followed by one feather per line in
insertion order.
"""

from __future__ import annotations

import json
import threading
from typing import IO, Iterator

from .core import Head
from .errors import MalformedFeather
from .feather import Feather, decode_feather, encode_feather

SNAPSHOT_HEADER = {"v": 1, "kind": "registry-snapshot"}


class FeatherStore:
    """Multimap from (epoch_id, head) to feathers, in insertion order.

    Duplicates accumulate; two parties may independently pick the same
    keyword and the searcher disambiguates by opening. Mutations are
    serialized behind a lock; lookups copy out, so concurrent readers are
    safe.
    """

    def __init__(self) -> None:
        self._entries: dict[tuple[int, Head], list[tuple[int, Feather]]] = {}
        self._counter = 0
        self._lock = threading.Lock()

    def post_feather(self, f: Feather) -> int:
        """Append a feather; returns its insertion id."""
        if not isinstance(f, Feather):
            raise MalformedFeather("only Feather values may be posted")
        with self._lock:
            feather_id = self._counter
            self._counter += 1
            self._entries.setdefault((f.epoch_id, f.head), []).append(
                (feather_id, f)
            )
        return feather_id

    def lookup(self, epoch_id: int, head: Head) -> list[Feather]:
        """All feathers posted under (epoch_id, head), insertion order."""
        with self._lock:
            return [f for _, f in self._entries.get((epoch_id, head), [])]

    def prune_epochs(self, retain_last: int, current_epoch: int) -> int:
        """Drop feathers with epoch_id <= current_epoch - retain_last.

        Returns how many were removed.
        """
        if retain_last < 1:
            raise ValueError("retain_last must be >= 1")
        cutoff = current_epoch - retain_last
        removed = 0
        with self._lock:
            for key in [k for k in self._entries if k[0] <= cutoff]:
                removed += len(self._entries.pop(key))
        return removed

    def count_epoch(self, epoch_id: int) -> int:
        """Number of feathers currently stored under an epoch."""
        with self._lock:
            return sum(
                len(v) for (e, _), v in self._entries.items() if e == epoch_id
            )

    def __len__(self) -> int:
        with self._lock:
            return sum(len(v) for v in self._entries.values())

    def __iter__(self) -> Iterator[Feather]:
        """Feathers in global insertion order."""
        with self._lock:
            flat = [pair for v in self._entries.values() for pair in v]
        flat.sort(key=lambda pair: pair[0])
        return iter(f for _, f in flat)

    def write_snapshot(self, fp: IO[str]) -> None:
        fp.write(json.dumps(SNAPSHOT_HEADER, separators=(",", ":")) + "\n")
        for f in self:
            fp.write(encode_feather(f) + "\n")

    @classmethod
    def read_snapshot(cls, fp: IO[str]) -> "FeatherStore":
        header = fp.readline()
        try:
            if json.loads(header) != SNAPSHOT_HEADER:
                raise MalformedFeather("bad registry snapshot header")
        except json.JSONDecodeError:
            raise MalformedFeather("bad registry snapshot header") from None
        store = cls()
        for line in fp:
            line = line.strip()
            if line:
                store.post_feather(decode_feather(line))
        return store
