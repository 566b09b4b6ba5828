"""The searching middleman, and the mapping attack it can mount.

The middleman sees exactly what the protocol hands it: heads, the public
epoch key, and registry contents. Its query log records (sequence,
epoch_id, head) per search and nothing else -- no keywords, no requester
identity. Log export format, one line per entry:

    {"seq":<int>,"epoch_id":<int>,"head":"<64 hex>"}

The mapping attack is the dictionary strategy: hash candidate keywords
under the announced epoch key and look the heads up. Budget counts hash
evaluations, one per distinct candidate, hit or miss.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from typing import IO, Sequence

from .core import (
    CanonicalKeyword,
    EpochKey,
    Head,
    canonicalize_keyword,
    compute_head,
    derive_payload_key,
    open_payload,
)
from .feather import Feather, PointingAddress
from .registry import FeatherStore


@dataclass(frozen=True)
class QueryLogEntry:
    sequence: int
    epoch_id: int
    head: Head


@dataclass(frozen=True)
class MappedFeather:
    """One de-anonymized head: the keyword that produced it and every
    address recovered from the feathers stored under it."""

    keyword: CanonicalKeyword
    head: Head
    addresses: tuple[PointingAddress, ...]


@dataclass(frozen=True)
class AttackReport:
    epoch_id: int
    dictionary_size: int
    queries_used: int
    mapped: tuple[MappedFeather, ...]
    coverage: float

    def to_dict(self) -> dict:
        return {
            "epoch_id": self.epoch_id,
            "dictionary_size": self.dictionary_size,
            "queries_used": self.queries_used,
            "mapped": [
                {
                    "keyword": m.keyword.text,
                    "head": m.head.hex(),
                    "addresses": [a.text for a in m.addresses],
                }
                for m in self.mapped
            ],
            "coverage": self.coverage,
        }


class Middleman:
    """Services head searches against a registry and logs what it saw."""

    def __init__(self, store: FeatherStore) -> None:
        self._store = store
        self._log: list[QueryLogEntry] = []
        self._lock = threading.Lock()

    def search(self, epoch_id: int, head: Head) -> list[Feather]:
        """Look up a head; appends exactly one log entry per call."""
        with self._lock:
            self._log.append(
                QueryLogEntry(
                    sequence=len(self._log), epoch_id=epoch_id, head=head
                )
            )
        return self._store.lookup(epoch_id, head)

    def query_log(self) -> tuple[QueryLogEntry, ...]:
        with self._lock:
            return tuple(self._log)

    def export_query_log(self, fp: IO[str]) -> None:
        for entry in self.query_log():
            fp.write(
                json.dumps(
                    {
                        "seq": entry.sequence,
                        "epoch_id": entry.epoch_id,
                        "head": entry.head.hex(),
                    },
                    separators=(",", ":"),
                )
                + "\n"
            )

    def run_mapping_attack(
        self, dictionary: Sequence[str], ek: EpochKey, budget: int
    ) -> AttackReport:
        """De-anonymize stored feathers by dictionary guessing.

        Processes up to `budget` distinct candidates in dictionary order
        (shuffle beforehand for a random sample). Candidates are read
        straight from the registry, not via search(), so the attack does
        not pollute the middleman's own query log.

        Coverage is the fraction of feathers stored under ek's epoch whose
        head was mapped; 0.0 when the epoch holds no feathers.
        """
        seen: set[str] = set()
        candidates: list[CanonicalKeyword] = []
        for raw in dictionary:
            kw = canonicalize_keyword(raw)
            if kw.text not in seen:
                seen.add(kw.text)
                candidates.append(kw)

        mapped: list[MappedFeather] = []
        mapped_feathers = 0
        queries_used = 0
        for kw in candidates:
            if queries_used >= budget:
                break
            queries_used += 1
            head = compute_head(kw, ek)
            hits = self._store.lookup(ek.epoch_id, head)
            if not hits:
                continue
            pk = derive_payload_key(kw, ek)
            addresses = tuple(
                PointingAddress(open_payload(pk, f.payload).decode("utf-8"))
                for f in hits
            )
            mapped.append(MappedFeather(keyword=kw, head=head, addresses=addresses))
            mapped_feathers += len(hits)

        total = self._store.count_epoch(ek.epoch_id)
        coverage = mapped_feathers / total if total else 0.0
        return AttackReport(
            epoch_id=ek.epoch_id,
            dictionary_size=len(candidates),
            queries_used=queries_used,
            mapped=tuple(mapped),
            coverage=coverage,
        )


def write_attack_report(report: AttackReport, fp: IO[str]) -> None:
    json.dump(report.to_dict(), fp, indent=2)
    fp.write("\n")
