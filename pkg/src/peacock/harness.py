"""Deterministic end-to-end scenarios.

Two experiment families:

* run_rendezvous -- the full exchange: the TTP announces a key, one party
  posts a feather among decoys, the other recovers the address through the
  middleman, and the middleman's log is byte-scanned for keyword leakage.

* run_rotation_experiment / sweep_rotation -- how key rotation starves a
  budget-limited mapping attacker. With total hash budget Q split over E
  epochs the attacker gets q = floor(Q/E) fresh candidates per epoch, so
  each feather is mapped with probability q/D against a dictionary of D
  words. Learned words are worthless after rotation without re-spending
  budget to re-hash them.

Everything is driven by a single seeded generator per run, protocol nonces
included, so identical seeds give byte-identical reports.
"""

from __future__ import annotations

import json
import string
from dataclasses import dataclass
from random import Random
from typing import IO, Optional, Sequence

from .core import canonicalize_keyword, compute_head
from .errors import AuthenticationFailure, ConfigMismatch
from .feather import Feather, PointingAddress, mint_feather, open_feather
from .middleman import Middleman
from .registry import FeatherStore
from .ttp import AnnouncementBoard

MAX_DECOYS = 10**6

_WORD_ALPHABET = string.ascii_lowercase + string.digits


@dataclass(frozen=True)
class ScenarioConfig:
    keyword: str
    address: PointingAddress
    decoy_feathers: int = 100
    seed: int = 42

    def __post_init__(self) -> None:
        canonicalize_keyword(self.keyword)
        if not 0 <= self.decoy_feathers <= MAX_DECOYS:
            raise ValueError(f"decoy_feathers must be in [0, {MAX_DECOYS}]")


@dataclass(frozen=True)
class ScenarioReport:
    success: bool
    recovered_address: Optional[PointingAddress]
    middleman_log_clean: bool
    queries_issued: int

    def to_dict(self) -> dict:
        return {
            "success": self.success,
            "recovered_address": (
                self.recovered_address.text if self.recovered_address else None
            ),
            "middleman_log_clean": self.middleman_log_clean,
            "queries_issued": self.queries_issued,
        }


@dataclass(frozen=True)
class RotationConfig:
    dictionary_size: int
    feather_count: int
    total_attack_budget: int
    epochs: int = 1
    seed: int = 42

    def __post_init__(self) -> None:
        if self.dictionary_size < 1:
            raise ValueError("dictionary_size must be positive")
        if not 1 <= self.feather_count <= self.dictionary_size:
            raise ValueError("feather_count must be in [1, dictionary_size]")
        if self.total_attack_budget < 0:
            raise ValueError("total_attack_budget must be non-negative")
        if self.epochs < 1:
            raise ValueError("epochs must be positive")

    @property
    def budget_per_epoch(self) -> int:
        return self.total_attack_budget // self.epochs


@dataclass(frozen=True)
class RotationReport:
    per_epoch_coverage: tuple[float, ...]
    mean_coverage: float
    q_per_epoch: int

    def to_dict(self) -> dict:
        return {
            "per_epoch_coverage": list(self.per_epoch_coverage),
            "mean_coverage": self.mean_coverage,
            "q_per_epoch": self.q_per_epoch,
        }


def random_word(rng: Random, length: int = 12) -> str:
    """A random lowercase-alphanumeric keyword, long enough that substring
    coincidences in leakage scans are negligible."""
    return "".join(rng.choice(_WORD_ALPHABET) for _ in range(length))


def generate_dictionary(size: int, rng: Random) -> list[str]:
    """`size` distinct synthetic keywords."""
    words: set[str] = set()
    while len(words) < size:
        words.add(random_word(rng))
    out = sorted(words)
    rng.shuffle(out)
    return out


def run_rendezvous(cfg: ScenarioConfig) -> ScenarioReport:
    """Execute one full exchange and report whether the address came back
    and whether the middleman's log stayed keyword-free."""
    rng = Random(cfg.seed)
    board = AnnouncementBoard()
    ek = board.announce_epoch(rng)
    store = FeatherStore()
    middleman = Middleman(store)

    kw = canonicalize_keyword(cfg.keyword)
    feathers = [mint_feather(cfg.keyword, cfg.address, ek, rng)]
    for _ in range(cfg.decoy_feathers):
        decoy_kw = random_word(rng)
        if canonicalize_keyword(decoy_kw).text == kw.text:
            continue
        feathers.append(
            mint_feather(
                decoy_kw,
                PointingAddress(f"{random_word(rng)}@decoy.example"),
                ek,
                rng,
            )
        )
    rng.shuffle(feathers)
    for f in feathers:
        store.post_feather(f)

    results = middleman.search(ek.epoch_id, compute_head(kw, ek))
    recovered: Optional[PointingAddress] = None
    for f in results:
        try:
            recovered = open_feather(f, cfg.keyword, ek)
            break
        except AuthenticationFailure:
            continue

    log_lines = "".join(
        json.dumps(
            {"seq": e.sequence, "epoch_id": e.epoch_id, "head": e.head.hex()},
            separators=(",", ":"),
        )
        for e in middleman.query_log()
    )
    return ScenarioReport(
        success=recovered is not None,
        recovered_address=recovered,
        middleman_log_clean=kw.text not in log_lines,
        queries_issued=len(middleman.query_log()),
    )


def run_rotation_experiment(cfg: RotationConfig) -> RotationReport:
    """Measure per-epoch mapping-attack coverage under key rotation.

    Per epoch: announce a fresh key, re-mint `feather_count` feathers with
    keywords drawn uniformly with replacement from a `dictionary_size`-word
    dictionary, then attack with a fresh random sample of
    `budget_per_epoch` distinct words.
    """
    rng = Random(cfg.seed)
    dictionary = generate_dictionary(cfg.dictionary_size, rng)
    board = AnnouncementBoard()
    q = cfg.budget_per_epoch

    coverages: list[float] = []
    for _ in range(cfg.epochs):
        ek = board.announce_epoch(rng)
        store = FeatherStore()
        for i in range(cfg.feather_count):
            store.post_feather(
                mint_feather(
                    rng.choice(dictionary),
                    PointingAddress(f"party{i}@example"),
                    ek,
                    rng,
                )
            )
        middleman = Middleman(store)
        sample = rng.sample(dictionary, min(q, cfg.dictionary_size))
        report = middleman.run_mapping_attack(sample, ek, q)
        coverages.append(report.coverage)

    return RotationReport(
        per_epoch_coverage=tuple(coverages),
        mean_coverage=sum(coverages) / len(coverages),
        q_per_epoch=q,
    )


def sweep_rotation(
    cfgs: Sequence[RotationConfig],
) -> list[tuple[int, float]]:
    """Run the rotation experiment across epoch counts.

    All configs must share dictionary_size, feather_count,
    total_attack_budget, and seed, varying only `epochs`.
    """
    if not cfgs:
        return []
    base = cfgs[0]
    for cfg in cfgs[1:]:
        if (
            cfg.dictionary_size != base.dictionary_size
            or cfg.feather_count != base.feather_count
            or cfg.total_attack_budget != base.total_attack_budget
            or cfg.seed != base.seed
        ):
            raise ConfigMismatch(
                "sweep configs must share dictionary_size, feather_count, "
                "total_attack_budget, and seed"
            )
    return [
        (cfg.epochs, run_rotation_experiment(cfg).mean_coverage) for cfg in cfgs
    ]


# ---------------------------------------------------------------------------
# Config/report files
# ---------------------------------------------------------------------------

def scenario_config_from_dict(obj: dict) -> ScenarioConfig:
    return ScenarioConfig(
        keyword=obj["keyword"],
        address=PointingAddress(obj["address"]),
        decoy_feathers=obj.get("decoy_feathers", 100),
        seed=obj.get("seed", 42),
    )


def rotation_config_from_dict(obj: dict, epochs: Optional[int] = None) -> RotationConfig:
    return RotationConfig(
        dictionary_size=obj["dictionary_size"],
        feather_count=obj["feather_count"],
        total_attack_budget=obj["total_attack_budget"],
        epochs=epochs if epochs is not None else obj.get("epochs", 1),
        seed=obj.get("seed", 42),
    )


def sweep_configs_from_dict(obj: dict) -> list[RotationConfig]:
    return [rotation_config_from_dict(obj, epochs=e) for e in obj["epochs"]]


def write_sweep_csv(results: Sequence[tuple[int, float]], fp: IO[str]) -> None:
    fp.write("epoch,coverage\n")
    for epochs, coverage in results:
        fp.write(f"{epochs},{coverage}\n")
