"""Command-line front end covering every protocol role.

Exit codes: 0 success, 1 protocol/authentication failure, 2 usage or
parse error, 3 missing/unreadable file. Keywords are accepted as
`--keyword -` to read from stdin and keep them out of shell history; no
subcommand ever echoes a keyword back to stdout, stderr, or an output
file.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO, Optional

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
    UnknownEpoch,
)
from .feather import (
    PointingAddress,
    decode_feather,
    encode_feather,
    mint_feather,
    open_feather,
)
from .harness import (
    run_rendezvous,
    run_rotation_experiment,
    scenario_config_from_dict,
    sweep_configs_from_dict,
    sweep_rotation,
    write_sweep_csv,
)
from .middleman import Middleman, write_attack_report
from .registry import FeatherStore
from .ttp import AnnouncementBoard

EXIT_OK = 0
EXIT_PROTOCOL = 1
EXIT_USAGE = 2
EXIT_IO = 3


class _ArgumentParser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so run_cli owns the codes."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="peacock")
    sub = parser.add_subparsers(dest="command", required=True)

    ttp = sub.add_parser("ttp", help="trusted third party operations")
    ttp_sub = ttp.add_subparsers(dest="ttp_command", required=True)
    announce = ttp_sub.add_parser("announce", help="announce a fresh epoch key")
    announce.add_argument("--board", required=True)
    ttp_list = ttp_sub.add_parser("list", help="list announced epochs")
    ttp_list.add_argument("--board", required=True)

    feather = sub.add_parser("feather", help="mint or open feathers")
    feather_sub = feather.add_subparsers(dest="feather_command", required=True)
    mint = feather_sub.add_parser("mint", help="mint a feather")
    mint.add_argument("--keyword", required=True)
    mint.add_argument("--address", required=True)
    mint.add_argument("--board", required=True)
    mint.add_argument("--epoch", type=int, default=None)
    mint.add_argument("--out", required=True)
    fopen = feather_sub.add_parser("open", help="open a feather")
    fopen.add_argument("--feather", required=True)
    fopen.add_argument("--keyword", required=True)
    fopen.add_argument("--board", required=True)

    registry = sub.add_parser("registry", help="search-site operations")
    registry_sub = registry.add_subparsers(dest="registry_command", required=True)
    post = registry_sub.add_parser("post", help="post feathers to a snapshot")
    post.add_argument("--snapshot", required=True)
    post.add_argument("--feather", required=True)

    search = sub.add_parser("search", help="search a snapshot by keyword")
    search.add_argument("--keyword", required=True)
    search.add_argument("--board", required=True)
    search.add_argument("--snapshot", required=True)
    search.add_argument("--epoch", type=int, default=None)

    attack = sub.add_parser("attack", help="run the dictionary mapping attack")
    attack.add_argument("--dict", dest="dict_file", required=True)
    attack.add_argument("--board", required=True)
    attack.add_argument("--snapshot", required=True)
    attack.add_argument("--budget", type=int, required=True)
    attack.add_argument("--report", required=True)

    simulate = sub.add_parser("simulate", help="run a seeded experiment")
    simulate.add_argument(
        "scenario", choices=["rendezvous", "rotation", "sweep"]
    )
    simulate.add_argument("--config", required=True)
    simulate.add_argument("--csv", default=None)

    return parser


def _read_keyword(value: str, stdin: IO[str]) -> str:
    if value == "-":
        return stdin.readline().rstrip("\n")
    return value


def _load_board(path: str) -> AnnouncementBoard:
    with open(path, encoding="utf-8") as fp:
        return AnnouncementBoard.read_board(fp)


def _load_store(path: str) -> FeatherStore:
    with open(path, encoding="utf-8") as fp:
        return FeatherStore.read_snapshot(fp)


def _pick_epoch(board: AnnouncementBoard, epoch: Optional[int]):
    return board.current_epoch() if epoch is None else board.get_epoch(epoch)


def _cmd_ttp(args, stdout: IO[str]) -> int:
    if args.ttp_command == "announce":
        try:
            board = _load_board(args.board)
        except FileNotFoundError:
            board = AnnouncementBoard()
        ek = board.announce_epoch()
        with open(args.board, "w", encoding="utf-8") as fp:
            board.write_board(fp)
        stdout.write(f"announced epoch {ek.epoch_id}\n")
    else:
        board = _load_board(args.board)
        for ek in board.epochs():
            stdout.write(
                f"epoch {ek.epoch_id}  key {ek.key.hex()}  "
                f"issued {ek.issued_at:%Y-%m-%dT%H:%M:%SZ}\n"
            )
    return EXIT_OK


def _cmd_feather(args, stdin: IO[str], stdout: IO[str]) -> int:
    if args.feather_command == "mint":
        keyword = _read_keyword(args.keyword, stdin)
        board = _load_board(args.board)
        ek = _pick_epoch(board, args.epoch)
        f = mint_feather(keyword, PointingAddress(args.address), ek)
        with open(args.out, "w", encoding="utf-8") as fp:
            fp.write(encode_feather(f) + "\n")
        stdout.write(f"minted feather for epoch {ek.epoch_id}\n")
    else:
        keyword = _read_keyword(args.keyword, stdin)
        with open(args.feather, encoding="utf-8") as fp:
            f = decode_feather(fp.readline().strip())
        board = _load_board(args.board)
        ek = board.get_epoch(f.epoch_id)
        address = open_feather(f, keyword, ek)
        stdout.write(address.text + "\n")
    return EXIT_OK


def _cmd_registry_post(args, stdout: IO[str]) -> int:
    try:
        store = _load_store(args.snapshot)
    except FileNotFoundError:
        store = FeatherStore()
    posted = 0
    with open(args.feather, encoding="utf-8") as fp:
        for line in fp:
            line = line.strip()
            if line:
                store.post_feather(decode_feather(line))
                posted += 1
    with open(args.snapshot, "w", encoding="utf-8") as fp:
        store.write_snapshot(fp)
    stdout.write(f"posted {posted} feather(s)\n")
    return EXIT_OK


def _cmd_search(args, stdin: IO[str], stdout: IO[str]) -> int:
    from .core import canonicalize_keyword, compute_head

    keyword = _read_keyword(args.keyword, stdin)
    board = _load_board(args.board)
    ek = _pick_epoch(board, args.epoch)
    store = _load_store(args.snapshot)
    middleman = Middleman(store)
    head = compute_head(canonicalize_keyword(keyword), ek)
    for f in middleman.search(ek.epoch_id, head):
        stdout.write(encode_feather(f) + "\n")
        try:
            stdout.write(f"address: {open_feather(f, keyword, ek).text}\n")
        except AuthenticationFailure:
            stdout.write("address: <not openable with this keyword>\n")
    return EXIT_OK


def _cmd_attack(args, stdout: IO[str]) -> int:
    with open(args.dict_file, encoding="utf-8") as fp:
        dictionary = [line.strip() for line in fp if line.strip()]
    board = _load_board(args.board)
    ek = board.current_epoch()
    store = _load_store(args.snapshot)
    report = Middleman(store).run_mapping_attack(dictionary, ek, args.budget)
    with open(args.report, "w", encoding="utf-8") as fp:
        write_attack_report(report, fp)
    stdout.write(
        f"mapped {len(report.mapped)} head(s), coverage {report.coverage:.4f}\n"
    )
    return EXIT_OK


def _cmd_simulate(args, stdout: IO[str]) -> int:
    with open(args.config, encoding="utf-8") as fp:
        cfg_obj = json.load(fp)
    if args.scenario == "rendezvous":
        report = run_rendezvous(scenario_config_from_dict(cfg_obj))
        json.dump(report.to_dict(), stdout, indent=2)
        stdout.write("\n")
        return EXIT_OK if report.success else EXIT_PROTOCOL
    if args.scenario == "rotation":
        from .harness import rotation_config_from_dict

        rotation = run_rotation_experiment(rotation_config_from_dict(cfg_obj))
        json.dump(rotation.to_dict(), stdout, indent=2)
        stdout.write("\n")
        return EXIT_OK
    results = sweep_rotation(sweep_configs_from_dict(cfg_obj))
    json.dump(
        [{"epochs": e, "mean_coverage": c} for e, c in results],
        stdout,
        indent=2,
    )
    stdout.write("\n")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fp:
            write_sweep_csv(results, fp)
    return EXIT_OK


def run_cli(
    argv: list[str],
    stdin: Optional[IO[str]] = None,
    stdout: Optional[IO[str]] = None,
    stderr: Optional[IO[str]] = None,
) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "ttp":
            return _cmd_ttp(args, stdout)
        if args.command == "feather":
            return _cmd_feather(args, stdin, stdout)
        if args.command == "registry":
            return _cmd_registry_post(args, stdout)
        if args.command == "search":
            return _cmd_search(args, stdin, stdout)
        if args.command == "attack":
            return _cmd_attack(args, stdout)
        return _cmd_simulate(args, stdout)
    except _UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (AuthenticationFailure, EpochMismatch) as exc:
        kind = (
            "authentication failure"
            if isinstance(exc, AuthenticationFailure)
            else "epoch mismatch"
        )
        stderr.write(f"{kind}\n")
        return EXIT_PROTOCOL
    except (UnknownEpoch, NoEpochAnnounced) as exc:
        stderr.write(f"protocol failure: {exc}\n")
        return EXIT_PROTOCOL
    except (
        AddressTooLong,
        EmptyKeyword,
        KeywordTooLong,
        MalformedFeather,
        ConfigMismatch,
        json.JSONDecodeError,
        KeyError,
        ValueError,
    ) as exc:
        stderr.write(f"parse error: {exc}\n")
        return EXIT_USAGE
    except PeacockError as exc:
        stderr.write(f"protocol failure: {exc}\n")
        return EXIT_PROTOCOL
    except OSError as exc:
        stderr.write(f"i/o error: {exc}\n")
        return EXIT_IO


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
