import io
import json

import pytest

from peacock.cli import run_cli


def cli(*args, stdin_text=""):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(args), stdin=io.StringIO(stdin_text), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def board(tmp_path):
    path = tmp_path / "board.jsonl"
    code, _, _ = cli("ttp", "announce", "--board", str(path))
    assert code == 0
    return path


def _mint_and_post(tmp_path, board, keyword="peacock", address="eve@example"):
    feather = tmp_path / "feather.jsonl"
    snapshot = tmp_path / "snapshot.jsonl"
    code, _, _ = cli(
        "feather", "mint",
        "--keyword", keyword,
        "--address", address,
        "--board", str(board),
        "--out", str(feather),
    )
    assert code == 0
    code, _, _ = cli(
        "registry", "post", "--snapshot", str(snapshot), "--feather", str(feather)
    )
    assert code == 0
    return feather, snapshot


class TestTtp:
    def test_announce_creates_board(self, tmp_path):
        path = tmp_path / "board.jsonl"
        code, out, _ = cli("ttp", "announce", "--board", str(path))
        assert code == 0
        assert "epoch 0" in out
        code, out, _ = cli("ttp", "announce", "--board", str(path))
        assert "epoch 1" in out

    def test_list(self, board):
        code, out, _ = cli("ttp", "list", "--board", str(board))
        assert code == 0
        assert out.startswith("epoch 0")

    def test_list_missing_board_is_io_error(self, tmp_path):
        code, _, err = cli("ttp", "list", "--board", str(tmp_path / "nope"))
        assert code == 3


class TestRoundTrip:
    def test_mint_post_search(self, tmp_path, board):
        _, snapshot = _mint_and_post(tmp_path, board)
        code, out, _ = cli(
            "search",
            "--keyword", "peacock",
            "--board", str(board),
            "--snapshot", str(snapshot),
        )
        assert code == 0
        assert "address: eve@example" in out

    def test_search_wrong_keyword_finds_nothing(self, tmp_path, board):
        _, snapshot = _mint_and_post(tmp_path, board)
        code, out, _ = cli(
            "search",
            "--keyword", "heron",
            "--board", str(board),
            "--snapshot", str(snapshot),
        )
        assert code == 0
        assert out == ""

    def test_feather_open(self, tmp_path, board):
        feather, _ = _mint_and_post(tmp_path, board)
        code, out, _ = cli(
            "feather", "open",
            "--feather", str(feather),
            "--keyword", "peacock",
            "--board", str(board),
        )
        assert code == 0
        assert out.strip() == "eve@example"

    def test_feather_open_wrong_keyword(self, tmp_path, board):
        feather, _ = _mint_and_post(tmp_path, board)
        code, out, err = cli(
            "feather", "open",
            "--feather", str(feather),
            "--keyword", "heron",
            "--board", str(board),
        )
        assert code == 1
        assert "authentication failure" in err
        assert "heron" not in err + out

    def test_keyword_from_stdin(self, tmp_path, board):
        feather, _ = _mint_and_post(tmp_path, board)
        code, out, _ = cli(
            "feather", "open",
            "--feather", str(feather),
            "--keyword", "-",
            "--board", str(board),
            stdin_text="peacock\n",
        )
        assert code == 0
        assert out.strip() == "eve@example"

    def test_no_keyword_in_outputs(self, tmp_path, board):
        feather, snapshot = _mint_and_post(tmp_path, board, keyword="secretword")
        for path in (feather, snapshot, board):
            assert "secretword" not in path.read_text()


class TestErrors:
    def test_unknown_subcommand(self):
        code, _, err = cli("frobnicate")
        assert code == 2
        assert err

    def test_no_args(self):
        code, _, _ = cli()
        assert code == 2

    def test_missing_snapshot_is_io_error(self, tmp_path, board):
        code, _, _ = cli(
            "search",
            "--keyword", "peacock",
            "--board", str(board),
            "--snapshot", str(tmp_path / "missing"),
        )
        assert code == 3

    def test_malformed_feather_file_is_parse_error(self, tmp_path, board):
        bad = tmp_path / "bad.jsonl"
        bad.write_text('{"v":1}\n')
        code, _, err = cli(
            "registry",
            "post",
            "--snapshot", str(tmp_path / "snap"),
            "--feather", str(bad),
        )
        assert code == 2

    def test_unknown_epoch_is_protocol_error(self, tmp_path, board):
        code, _, _ = cli(
            "feather", "mint",
            "--keyword", "peacock",
            "--address", "a@b",
            "--board", str(board),
            "--epoch", "7",
            "--out", str(tmp_path / "f"),
        )
        assert code == 1


class TestAttack:
    def test_attack_maps_posted_feather(self, tmp_path, board):
        _, snapshot = _mint_and_post(tmp_path, board)
        dict_file = tmp_path / "dict.txt"
        dict_file.write_text("heron\npeacock\nswan\n")
        report_file = tmp_path / "report.json"
        code, out, _ = cli(
            "attack",
            "--dict", str(dict_file),
            "--board", str(board),
            "--snapshot", str(snapshot),
            "--budget", "3",
            "--report", str(report_file),
        )
        assert code == 0
        report = json.loads(report_file.read_text())
        assert report["coverage"] == 1.0
        assert report["mapped"][0]["keyword"] == "peacock"
        assert report["mapped"][0]["addresses"] == ["eve@example"]


class TestSimulate:
    def test_rendezvous(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(
            json.dumps(
                {
                    "keyword": "peacock",
                    "address": "eve@example",
                    "decoy_feathers": 5,
                    "seed": 42,
                }
            )
        )
        code, out, _ = cli("simulate", "rendezvous", "--config", str(cfg))
        assert code == 0
        report = json.loads(out)
        assert report["success"] is True
        assert report["recovered_address"] == "eve@example"

    def test_rotation(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(
            json.dumps(
                {
                    "dictionary_size": 100,
                    "feather_count": 20,
                    "total_attack_budget": 100,
                    "epochs": 1,
                    "seed": 1,
                }
            )
        )
        code, out, _ = cli("simulate", "rotation", "--config", str(cfg))
        assert code == 0
        assert json.loads(out)["per_epoch_coverage"] == [1.0]

    def test_sweep_with_csv(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(
            json.dumps(
                {
                    "dictionary_size": 100,
                    "feather_count": 20,
                    "total_attack_budget": 40,
                    "epochs": [1, 2],
                    "seed": 1,
                }
            )
        )
        csv = tmp_path / "out.csv"
        code, out, _ = cli(
            "simulate", "sweep", "--config", str(cfg), "--csv", str(csv)
        )
        assert code == 0
        assert len(json.loads(out)) == 2
        lines = csv.read_text().splitlines()
        assert lines[0] == "epoch,coverage"
        assert len(lines) == 3
