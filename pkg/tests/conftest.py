import json
import pathlib
import sys
from datetime import datetime, timezone
from random import Random

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

from peacock import EpochKey

VECTORS_PATH = pathlib.Path(__file__).resolve().parent.parent / "vectors" / "core.json"

FIXED_TIME = datetime(2026, 1, 1, tzinfo=timezone.utc)


def make_epoch_key(epoch_id: int = 0, key: bytes = None, seed: int = 0) -> EpochKey:
    if key is None:
        key = Random(seed).randbytes(32)
    return EpochKey(epoch_id=epoch_id, key=key, issued_at=FIXED_TIME)


@pytest.fixture(scope="session")
def vectors():
    return {v["name"]: v for v in json.loads(VECTORS_PATH.read_text())}


@pytest.fixture
def zero_epoch_key():
    return make_epoch_key(epoch_id=1, key=b"\x00" * 32)
