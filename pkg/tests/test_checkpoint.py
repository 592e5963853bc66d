import json
from dataclasses import replace
from itertools import islice

import pytest

from sondow.config import DEFAULT_CONFIG
from sondow.errors import CheckpointError
from sondow.search import Checkpoint, checkpoint_load, checkpoint_resume, checkpoint_save, search_range

EVERY_SEGMENT = replace(DEFAULT_CONFIG, segment_size=500, checkpoint_interval=0.0)


@pytest.fixture
def records():
    return list(search_range(1, 2, 100))


def test_save_and_load(tmp_path, records):
    path = tmp_path / "state.json"
    checkpoint_save(Checkpoint(mu=1, next_segment_lo=101, records=records), path)
    state = checkpoint_load(path)
    assert state.mu == 1
    assert state.next_segment_lo == 101
    assert state.records == records
    assert not (tmp_path / "state.json.tmp").exists()


def test_integers_are_decimal_strings(tmp_path, records):
    path = tmp_path / "state.json"
    checkpoint_save(Checkpoint(mu=1, next_segment_lo=101, records=records), path)
    data = json.loads(path.read_text())
    assert set(data) == {"mu", "next_segment_lo", "records"}
    assert data["mu"] == "1"
    assert data["next_segment_lo"] == "101"


def test_resume_rejects_other_mu(tmp_path, records):
    path = tmp_path / "state.json"
    checkpoint_save(Checkpoint(mu=1, next_segment_lo=101, records=records), path)
    with pytest.raises(CheckpointError):
        checkpoint_resume(path, -1, 2, 1000)


def test_resume_rejects_resume_point_outside_range(tmp_path, records):
    path = tmp_path / "state.json"
    checkpoint_save(Checkpoint(mu=1, next_segment_lo=101, records=records), path)
    with pytest.raises(CheckpointError):
        checkpoint_resume(path, 1, 200, 1000)


def test_resume_rejects_unordered_records(tmp_path, records):
    path = tmp_path / "state.json"
    checkpoint_save(Checkpoint(mu=1, next_segment_lo=101, records=list(reversed(records))), path)
    with pytest.raises(CheckpointError):
        checkpoint_resume(path, 1, 2, 1000)


def test_empty_file(tmp_path):
    path = tmp_path / "state.json"
    path.write_text("")
    with pytest.raises(CheckpointError):
        checkpoint_load(path)


@pytest.mark.parametrize("content", [
    "{not json",
    '{"mu": "1", "next_segment_lo": "5"}',
    '{"mu": "1", "next_segment_lo": "x", "records": []}',
    '{"mu": "1", "next_segment_lo": "5", "records": [{"n": "6"}]}',
    "[]",
])
def test_corrupt_file(tmp_path, content):
    path = tmp_path / "state.json"
    path.write_text(content)
    with pytest.raises(CheckpointError):
        checkpoint_load(path)


def test_corrupt_checkpoint_stops_search(tmp_path):
    path = tmp_path / "state.json"
    path.write_text("garbage")
    with pytest.raises(CheckpointError):
        list(search_range(1, 2, 100, checkpoint=path))


def test_finished_checkpoint_replays_records(tmp_path):
    path = tmp_path / "state.json"
    first = [r.n for r in search_range(1, 2, 2000, checkpoint=path)]
    again = [r.n for r in search_range(1, 2, 2000, checkpoint=path)]
    assert first == again == [2, 6, 42, 1806]


def _interrupted_run(path, mu, composite_only, config, keep=100):
    run = search_range(mu, 2, 5000, composite_only, checkpoint=path, config=config)
    head = list(islice(run, keep))
    run.close()
    assert len(head) == keep
    return checkpoint_load(path)


def test_resume_rejects_prime_records_for_composite_only(tmp_path):
    path = tmp_path / "state.json"
    state = _interrupted_run(path, -1, False, EVERY_SEGMENT)
    assert any(not r.composite for r in state.records)
    with pytest.raises(CheckpointError, match="composite-only"):
        list(search_range(-1, 2, 5000, composite_only=True, checkpoint=path, config=EVERY_SEGMENT))


def test_resume_rejects_composite_only_checkpoint_for_full_search(tmp_path):
    path = tmp_path / "state.json"
    _interrupted_run(path, -1, True, EVERY_SEGMENT, keep=2)
    with pytest.raises(CheckpointError, match="prime members"):
        list(search_range(-1, 2, 5000, checkpoint=path, config=EVERY_SEGMENT))


def test_resume_checks_primes_dividing_mu_plus_one(tmp_path):
    path = tmp_path / "state.json"
    composites = [r for r in search_range(11, 2, 3000) if r.composite]
    checkpoint_save(Checkpoint(mu=11, next_segment_lo=3001, records=composites), path)
    with pytest.raises(CheckpointError, match=r"\[2, 3\]"):
        checkpoint_resume(path, 11, 2, 3000)
    assert checkpoint_resume(path, 11, 2, 3000, composite_only=True).records == composites
