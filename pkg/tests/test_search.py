import json
from dataclasses import replace
from itertools import islice

import pytest

from sondow.arith import factorize
from sondow.config import DEFAULT_CONFIG, OracleBounds
from sondow.errors import SearchRangeError, SondowError
from sondow.predicates import is_mu_sondow
from sondow.search import (
    CONJECTURE1_EXCEPTIONS,
    ConjectureReport,
    SearchRecord,
    checkpoint_load,
    conjecture1_check,
    conjecture1_table,
    conjecture2_search,
    engine,
    first_member,
    residue_runs,
    residue_table,
    search_range,
    segment_hits,
    write_jsonl,
)

# Small segments so every test crosses segment boundaries.
SMALL = replace(
    DEFAULT_CONFIG,
    segment_size=4096,
    search_oracle_bounds=OracleBounds(power_sum_max_n=200, bernoulli_max_k=40),
)

GIUGA_288 = [30, 282, 282, 246, 210, 210, 174, 174, 174, 138, 138, 138]


def found(mu, lo, hi, composite_only=False, config=SMALL, **kwargs):
    return [r.n for r in search_range(mu, lo, hi, composite_only, config=config, **kwargs)]


# ==================== Range search ====================

def test_weak_ppp_below_1e5():
    assert found(1, 2, 10 ** 5) == [2, 6, 42, 1806, 47058]


def test_giuga_below_1e5():
    assert found(-1, 2, 10 ** 5, composite_only=True) == [30, 858, 1722, 66198]


def test_minus_five_members():
    members = found(-5, 2, 10 ** 6, config=DEFAULT_CONFIG)
    assert 25 in members and 150 in members
    assert [n for n in members if n % 5 == 0] == [25, 150]


def test_eight_sondow_members():
    assert found(8, 2, 8 * 10 ** 5, config=replace(SMALL, segment_size=1 << 18)) == [3, 16, 48, 336, 14448, 376464]


def test_zero_class_is_empty():
    assert found(0, 2, 10 ** 5) == []


@pytest.mark.parametrize("mu", [-5, -1, 1, 8])
def test_search_matches_brute_force(mu):
    expected = [n for n in range(2, 10 ** 4 + 1) if is_mu_sondow(factorize(n), mu).member]
    assert found(mu, 2, 10 ** 4) == expected


def test_records_are_verified_and_classified():
    records = list(search_range(-1, 2, 3000, composite_only=False, config=SMALL))
    assert [r.n for r in records] == sorted({r.n for r in records})
    for record in records:
        assert record.flags.divisibility
        assert all(record.flags.present().values())
        assert record.composite == record.factorization.is_composite()
    assert [r.n for r in records if r.composite] == [30, 858, 1722]


def test_segment_hits():
    segment, offsets = segment_hits(2, 100, 1)
    assert [2 + int(i) for i in offsets] == [2, 6, 42]
    _, offsets = segment_hits(2, 100, -1, composite_only=True)
    assert [2 + int(i) for i in offsets] == [30]


@pytest.mark.parametrize("lo,hi", [(1, 10), (10, 5), (2, 2 ** 60)])
def test_search_range_errors(lo, hi):
    with pytest.raises(SearchRangeError):
        list(search_range(1, lo, hi))


def test_record_json_form():
    record = next(search_range(1, 1800, 1810, config=SMALL))
    data = json.loads(record.to_json())
    assert set(data) == {"n", "mu", "factors", "flags", "composite"}
    assert data["n"] == "1806"
    assert data["factors"] == [["2", "1"], ["3", "1"], ["7", "1"], ["43", "1"]]
    assert SearchRecord.from_json(record.to_json()) == record


def test_write_jsonl(tmp_path):
    path = tmp_path / "hits.jsonl"
    count = write_jsonl(search_range(1, 2, 2000, config=SMALL), path)
    lines = path.read_text().splitlines()
    assert count == len(lines) == 4
    assert [json.loads(line)["n"] for line in lines] == ["2", "6", "42", "1806"]


# ==================== Determinism ====================

def test_worker_count_does_not_change_output():
    single = [r.to_json() for r in search_range(1, 2, 60000, jobs=1, config=SMALL)]
    pooled = [r.to_json() for r in search_range(1, 2, 60000, jobs=3, config=SMALL)]
    assert single == pooled


def test_checkpoint_interruption_does_not_change_output(tmp_path):
    config = replace(SMALL, segment_size=500)
    straight = [r.to_json() for r in search_range(-1, 2, 5000, config=config)]

    checkpoint = tmp_path / "search.ckpt"
    interrupted = search_range(-1, 2, 5000, checkpoint=checkpoint, config=config)
    head = list(islice(interrupted, 200))
    interrupted.close()
    assert len(head) == 200
    assert checkpoint.exists()

    resumed = [r.to_json() for r in search_range(-1, 2, 5000, checkpoint=checkpoint, config=config)]
    assert resumed == straight


@pytest.mark.slow
def test_determinism_to_1e7(tmp_path):
    config = replace(DEFAULT_CONFIG, segment_size=1 << 20)
    single = [r.to_json() for r in search_range(1, 2, 10 ** 7, jobs=1, config=config)]
    pooled = [r.to_json() for r in search_range(1, 2, 10 ** 7, jobs=8, config=config)]
    checkpoint = tmp_path / "run.ckpt"
    interrupted = search_range(1, 2, 10 ** 7, checkpoint=checkpoint, config=config)
    list(islice(interrupted, 3))
    interrupted.close()
    resumed = [r.to_json() for r in search_range(1, 2, 10 ** 7, checkpoint=checkpoint, config=config)]
    assert single == pooled == resumed


@pytest.mark.parametrize("interval,saves", [(3600.0, 2), (0.0, 10)])
def test_checkpoint_saves_are_throttled(tmp_path, monkeypatch, interval, saves):
    calls = []
    real_save = engine.checkpoint_save

    def counting_save(state, path):
        calls.append(state.next_segment_lo)
        real_save(state, path)

    monkeypatch.setattr(engine, "checkpoint_save", counting_save)
    config = replace(SMALL, segment_size=500, checkpoint_interval=interval)
    records = list(search_range(-1, 2, 5000, checkpoint=tmp_path / "run.ckpt", config=config))
    assert len(calls) == saves
    assert calls[0] == 502
    assert calls[-1] == 5001
    assert checkpoint_load(tmp_path / "run.ckpt").records == records


def test_search_range_validates_before_iteration():
    with pytest.raises(SearchRangeError):
        search_range(1, 1, 10)


# ==================== Conjectures ====================

@pytest.mark.parametrize("mu,witness", [(3, 2), (-4, 3), (16, None), (-2, None), (4, None), (2, None), (-3, 2)])
def test_conjecture1_check(mu, witness):
    report = conjecture1_check(mu, SMALL)
    assert report.witness == witness
    assert report.exhausted == (witness is None)
    assert report.interval == (1, abs(mu))


def test_conjecture1_needs_nontrivial_mu():
    with pytest.raises(SearchRangeError):
        conjecture1_check(1)


def test_conjecture1_small_table():
    reports = conjecture1_table(range(-100, 101), SMALL)
    assert len(reports) == 198
    assert {r.mu for r in reports if r.exhausted} == {2, -2, 4, 16}


@pytest.mark.slow
def test_conjecture1_desk_run():
    reports = conjecture1_table(range(-1000, 1001), SMALL)
    assert {r.mu for r in reports if r.exhausted} <= CONJECTURE1_EXCEPTIONS


@pytest.mark.parametrize("mu,bound,witness", [(2, 1000, 3), (-2, 1000, 4), (4, 1000, 5), (16, 1000, 17), (0, 10, 1)])
def test_conjecture2_search(mu, bound, witness):
    report = conjecture2_search(mu, bound, SMALL)
    assert report.witness == witness
    assert not report.exhausted
    assert report.interval == (abs(mu), bound)


def test_conjecture2_needs_bound_above_mu():
    with pytest.raises(SearchRangeError):
        conjecture2_search(10, 10)


def test_conjecture2_exhausted_for_minus_145():
    report = conjecture2_search(-145, 10 ** 5, SMALL)
    assert report.exhausted
    assert report.witness is None


@pytest.mark.slow
@pytest.mark.parametrize("mu", [-145, 673])
def test_conjecture2_exhausted_to_desk_bound(mu):
    report = conjecture2_search(mu, 10 ** 8)
    assert report.exhausted
    assert report.interval == (abs(mu), 10 ** 8)


@pytest.mark.slow
def test_conjecture2_small_mu_desk_run():
    reports = [conjecture2_search(mu, 10 ** 8) for mu in range(-50, 51) if abs(mu) >= 2]
    assert len(reports) == 98
    for report in reports:
        if report.witness is not None:
            assert report.witness > abs(report.mu)
            assert is_mu_sondow(factorize(report.witness), report.mu).member
        else:
            assert report.interval == (abs(report.mu), 10 ** 8)


def test_first_member():
    assert first_member(1, 7, 100, SMALL) == 42
    assert first_member(1, 43, 1000, SMALL) is None


def test_conjecture_report_invariant():
    with pytest.raises(ValueError):
        ConjectureReport(mu=3, interval=(1, 3), witness=2, exhausted=True, wall_time=0.0)
    with pytest.raises(ValueError):
        ConjectureReport(mu=3, interval=(1, 3), witness=None, exhausted=False, wall_time=0.0)


# ==================== Residues ====================

def test_giuga_residues(catalog):
    assert residue_table(catalog.known_values("giuga")[:12]) == GIUGA_288


def test_primary_ppp_residues(catalog):
    assert residue_table(catalog.known_values("primary_ppp")[1:]) == [6, 42, 78, 114, 150, 186, 222]


def test_residue_table_edge_cases():
    assert residue_table([5, 17, 10 ** 40], 1) == [0, 0, 0]
    with pytest.raises(SondowError):
        residue_table([5], 0)


def test_residue_runs():
    assert residue_runs(GIUGA_288) == [(30, 1), (282, 2), (246, 1), (210, 2), (174, 3), (138, 3)]
    assert residue_runs([]) == []
