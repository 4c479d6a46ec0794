import json
from fractions import Fraction

import pytest

from scribal import corpus
from scribal.corpus import (
    CATEGORIES,
    ENGINE_ERROR,
    MATCH,
    NO_RECORDED_ANSWER,
    SCRIBAL_ERROR,
    CorpusFormatError,
    error_summary,
    load_corpus,
    load_starter_corpus,
    render_report,
    replay,
    replay_all,
    starter_corpus_text,
)

F = Fraction


def make_doc(problems):
    return json.dumps({"problems": problems})


HAU = {
    "id": "hau-1",
    "category": "hau",
    "inputs": {"multiplier": ["1", "1/7"], "target": "19"},
    "scribal_answer": "16 + 1/2 + 1/8",
    "source_note": "test fixture",
}


class TestLoading:
    def test_empty_corpus(self):
        assert load_corpus(make_doc([])) == []

    def test_hau_multiplier_terms_summed(self):
        problems = load_corpus(make_doc([HAU]))
        verdict = replay(problems[0])
        assert verdict.engine_value == F(133, 8)

    def test_duplicate_id_rejected(self):
        with pytest.raises(CorpusFormatError, match="duplicate"):
            load_corpus(make_doc([HAU, HAU]))

    def test_unknown_category_rejected(self):
        bad = dict(HAU, id="x", category="astronomy")
        with pytest.raises(CorpusFormatError, match="astronomy"):
            load_corpus(make_doc([bad]))

    def test_missing_field_named(self):
        bad = {"id": "x", "category": "seked", "inputs": {"base": "360"}}
        with pytest.raises(CorpusFormatError, match="'height'"):
            load_corpus(make_doc([bad]))

    def test_unexpected_field_named(self):
        bad = {"id": "x", "category": "ladder", "inputs": {"base": 7, "top_exponent": 5, "rungs": 3}}
        with pytest.raises(CorpusFormatError, match="rungs"):
            load_corpus(make_doc([bad]))

    def test_bad_rational_named(self):
        bad = dict(HAU, id="x", scribal_answer="sixteen")
        with pytest.raises(CorpusFormatError, match="x"):
            load_corpus(make_doc([bad]))

    def test_bad_json(self):
        with pytest.raises(CorpusFormatError, match="JSON"):
            load_corpus("{problems: [")

    def test_non_object_document(self):
        with pytest.raises(CorpusFormatError):
            load_corpus("[]")

    def test_category_registry_matches_dispatch(self):
        assert set(CATEGORIES) == set(corpus._CATEGORY_COMPUTE)
        for fn in corpus._CATEGORY_COMPUTE.values():
            assert callable(fn)

    def test_value_types_checked_at_load(self):
        for bad_inputs in (
            {"floor_area": True, "length": "2"},
            {"floor_area": "wide", "length": "2"},
            {"floor_area": [], "length": "2"},
        ):
            doc = make_doc([{"id": "v", "category": "volume", "inputs": bad_inputs}])
            with pytest.raises(CorpusFormatError, match="floor_area"):
                load_corpus(doc)


class TestReplay:
    def test_match(self):
        verdict = replay(load_corpus(make_doc([HAU]))[0])
        assert verdict.status == MATCH
        assert verdict.deviation == 0

    def test_scribal_error_with_exact_deviation(self):
        corrupted = dict(HAU, scribal_answer="16")
        verdict = replay(load_corpus(make_doc([corrupted]))[0])
        assert verdict.status == SCRIBAL_ERROR
        assert verdict.deviation == F(-5, 8)

    def test_no_recorded_answer(self):
        silent = {k: v for k, v in HAU.items() if k != "scribal_answer"}
        verdict = replay(load_corpus(make_doc([silent]))[0])
        assert verdict.status == NO_RECORDED_ANSWER
        assert verdict.scribal_value is None and verdict.deviation is None

    def test_engine_error_is_a_verdict(self):
        # shape is valid at load; the engine rejects the value at replay
        bad = {
            "id": "zero-men",
            "category": "loaf_division",
            "inputs": {"loaves": 3, "men": 0},
        }
        verdict = replay(load_corpus(make_doc([bad]))[0])
        assert verdict.status == ENGINE_ERROR
        assert verdict.engine_value is None
        assert verdict.note

    def test_two_over_n_row_value(self):
        doc = make_doc([
            {"id": "t", "category": "two_over_n", "inputs": {"n": 5}, "scribal_answer": "1/3 + 1/15"}
        ])
        assert replay(load_corpus(doc)[0]).status == MATCH

    def test_area_shapes_dispatch(self):
        doc = make_doc([
            {"id": "sq", "category": "area", "inputs": {"shape": "square", "side": "8"},
             "scribal_answer": "64"},
            {"id": "tz", "category": "area",
             "inputs": {"shape": "trapezoid", "p1": "6", "p2": "4", "height": "20"},
             "scribal_answer": "100"},
            {"id": "ed", "category": "area",
             "inputs": {"shape": "edfu", "a": "3", "b": "4", "c": "5", "d": "0"},
             "scribal_answer": "8"},
        ])
        verdicts = replay_all(load_corpus(doc))
        assert all(v.status == MATCH for v in verdicts)

    def test_unknown_shape_rejected_at_load(self):
        doc = make_doc([
            {"id": "bad", "category": "area", "inputs": {"shape": "heptagon", "side": "1"}}
        ])
        with pytest.raises(CorpusFormatError, match="shape"):
            load_corpus(doc)

    def test_shape_dimensions_required_at_load(self):
        doc = make_doc([
            {"id": "bad", "category": "area", "inputs": {"shape": "triangle", "base": "4"}}
        ])
        with pytest.raises(CorpusFormatError, match="height"):
            load_corpus(doc)


class TestStarterCorpus:
    def test_loads_with_every_category(self):
        problems = load_starter_corpus()
        assert {p.category for p in problems} == set(CATEGORIES)
        assert all(p.source_note for p in problems)

    def test_statuses(self):
        verdicts = replay_all(load_starter_corpus())
        summary = error_summary(verdicts)
        assert summary.total == len(verdicts) == 12
        assert summary.status_counts[MATCH] == 10
        assert summary.status_counts[SCRIBAL_ERROR] == 1
        assert summary.status_counts[NO_RECORDED_ANSWER] == 1
        assert summary.status_counts[ENGINE_ERROR] == 0

    def test_partition_property(self):
        verdicts = replay_all(load_starter_corpus())
        summary = error_summary(verdicts)
        assert sum(summary.status_counts.values()) == summary.total

    def test_slip_is_highlighted(self):
        verdicts = replay_all(load_starter_corpus())
        summary = error_summary(verdicts)
        assert summary.largest_deviation_id == "hau-seventh-19-miscopy"
        assert summary.largest_deviation == F(-5, 8)

    def test_byte_identical_reports(self):
        for fmt in ("text", "json", "csv"):
            first = render_report(replay_all(load_corpus(starter_corpus_text())), fmt)
            second = render_report(replay_all(load_corpus(starter_corpus_text())), fmt)
            assert first == second

    def test_text_report_shape(self):
        text = render_report(replay_all(load_starter_corpus()), "text")
        assert text.startswith("corpus replay: 12 problems")
        assert "largest deviation: -5/8 (hau-seventh-19-miscopy)" in text

    def test_json_report_round_trips(self):
        doc = json.loads(render_report(replay_all(load_starter_corpus()), "json"))
        assert doc["summary"]["total"] == 12
        ids = [p["id"] for p in doc["problems"]]
        assert ids == sorted(ids)

    def test_csv_report_rows(self):
        lines = render_report(replay_all(load_starter_corpus()), "csv").splitlines()
        assert lines[0] == "id,category,status,engine_value,scribal_value,deviation"
        assert len(lines) == 13

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError):
            render_report([], "xml")
