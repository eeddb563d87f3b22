"""Sequence enumeration, cross-validation sweeps, report formats."""

from __future__ import annotations

import dataclasses
import json

import pytest

import helpers
from potgraph.catalogs import load_catalog
from potgraph.errors import DomainError
from potgraph.survey import (
    cross_validate,
    emit_report,
    enumerate_graphic_sequences,
    parse_survey_csv,
    render_report,
)


def test_enumeration_matches_brute_force_small():
    for n in range(1, 6):
        expected = sorted(
            (
                terms
                for terms in helpers.all_degree_vectors(n)
                if helpers.brute_force_is_graphic(terms)
            ),
            reverse=True,
        )
        got = [s.terms for s in enumerate_graphic_sequences(n, positive_only=False)]
        assert got == expected, n
        positive = [
            s.terms for s in enumerate_graphic_sequences(n, positive_only=True)
        ]
        assert positive == [t for t in expected if 0 not in t], n


def test_enumeration_counts_frozen():
    assert len(enumerate_graphic_sequences(6)) == 71
    assert len(enumerate_graphic_sequences(7)) == 240
    assert len(enumerate_graphic_sequences(8)) == 871
    assert len(enumerate_graphic_sequences(6, positive_only=False)) == 102


def test_enumeration_is_sorted_lexicographically_decreasing():
    seqs = [s.terms for s in enumerate_graphic_sequences(7)]
    assert seqs == sorted(seqs, reverse=True)


def test_enumeration_domain():
    with pytest.raises(DomainError):
        enumerate_graphic_sequences(0)
    with pytest.raises(DomainError):
        enumerate_graphic_sequences(13)


def test_cross_validate_theorem_only(catalog):
    report = cross_validate(6, use_oracle=False)
    assert report.n == 6
    assert report.total_sequences == 71
    assert report.potential_count == 8
    assert report.sigma_empirical is None
    assert report.sigma_formula == 26
    assert report.discrepancies == ()
    assert report.reading_divergences == ()
    assert report.catalog_checksum == catalog.checksum
    assert len(report.records) == 71
    for record in report.records:
        assert record.oracle_verdict is None
        assert record.graphic is True
        assert record.agree is True
        assert record.witness_file is None


def test_cross_validate_with_oracle():
    report = cross_validate(6, use_oracle=True)
    assert report.total_sequences == 71
    assert report.potential_count == 8
    assert report.sigma_empirical == 26
    assert report.discrepancies == ()
    positives = {r.sequence for r in report.records if r.oracle_verdict}
    assert positives == {
        "5^6",
        "5^4,4^2",
        "5^3,4^2,3",
        "5^2,4^4",
        "5^2,4^2,3^2",
        "5,4^4,3",
        "5,4^2,3^3",
        "5,3^5",
    }
    for record in report.records:
        assert record.oracle_verdict is not None
        assert record.theorem_verdict == record.oracle_verdict
        if record.lemma_verdict is not None:
            assert record.lemma_verdict == record.oracle_verdict


def test_jobs_do_not_change_results():
    serial = cross_validate(6, use_oracle=True, jobs=1)
    parallel = cross_validate(6, use_oracle=True, jobs=2)
    normalize = lambda rep: dataclasses.replace(rep, runtime=0.0)
    assert render_report(normalize(serial), "json") == render_report(
        normalize(parallel), "json"
    )
    with pytest.raises(DomainError):
        cross_validate(6, use_oracle=True, jobs=0)


def test_determinism_across_runs():
    one = dataclasses.replace(cross_validate(7, use_oracle=False), runtime=0.0)
    two = dataclasses.replace(cross_validate(7, use_oracle=False), runtime=0.0)
    assert render_report(one, "csv") == render_report(two, "csv")
    assert render_report(one, "json") == render_report(two, "json")


def test_json_rendering_shape():
    report = cross_validate(6, use_oracle=False)
    text = render_report(report, "json")
    assert text.endswith("\n")
    data = json.loads(text)
    assert data["n"] == 6
    assert data["total_sequences"] == 71
    assert data["sigma_formula"] == 26
    assert len(data["records"]) == 71
    assert data["records"][0]["sequence"] == "5^6"


def test_csv_round_trip(tmp_path):
    report = cross_validate(6, use_oracle=True)
    text = render_report(report, "csv")
    meta, records = parse_survey_csv(text)
    assert meta["n"] == "6"
    assert meta["total_sequences"] == "71"
    assert meta["potential_count"] == "8"
    assert meta["sigma_empirical"] == "26"
    assert meta["discrepancy_count"] == "0"
    assert meta["catalog_checksum"] == report.catalog_checksum
    assert records == list(report.records)

    out = tmp_path / "survey.csv"
    written = emit_report(report, "csv", str(out))
    assert out.read_text() == written == text


def test_render_unknown_format():
    report = cross_validate(6, use_oracle=False)
    with pytest.raises(DomainError):
        render_report(report, "yaml")


def test_allow_zeros_pads_and_warns():
    with pytest.warns(UserWarning):
        report = cross_validate(6, use_oracle=False, allow_zeros=True)
    assert report.total_sequences == 102
    padded = [r for r in report.records if "0" in r.sequence]
    assert padded
    # sequences that strip below six vertices carry no theorem verdict
    assert any(r.theorem_verdict is None for r in padded)


def test_domain_limits():
    with pytest.raises(DomainError):
        cross_validate(5, use_oracle=False)
    with pytest.raises(DomainError):
        cross_validate(13, use_oracle=False)
    with pytest.raises(DomainError):
        cross_validate(10, use_oracle=True)  # oracle sweeps stop at nine
    assert cross_validate(10, use_oracle=False).total_sequences > 0


def test_doctored_catalog_produces_discrepancies(catalog_dir):
    with (catalog_dir / "cond7_fixed.txt").open("a") as fh:
        fh.write("5,4^4,3\n")
    doctored = load_catalog(str(catalog_dir))
    report = cross_validate(6, use_oracle=True, catalog=doctored)
    assert report.discrepancies
    flagged = {r.sequence for r in report.discrepancies}
    assert flagged == {"5,4^4,3"}
    record = next(r for r in report.records if r.sequence == "5,4^4,3")
    assert record.theorem_verdict is False
    assert record.oracle_verdict is True
    assert record.agree is False
