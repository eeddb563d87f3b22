"""Batch verification: enumerate graphic sequences, cross-validate the
closed-form decision against the oracle and the family catalogs, and emit
deterministic JSON/CSV reports.
"""

from __future__ import annotations

import csv
import io
import json
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .catalogs import ExceptionCatalog, default_catalog
from .characterization import lemma_family_decide, theorem31_decide
from .errors import DomainError
from .oracle import DEFAULT_BUDGET, STRATEGY_EMBED, oracle_potentially
from .sequences import DegreeSequence, is_graphic_eg

__all__ = [
    "SurveyRecord",
    "SurveyReport",
    "enumerate_graphic_sequences",
    "cross_validate",
    "render_report",
    "emit_report",
    "parse_survey_csv",
]

MAX_SURVEY_VERTICES = 12

_CSV_COLUMNS = (
    "sequence",
    "n",
    "sigma",
    "graphic",
    "theorem_verdict",
    "failing_clause",
    "oracle_verdict",
    "lemma_verdict",
    "agree",
    "witness_file",
)


@dataclass(frozen=True)
class SurveyRecord:
    """One surveyed sequence with every verdict that was computed for it."""

    sequence: str
    n: int
    sigma: int
    graphic: bool
    theorem_verdict: Optional[bool]
    failing_clause: Optional[str]
    oracle_verdict: Optional[bool]
    lemma_verdict: Optional[bool]
    agree: bool
    witness_file: Optional[str]


@dataclass(frozen=True)
class SurveyReport:
    """Aggregate outcome of one cross-validation run.

    ``records`` holds every surveyed sequence in enumeration order;
    ``discrepancies`` is its non-agreeing subset. ``runtime`` is wall-clock
    seconds and is the single field exempt from byte-determinism.
    ``reading_divergences`` lists sequences on which the two readings of
    clause (5)(i) differ (expected empty; kept as evidence).
    """

    n: int
    total_sequences: int
    potential_count: int
    discrepancies: tuple[SurveyRecord, ...]
    sigma_empirical: Optional[int]
    sigma_formula: int
    catalog_checksum: str
    runtime: float
    records: tuple[SurveyRecord, ...]
    reading_divergences: tuple[str, ...]


def enumerate_graphic_sequences(
    n: int, positive_only: bool = True
) -> list[DegreeSequence]:
    """All graphic sequences of length n, lexicographically decreasing.

    Candidates are the non-increasing sequences with terms in [1, n-1]
    (or [0, n-1] when zeros are admitted), filtered by is_graphic_eg.

    Raises:
        DomainError: n outside 1..12.
    """
    if not 1 <= n <= MAX_SURVEY_VERTICES:
        raise DomainError(
            f"sequence enumeration supports 1 <= n <= {MAX_SURVEY_VERTICES}, got n={n}"
        )
    low = 1 if positive_only else 0
    out: list[DegreeSequence] = []
    prefix: list[int] = []

    def gen(remaining: int, mx: int, total: int) -> None:
        if remaining == 0:
            if total % 2 == 0:
                seq = DegreeSequence(tuple(prefix))
                if is_graphic_eg(seq):
                    out.append(seq)
            return
        for v in range(mx, low - 1, -1):
            prefix.append(v)
            gen(remaining - 1, v, total + v)
            prefix.pop()

    gen(n, n - 1, 0)
    return out


def _oracle_worker(args: tuple[tuple[int, ...], int, str]) -> tuple[bool, int]:
    terms, budget, strategy = args
    verdict = oracle_potentially(DegreeSequence(terms), None, strategy, budget)
    return verdict.potentially, verdict.nodes_explored


def cross_validate(
    n: int,
    use_oracle: bool,
    *,
    budget: int = DEFAULT_BUDGET,
    catalog: Optional[ExceptionCatalog] = None,
    strategy: str = STRATEGY_EMBED,
    jobs: int = 1,
    allow_zeros: bool = False,
) -> SurveyReport:
    """Survey every graphic sequence of length n and compare all verdicts.

    For each sequence: the closed-form verdict (both clause-(5)(i) readings,
    divergences logged), the family verdict where applicable, and the oracle
    verdict when enabled. ``agree`` per record means every pair of present
    verdicts coincides; the report collects non-agreeing records. With the
    oracle enabled the empirical sigma is computed from the same pass.

    Raises:
        DomainError: n outside 6..12, or outside 6..9 with the oracle.
        BudgetExceededError: an oracle call ran out (names the sequence).
    """
    start = time.perf_counter()
    cat = catalog or default_catalog()
    if not 6 <= n <= MAX_SURVEY_VERTICES:
        raise DomainError(f"cross_validate supports 6 <= n <= 12, got n={n}")
    if use_oracle and n > 9:
        raise DomainError(f"oracle cross-validation supports 6 <= n <= 9, got n={n}")
    if jobs < 1:
        raise DomainError(f"jobs must be >= 1, got {jobs}")

    seqs = enumerate_graphic_sequences(n, positive_only=not allow_zeros)
    eval_seqs = [s.strip_zeros() for s in seqs] if allow_zeros else seqs
    if allow_zeros and any(e.n != s.n for e, s in zip(eval_seqs, seqs)):
        warnings.warn("zero terms stripped before evaluation", stacklevel=2)

    oracle_verdicts: list[Optional[bool]] = [None] * len(seqs)
    if use_oracle:
        payload = [(e.terms, budget, strategy) for e in eval_seqs]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_oracle_worker, payload, chunksize=8))
        else:
            results = [_oracle_worker(item) for item in payload]
        oracle_verdicts = [potentially for potentially, _ in results]

    records: list[SurveyRecord] = []
    divergences: list[str] = []
    for seq, eval_seq, oracle_verdict in zip(seqs, eval_seqs, oracle_verdicts):
        theorem_verdict: Optional[bool] = None
        failing: Optional[str] = None
        lemma_verdict: Optional[bool] = None
        if eval_seq.n >= 6:
            report = theorem31_decide(eval_seq, cat)
            alt = theorem31_decide(eval_seq, cat, alternative_5i=True)
            if alt.verdict != report.verdict:
                divergences.append(seq.render())
            theorem_verdict = report.verdict
            failing = report.failing_clause
            lemma_verdict = lemma_family_decide(eval_seq, cat)
        present = [v for v in (theorem_verdict, oracle_verdict, lemma_verdict) if v is not None]
        agree = all(v == present[0] for v in present)
        records.append(
            SurveyRecord(
                sequence=seq.render(),
                n=seq.n,
                sigma=seq.sigma,
                graphic=True,
                theorem_verdict=theorem_verdict,
                failing_clause=failing,
                oracle_verdict=oracle_verdict,
                lemma_verdict=lemma_verdict,
                agree=agree,
                witness_file=None,
            )
        )

    discrepancies = tuple(r for r in records if not r.agree)
    potential_count = sum(
        1
        for r in records
        if (r.oracle_verdict if r.oracle_verdict is not None else r.theorem_verdict)
    )
    sigma_emp: Optional[int] = None
    if use_oracle:
        non_potential = [r.sigma for r in records if r.oracle_verdict is False]
        if non_potential:
            sigma_emp = max(non_potential) + 2
    return SurveyReport(
        n=n,
        total_sequences=len(records),
        potential_count=potential_count,
        discrepancies=discrepancies,
        sigma_empirical=sigma_emp,
        sigma_formula=6 * n - 10,
        catalog_checksum=cat.checksum,
        runtime=round(time.perf_counter() - start, 3),
        records=tuple(records),
        reading_divergences=tuple(divergences),
    )


def _record_dict(record: SurveyRecord) -> dict:
    return {
        "sequence": record.sequence,
        "n": record.n,
        "sigma": record.sigma,
        "graphic": record.graphic,
        "theorem_verdict": record.theorem_verdict,
        "failing_clause": record.failing_clause,
        "oracle_verdict": record.oracle_verdict,
        "lemma_verdict": record.lemma_verdict,
        "agree": record.agree,
        "witness_file": record.witness_file,
    }


def _report_dict(report: SurveyReport) -> dict:
    return {
        "n": report.n,
        "total_sequences": report.total_sequences,
        "potential_count": report.potential_count,
        "discrepancies": [_record_dict(r) for r in report.discrepancies],
        "sigma_empirical": report.sigma_empirical,
        "sigma_formula": report.sigma_formula,
        "catalog_checksum": report.catalog_checksum,
        "runtime": report.runtime,
        "records": [_record_dict(r) for r in report.records],
        "reading_divergences": list(report.reading_divergences),
    }


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_report(report: SurveyReport, format: str = "json") -> str:
    """Serialize a report; field order is fixed, so output is reproducible
    byte for byte apart from the runtime value."""
    if format == "json":
        return json.dumps(_report_dict(report), indent=2) + "\n"
    if format == "csv":
        buf = io.StringIO()
        meta = _report_dict(report)
        for key in (
            "n",
            "total_sequences",
            "potential_count",
            "sigma_empirical",
            "sigma_formula",
            "catalog_checksum",
            "runtime",
        ):
            buf.write(f"# {key}={_csv_cell(meta[key])}\n")
        buf.write(f"# discrepancy_count={len(report.discrepancies)}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_CSV_COLUMNS)
        for record in report.records:
            rd = _record_dict(record)
            writer.writerow([_csv_cell(rd[col]) for col in _CSV_COLUMNS])
        return buf.getvalue()
    raise DomainError(f"unknown report format {format!r}; use json or csv")


def emit_report(
    report: SurveyReport, format: str = "json", path: Optional[str] = None
) -> str:
    """Render and optionally write a report; returns the rendered text."""
    text = render_report(report, format)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def parse_survey_csv(text: str) -> tuple[dict, list[SurveyRecord]]:
    """Inverse of the CSV renderer, for round-trip checks and triage tools."""
    meta: dict = {}
    body: list[str] = []
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition("=")
            meta[key] = value
        else:
            body.append(line)
    records = []
    for row in csv.DictReader(body):
        records.append(
            SurveyRecord(
                sequence=row["sequence"],
                n=int(row["n"]),
                sigma=int(row["sigma"]),
                graphic=row["graphic"] == "true",
                theorem_verdict=None if row["theorem_verdict"] == "" else row["theorem_verdict"] == "true",
                failing_clause=row["failing_clause"] or None,
                oracle_verdict=None if row["oracle_verdict"] == "" else row["oracle_verdict"] == "true",
                lemma_verdict=None if row["lemma_verdict"] == "" else row["lemma_verdict"] == "true",
                agree=row["agree"] == "true",
                witness_file=row["witness_file"] or None,
            )
        )
    return meta, records
