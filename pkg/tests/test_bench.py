import io
import math

import numpy as np
import pytest
from openpyxl import load_workbook

from semsim.bench import (
    CSV_COLUMNS,
    NO_IC,
    BenchReport,
    BenchRow,
    dataset_summary,
    evaluate,
    parse_report_csv,
    pearson,
    render_report,
    report_to_xlsx,
    scores_frame,
    spearman,
)
from semsim.errors import (
    ConstantSequence,
    LengthMismatch,
    NoCoveredPairs,
    ParseError,
    SemsimError,
    UnnormalizedIC,
)
from semsim.measure_registry import parse_param_overrides
from semsim.ontology_io import parse_pair_dataset

WITH_UNKNOWN = "#scale 0 4\nfever\tpyrexia\t4\nfever\theadache\t2\nfever\tmesh\t0.5\nfever\tdiarrhea\t2\n"
FLAT = "#scale 0 4\nfever\tdiarrhea\t2\nfever\tmesh\t2\npyrexia\tx1\t2\n"


class TestCorrelation:
    def test_small_example(self):
        assert pearson([1, 2, 3], [2, 4, 6]) == pytest.approx(1.0)
        assert pearson([1, 2, 3], [6, 4, 2]) == pytest.approx(-1.0)
        assert spearman([1, 2, 3], [6, 4, 2]) == pytest.approx(-1.0)
        assert pearson([1, 2, 3, 4], [1, 3, 2, 4]) == 0.8
        assert spearman([1, 2, 3, 4], [1, 3, 2, 4]) == 0.8

    def test_stays_within_unit_interval(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            x = rng.normal(size=int(rng.integers(2, 12)))
            r = pearson(x, 2.0 * x + 1.0)
            assert r <= 1.0
            assert r == pytest.approx(1.0)
            assert -1.0 <= pearson(x, -x) <= 1.0

    def test_pearson_matches_numpy(self):
        rng = np.random.default_rng(1)
        for _ in range(1000):
            n = int(rng.integers(2, 30))
            x = rng.normal(size=n)
            y = rng.normal(size=n)
            assert pearson(x, y) == pytest.approx(np.corrcoef(x, y)[0, 1], abs=1e-9)

    def test_affine_invariance(self):
        rng = np.random.default_rng(2)
        x = rng.normal(size=40)
        y = rng.normal(size=40)
        assert pearson(3.0 * x + 7.0, y) == pytest.approx(pearson(x, y))
        assert pearson(-x, y) == pytest.approx(-pearson(x, y))
        assert spearman(np.exp(x), y) == pytest.approx(spearman(x, y))

    def test_ties_use_average_ranks(self):
        assert spearman([1, 1, 2, 3], [1, 2, 3, 4]) == pytest.approx(pearson([1.5, 1.5, 3, 4], [1, 2, 3, 4]))

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            pearson([1, 2, 3], [1, 2])
        with pytest.raises(LengthMismatch):
            spearman([1], [1])

    def test_constant(self):
        with pytest.raises(ConstantSequence):
            pearson([2, 2, 2], [1, 2, 3])


class TestEvaluate:
    def test_mini8_similarity_measures(self, fix1, corpus_provider, mini8):
        report = evaluate(fix1, corpus_provider, ["path", "wup", "lch", "li", "resnik", "lin"], mini8)
        assert report.dataset == "mini8"
        for row in report.rows:
            assert row.covered == 8
            assert row.skipped == 0
            assert row.pearson > 0
            assert row.spearman > 0

    def test_distance_correlates_negatively(self, fix1, corpus_provider, mini8):
        row = evaluate(fix1, corpus_provider, ["jcn"], mini8).rows[0]
        assert row.pearson < 0
        assert row.ic_kind == "corpus"

    def test_ic_kind_label(self, fix1, intrinsic_provider, mini8):
        rows = evaluate(fix1, intrinsic_provider, ["wup", "zhou"], mini8).rows
        assert [r.ic_kind for r in rows] == [NO_IC, "intrinsic"]

    def test_unknown_words_are_skipped(self, fix1):
        ds = parse_pair_dataset(WITH_UNKNOWN, name="partial")
        row = evaluate(fix1, None, ["wup"], ds).rows[0]
        assert (row.covered, row.skipped) == (3, 1)
        assert row.skipped_pairs[0].index == 1
        assert row.skipped_pairs[0].word2 == "headache"
        assert row.scores[1] is None

    def test_no_covered_pairs(self, fix1):
        ds = parse_pair_dataset("#scale 0 4\nfever\theadache\t1\nfoo\tbar\t2\n")
        with pytest.raises(NoCoveredPairs) as ei:
            evaluate(fix1, None, ["wup"], ds)
        assert ei.value.exit_code == 4

    def test_measure_errors_propagate(self, fix1, corpus_provider, mini8):
        with pytest.raises(UnnormalizedIC):
            evaluate(fix1, corpus_provider, ["zhou"], mini8)

    def test_constant_ratings_give_nan_rows(self, fix1):
        ds = parse_pair_dataset(FLAT, name="flat")
        report = evaluate(fix1, None, ["wup", "path"], ds)
        assert [r.measure for r in report.rows] == ["wup", "path"]
        for row in report.rows:
            assert row.covered == 3
            assert math.isnan(row.pearson)
            assert math.isnan(row.spearman)
        assert render_report(report).splitlines()[1] == "wup,none,nan,nan,3,0"

    def test_serial_and_threaded_agree(self, fix1, corpus_provider, mini8):
        serial = evaluate(fix1, corpus_provider, ["lin", "wlink"], mini8, max_workers=1)
        threaded = evaluate(fix1, corpus_provider, ["lin", "wlink"], mini8, max_workers=4)
        assert serial == threaded

    def test_per_measure_params(self, fix1, mini8):
        params = parse_param_overrides(["hso_c=30"])
        rows = evaluate(fix1, None, ["hso", ("hso", params)], mini8).rows
        assert rows[0].scores[0] == 8.0
        assert rows[1].scores[0] == 30.0


class TestRendering:
    @pytest.fixture
    def report(self, fix1, corpus_provider, mini8):
        return evaluate(fix1, corpus_provider, ["wup", "lin"], mini8)

    def test_csv(self, report):
        text = render_report(report, "csv")
        lines = text.splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert lines[1].startswith("wup,none,")
        assert lines[2].startswith("lin,corpus,")
        assert text == render_report(report, "csv")

    def test_markdown(self, report):
        text = render_report(report, "markdown")
        assert text.startswith("Dataset: mini8\n\n| measure |")
        assert "| wup | none |" in text

    def test_negative_zero(self):
        row = BenchRow("x", NO_IC, -0.00001, 0.5, 2, 0)
        assert "0.0000,0.5000" in render_report(BenchReport("d", (row,)))

    def test_unknown_format(self, report):
        with pytest.raises(SemsimError):
            render_report(report, "html")

    def test_csv_reads_back(self, report):
        back = parse_report_csv(render_report(report), dataset="mini8")
        assert [r.measure for r in back.rows] == ["wup", "lin"]
        for orig, read in zip(report.rows, back.rows):
            assert read.pearson == pytest.approx(orig.pearson, abs=5e-5)
            assert read.covered == orig.covered

    def test_bad_csv(self):
        with pytest.raises(ParseError):
            parse_report_csv("a,b\n")
        with pytest.raises(ParseError):
            parse_report_csv(",".join(CSV_COLUMNS) + "\nwup,none,x,0,1,0\n")

    def test_xlsx(self, fix1):
        ds = parse_pair_dataset(WITH_UNKNOWN, name="partial")
        data = report_to_xlsx(evaluate(fix1, None, ["wup"], ds))
        assert data[:2] == b"PK"
        wb = load_workbook(io.BytesIO(data))
        assert wb.sheetnames == ["Resumen", "Omitidos"]
        assert wb["Resumen"]["A4"].value == "wup"
        assert wb["Omitidos"]["D2"].value == "headache"

    def test_xlsx_nan_cells_are_empty(self, fix1):
        data = report_to_xlsx(evaluate(fix1, None, ["wup"], parse_pair_dataset(FLAT, name="flat")))
        ws = load_workbook(io.BytesIO(data))["Resumen"]
        assert ws["C4"].value is None
        assert ws["E4"].value == 3


class TestDatasetSummary:
    def test_mini8(self, mini8):
        s = dataset_summary(mini8)
        assert (s.pairs, s.low, s.intermediate, s.high) == (8, 2, 3, 3)
        assert s.mean_rating == pytest.approx(2.3375)
        assert s.words == 8

    def test_scores_frame(self, fix1, corpus_provider, mini8):
        report = evaluate(fix1, corpus_provider, ["wup", "lin"], mini8)
        df = scores_frame(report, mini8)
        assert list(df.columns) == ["word1", "word2", "rating", "wup", "lin (corpus)"]
        assert df.loc[0, "wup"] == 1.0
