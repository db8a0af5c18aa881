"""
Unit tests for the verdict and scan exporters.
"""

import csv
import io
import json
import os
import tempfile

import pytest

from knotobs.exporters import ScanExporter, VerdictExporter, render_verdict
from knotobs.models.scan_config import ScanConfig
from knotobs.pipeline import evaluate_text
from knotobs.scan import CSV_COLUMNS, Scanner


def _records():
    return list(Scanner(ScanConfig(max_q=7, max_factors_per_sign=1)).run())


def test_render_verdict():
    """Test the JSON text printed by `knotobs check`."""
    text = render_verdict(evaluate_text("T(3,5) # -T(2,3)"))
    data = json.loads(text)
    assert data["status"] == "Obstructed"
    assert text.startswith('{\n  "input"')


def test_verdict_exporter():
    """Test saving verdicts as a JSON array."""
    with tempfile.TemporaryDirectory() as temp_dir:
        output_path = os.path.join(temp_dir, "nested", "verdicts.json")
        exporter = VerdictExporter(output_path)
        exporter.export([evaluate_text("T(2,3)"), evaluate_text("-T(2,3)")])

        with open(output_path, "r") as f:
            data = json.load(f)

        assert [v["status"] for v in data] == ["Concordant", "Obstructed"]


def test_scan_exporter_json_lines():
    """Test one JSON object per line."""
    records = _records()
    stream = io.StringIO()
    count = ScanExporter("json").export(records, stream)

    lines = stream.getvalue().splitlines()
    assert count == len(records) == len(lines)
    first = json.loads(lines[0])
    assert list(first) == CSV_COLUMNS
    assert first["expr"] == "U"
    assert first["reasons"] == []


def test_scan_exporter_csv():
    """Test the CSV header and rows."""
    records = _records()
    stream = io.StringIO()
    count = ScanExporter("csv").export(records, stream)

    rows = list(csv.DictReader(io.StringIO(stream.getvalue())))
    assert count == len(rows) == len(records)
    assert stream.getvalue().splitlines()[0] == ",".join(CSV_COLUMNS)
    assert rows[0]["expr"] == "U"
    assert rows[0]["reasons"] == ""


def test_json_and_csv_hold_the_same_records():
    """Test that both formats carry identical information."""
    records = _records()
    json_stream, csv_stream = io.StringIO(), io.StringIO()
    ScanExporter("json").export(records, json_stream)
    ScanExporter("csv").export(records, csv_stream)

    from_json = [json.loads(line) for line in json_stream.getvalue().splitlines()]
    from_csv = list(csv.DictReader(io.StringIO(csv_stream.getvalue())))
    for j, c in zip(from_json, from_csv):
        assert j["expr"] == c["expr"]
        assert j["status"] == c["status"]
        assert ";".join(j["reasons"]) == c["reasons"]
        assert str(j["det_plus"]) == c["det_plus"]
        assert ("" if j["candidate_det"] is None else str(j["candidate_det"])) == c["candidate_det"]


def test_scan_exporter_to_file():
    """Test writing records to a file path."""
    with tempfile.TemporaryDirectory() as temp_dir:
        output_path = os.path.join(temp_dir, "out", "scan.csv")
        count = ScanExporter("csv", output_path).export(_records())

        with open(output_path, "r") as f:
            assert len(f.read().splitlines()) == count + 1


def test_scan_exporter_unknown_format():
    """Test that unsupported formats are rejected."""
    with pytest.raises(ValueError):
        ScanExporter("xml")
