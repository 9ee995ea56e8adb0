#!/usr/bin/env python3
"""
Tests de los reportes JSON, la tabla del barrido y la salida DOT.
"""

import json
import os
import sys

import pandas as pd
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.core.errors import InvalidParams, ParseError
from src.core.k2a_feasibility import SWAPPED, K2AConfig
from src.core.resolution_graph import DualGraph
from src.generators.dot_exporter import emit_dot
from src.generators.germ_catalog import GermKind, GermTemplateSpec, template
from src.generators.report_builder import (
    SWEEP_COLUMNS,
    dumps,
    error_report,
    export_table,
    k2a_report,
    sweep_table,
)
from src.utils.graph_dsl import GraphDocument, SurfaceContext


def test_error_report_shape():
    report = error_report(ParseError(3, "Lazo en a"))
    assert report == {"schema": 1, "error": "ParseError", "message": "línea 3: Lazo en a", "line": 3}


def test_dumps_keeps_unicode():
    text = dumps({"message": "línea"})
    assert "línea" in text
    assert json.loads(text) == {"message": "línea"}


def test_k2a_report_fields():
    cfg = K2AConfig.from_tuples((2, 1, 1), (5, 1, 2), (5, 1, 3))
    report = k2a_report(cfg)
    assert report["config"]["p1"] == {"m": 5, "p": 1, "a": 2}
    assert report["index_two_on_both"] is True
    assert [b["display"] for b in report["index_two_bounds"]] == ["25/3", "2", "50/3"]
    assert k2a_report(cfg, orientation=SWAPPED)["orientation"] == "swapped"


def test_sweep_table_columns():
    df = sweep_table(3, 2, exploratory=True)
    assert list(df.columns) == SWEEP_COLUMNS
    assert len(df) > 0
    assert df["deg1"].map(lambda x: isinstance(x, str)).all()


def test_export_table_formats(tmp_path):
    df = sweep_table(3, 1, exploratory=True)
    xlsx = export_table(df, str(tmp_path / "nested" / "sweep.xlsx"))
    assert list(pd.read_excel(xlsx, engine="openpyxl").columns) == SWEEP_COLUMNS
    csv = export_table(df, str(tmp_path / "sweep.csv"))
    assert len(pd.read_csv(csv)) == len(df)
    with pytest.raises(InvalidParams):
        export_table(df, str(tmp_path / "sweep.json"))


def test_emit_dot_empty_graph():
    text = emit_dot(GraphDocument(SurfaceContext.ELEPHANT, DualGraph([])))
    assert text == "graph dual {\n  // surface elephant\n}\n"


def test_emit_dot_template():
    spec = GermTemplateSpec(GermKind.IC, m=7)
    text = emit_dot(GraphDocument(SurfaceContext.ELEPHANT, template(spec).graph, str(spec)))
    assert text.count("style=filled") == 1
    assert text.count("style=solid") == 6
    assert 'label="IC(m=7)";' in text
    assert text.count(" -- ") == 6
