#!/usr/bin/env python3
"""
Tests de regresión sobre las configuraciones de ejemplo de la sección H.
"""

import os
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config.config import FIXTURES_DIR
from src.core.errors import InvalidParams
from src.core.rational_core import NEGATIVE_DEFINITE, negative_semidefinite
from src.core.resolution_graph import anticanonical_degree, contractibility
from src.generators.appendix_fixtures import (
    FIXTURE_FILES,
    appendix_cd3,
    appendix_ic,
    appendix_iib,
    write_fixtures,
)
from src.generators.report_builder import analyze
from src.utils.graph_dsl import read_document, render


def _degrees(doc):
    return [anticanonical_degree(doc.graph, c) for c in doc.graph.blacks()]


@pytest.mark.parametrize("m", [9, 11, 13])
def test_ic_degrees(m):
    doc = appendix_ic(m)
    assert _degrees(doc) == [Fraction(1, m), Fraction(1, m), Fraction(m - 1, 2 * m)]


def test_ic_m9_report():
    report = analyze(appendix_ic(9))
    assert contractibility(appendix_ic(9).graph) == NEGATIVE_DEFINITE
    assert [d["display"] for d in report["anticanonical_degrees"].values()] == ["1/9", "1/9", "4/9"]
    assert report["ample"]
    assert report["context"] == "section"


@pytest.mark.parametrize("m", [4, 5, 8])
def test_ic_rejects_bad_m(m):
    with pytest.raises(InvalidParams):
        appendix_ic(m)


def test_iib_degrees_and_ampleness():
    doc = appendix_iib()
    assert _degrees(doc) == [Fraction(1, 4), Fraction(1, 4)]
    assert analyze(doc)["ample"]


def test_cd3_is_semidefinite():
    doc = appendix_cd3()
    assert contractibility(doc.graph) == negative_semidefinite(1)
    assert _degrees(doc) == [Fraction(1, 3)] * 3
    report = analyze(doc)
    assert report["contractibility"] == {"class": "NegativeSemidefinite", "kernel_dim": 1}


@pytest.mark.parametrize("filename", sorted(FIXTURE_FILES))
def test_shipped_fixtures_match_generators(filename):
    expected = FIXTURE_FILES[filename]()
    with open(os.path.join(FIXTURES_DIR, filename), "r", encoding="utf-8") as handle:
        assert handle.read() == render(expected)
    doc = read_document(os.path.join(FIXTURES_DIR, filename))
    assert doc.graph.is_isomorphic(expected.graph)
    assert doc.title == expected.title


def test_write_fixtures(tmp_path):
    written = write_fixtures(str(tmp_path / "out"))
    assert sorted(os.path.basename(p) for p in written) == sorted(FIXTURE_FILES)
    for path in written:
        assert os.path.exists(path)
