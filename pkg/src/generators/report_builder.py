#!/usr/bin/env python3
"""
Generación de reportes JSON y tablas de resultados.

Los racionales se serializan como {"num", "den", "display"} para que la
exactitud sobreviva a cualquier consumidor de JSON.
"""

import json
import logging
import os
from typing import Any, Dict, List

import pandas as pd

from config.config import REPORT_SCHEMA_VERSION
from src.core.errors import InvalidParams, SurfaceGraphError
from src.core.k2a_feasibility import (
    QUOTED,
    K2AConfig,
    build_plumbing,
    expected_contractibility,
    index_two_bounds,
    is_feasible,
    iter_configs,
)
from src.core.quotient_sing import QuotientSummary
from src.core.rational_core import rational_to_json
from src.core.resolution_graph import (
    anticanonical_degree,
    codiscrepancy,
    contractibility,
    intersection_matrix,
    path_order,
    pullback_coefficients,
    pushforward_product,
    white_components,
)
from src.generators.germ_catalog import ElephantGraph, GluedConfiguration, check_elephant
from src.utils.graph_dsl import GraphDocument

logger = logging.getLogger(__name__)


def _envelope(kind: str, body: Dict[str, Any]) -> Dict[str, Any]:
    report = {"schema": REPORT_SCHEMA_VERSION, "report": kind}
    report.update(body)
    return report


def error_report(error: SurfaceGraphError) -> Dict[str, Any]:
    return {"schema": REPORT_SCHEMA_VERSION, **error.to_dict()}


def _graph_section(doc_graph) -> Dict[str, Any]:
    return {
        "vertices": [
            {"id": v.id, "color": v.color.value, "selfint": v.self_intersection} for v in doc_graph.vertices
        ],
        "edges": [list(e) for e in doc_graph.edges],
    }


def analyze(doc: GraphDocument) -> Dict[str, Any]:
    """
    Reporte completo de un grafo dual.

    Incluye matriz de intersección, clase de contractibilidad, codiscrepancia,
    grados anticanónicos de cada negro, tipos ADE de las componentes blancas,
    comprobación de Dynkin del grafo entero y la bandera `ample`.

    Raises:
        NotContractible: si la parte blanca no es definida negativa
    """
    g = doc.graph
    matrix = intersection_matrix(g)
    theta = codiscrepancy(g)
    blacks = g.blacks()

    degrees = {c: anticanonical_degree(g, c, theta) for c in blacks}
    pullbacks = {
        c: {w: rational_to_json(x) for w, x in pullback_coefficients(g, c).items()} for c in blacks
    }
    black_form = [[rational_to_json(pushforward_product(g, a, b)) for b in blacks] for a in blacks]

    report = _envelope(
        "analyze",
        {
            "context": doc.context.value,
            "title": doc.title,
            **_graph_section(g),
            "intersection_matrix": {
                "order": g.vertex_ids,
                "rows": [[int(x) for x in row] for row in matrix.rows],
            },
            "contractibility": contractibility(g).to_dict() if len(g) else None,
            "codiscrepancy": {
                "coefficients": {w: rational_to_json(x) for w, x in theta.coefficients.items()},
                "du_val": theta.du_val,
                "log_terminal": theta.log_terminal,
            },
            "anticanonical_degrees": {c: rational_to_json(d) for c, d in degrees.items()},
            "pullback_coefficients": pullbacks,
            "black_intersections": {"order": blacks, "rows": black_form},
            "white_components": [
                {"index": c.index, "vertices": c.vertex_ids, "type": c.ade.name if c.ade else None}
                for c in white_components(g)
            ],
            "dynkin": check_elephant(ElephantGraph(g, tuple(blacks))).to_dict(),
            "ample": bool(blacks) and all(d > 0 for d in degrees.values()),
        },
    )
    logger.debug(f"Análisis completado: {len(g)} vértices, ample={report['ample']}")
    return report


def k2a_report(cfg: K2AConfig, orientation: str = QUOTED) -> Dict[str, Any]:
    """Reporte de una configuración k2A: campos de FeasibilityReport más contexto."""
    bounds = index_two_bounds(cfg)
    plumbing = build_plumbing(cfg, orientation)
    return _envelope(
        "k2a",
        {
            "config": {name: {"m": t.m, "p": t.p, "a": t.a} for name, t in zip(("p0", "p1", "p2"), (cfg.p0, cfg.p1, cfg.p2))},
            **is_feasible(cfg).to_dict(),
            "index_two_on_both": cfg.has_index_two_on_both,
            "plumbing_contractibility": expected_contractibility(cfg).to_dict(),
            "orientation": orientation,
            "plumbing_chain": [plumbing.graph.vertex(v).self_intersection for v in path_order(plumbing.graph)],
            "index_two_bounds": None if bounds is None else [rational_to_json(x) for x in bounds],
        },
    )


def search_report(found: List[K2AConfig], max_m: int, max_p: int, exploratory: bool) -> Dict[str, Any]:
    return _envelope(
        "k2a-search",
        {
            "bounds": {"max_m": max_m, "max_p": max_p},
            "mode": "exploratory (sin condición de índice 2)" if exploratory else "k2A_2",
            "feasible_count": len(found),
            "feasible": [[list(t) for t in cfg.as_tuples()] for cfg in found],
        },
    )


def hj_report(summary: QuotientSummary) -> Dict[str, Any]:
    t = summary.t_params
    first, last = summary.end_codiscrepancies
    return _envelope(
        "hj",
        {
            "n": summary.quotient.n,
            "q": summary.quotient.q,
            "chain": list(summary.chain),
            "dual_chain": list(summary.dual_chain),
            "determinant": summary.determinant,
            "end_codiscrepancies": [rational_to_json(first), rational_to_json(last)],
            "class_T": None if t is None else {"m": t.m, "p": t.p, "a": t.a},
            "class_T_via_partner": summary.via_partner,
            "du_val": summary.du_val,
        },
    )


def elephant_report(e: ElephantGraph, label: str) -> Dict[str, Any]:
    return _envelope(
        "elephant",
        {
            "label": label,
            **_graph_section(e.graph),
            "marked_black": list(e.marked_black),
            "white_components": [
                {"index": c.index, "vertices": c.vertex_ids, "type": c.ade.name if c.ade else None}
                for c in white_components(e.graph)
            ],
            "check": check_elephant(e).to_dict(),
        },
    )


def compatible_report(configs: List[GluedConfiguration]) -> Dict[str, Any]:
    return _envelope(
        "compatible",
        {
            "count": len(configs),
            "configurations": [
                {
                    "spec_a": str(c.spec_a),
                    "spec_b": str(c.spec_b),
                    "comp_a": c.comp_a,
                    "comp_b": c.comp_b,
                    "type": c.type.name,
                }
                for c in configs
            ],
        },
    )


def dumps(report: Dict[str, Any]) -> str:
    """JSON estable byte a byte para una entrada fija."""
    return json.dumps(report, indent=2, ensure_ascii=False)


SWEEP_COLUMNS = [
    "m0", "p0", "a0", "m1", "p1", "a1", "m2", "p2", "a2",
    "delta1", "delta2", "Delta1", "Delta2",
    "deg1", "deg2", "c11", "c22", "c12",
    "ample", "contractible", "feasible",
]


def sweep_table(max_m: int, max_p: int, exploratory: bool = False) -> pd.DataFrame:
    """
    Tabla con una fila por configuración del barrido; los racionales van
    como texto "p/q".
    """
    rows = []
    for cfg in iter_configs(max_m, max_p, exploratory):
        report = is_feasible(cfg)
        (m0, p0, a0), (m1, p1, a1), (m2, p2, a2) = cfg.as_tuples()
        rows.append(
            {
                "m0": m0, "p0": p0, "a0": a0,
                "m1": m1, "p1": p1, "a1": a1,
                "m2": m2, "p2": p2, "a2": a2,
                "delta1": report.delta1,
                "delta2": report.delta2,
                "Delta1": report.Delta1,
                "Delta2": report.Delta2,
                "deg1": str(report.deg1),
                "deg2": str(report.deg2),
                "c11": str(report.c11),
                "c22": str(report.c22),
                "c12": str(report.c12),
                "ample": report.ample,
                "contractible": report.contractible,
                "feasible": report.feasible,
            }
        )
    df = pd.DataFrame(rows, columns=SWEEP_COLUMNS)
    logger.info(f"📊 Barrido k2A: {len(df)} configuraciones, {int(df['feasible'].sum()) if len(df) else 0} factibles")
    return df


def export_table(df: pd.DataFrame, path: str) -> str:
    """Guarda la tabla en CSV o XLSX según la extensión."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    extension = os.path.splitext(path)[1].lower()
    if extension == ".csv":
        df.to_csv(path, index=False)
    elif extension == ".xlsx":
        df.to_excel(path, index=False, engine="openpyxl")
    else:
        raise InvalidParams(f"Extensión no soportada: {extension} (usa .csv o .xlsx)")
    logger.info(f"✅ Tabla guardada en {path}")
    return path
