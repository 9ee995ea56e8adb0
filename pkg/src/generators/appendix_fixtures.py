#!/usr/bin/env python3
"""
Generadores de las configuraciones de ejemplo sobre la sección hiperplana H.

Cada • es una (−1)-curva; los blancos son (−2) salvo que se indique otra cosa.

    appendix_ic(m):  IC + k1A + k1A, con −K·C_1 = −K·C_2 = 1/m, −K·C_3 = (m−1)/2m
    appendix_iib():  IIB + IIA, con −K·C_1 = −K·C_2 = 1/4
    appendix_cd3():  cD/3 + cD/3 + cD/3 (fibrado en cónicas, matriz semidefinida)
"""

import logging
import os
from typing import List

from src.core.errors import InvalidParams
from src.core.resolution_graph import Color, DualGraph, Vertex, chain_of_curves
from src.utils.graph_dsl import GraphDocument, SurfaceContext, write_document

logger = logging.getLogger(__name__)


def _w(vertex_id: str, selfint: int = -2) -> Vertex:
    return Vertex(vertex_id, Color.WHITE, selfint)


def _c(vertex_id: str) -> Vertex:
    return Vertex(vertex_id, Color.BLACK, -1)


def appendix_ic(m: int) -> GraphDocument:
    """
    Fila inferior w1 - w2 - w3(−3) - k… - w5(−3) - w6, con (m−7)/2 curvas k.
    u3 (−(m+3)/2) cuelga de w3 y u5 de w5; C_1 - w2, C_2 - u3, C_3 - u5.

    Raises:
        InvalidParams: si m no es impar o m < 7
    """
    if m < 7 or m % 2 == 0:
        raise InvalidParams(f"El ejemplo IC requiere m impar >= 7, recibido {m}")

    middle, _ = chain_of_curves("k", [-2] * ((m - 7) // 2))
    bottom = [_w("w1"), _w("w2"), _w("w3", -3)] + middle + [_w("w5", -3), _w("w6")]
    row = [v.id for v in bottom]
    vertices = bottom + [_w("u3", -((m + 3) // 2)), _w("u5"), _c("C1"), _c("C2"), _c("C3")]
    edges = list(zip(row, row[1:])) + [
        ("u3", "w3"),
        ("u5", "w5"),
        ("C1", "w2"),
        ("C2", "u3"),
        ("C3", "u5"),
    ]
    return GraphDocument(SurfaceContext.SECTION, DualGraph(vertices, edges), f"IC + k1A + k1A, m={m}")


def appendix_iib() -> GraphDocument:
    """a1(−3) - a2(−4) - a3 - a4 - a5; d2(−3) en a2, d3 en a3; C_2 - d2, C_1 - d3."""
    vertices = [
        _w("a1", -3),
        _w("a2", -4),
        _w("a3"),
        _w("a4"),
        _w("a5"),
        _w("d2", -3),
        _w("d3"),
        _c("C1"),
        _c("C2"),
    ]
    edges = [
        ("a1", "a2"),
        ("a2", "a3"),
        ("a3", "a4"),
        ("a4", "a5"),
        ("a2", "d2"),
        ("a3", "d3"),
        ("C2", "d2"),
        ("C1", "d3"),
    ]
    return GraphDocument(SurfaceContext.SECTION, DualGraph(vertices, edges), "IIB + IIA")


def appendix_cd3() -> GraphDocument:
    """e1 - C_1 - f1(−3) - f2 - f3(−3) - C_2, y f2 - g(−3) - C_3."""
    vertices = [_w("e1"), _w("f1", -3), _w("f2"), _w("f3", -3), _w("g", -3), _c("C1"), _c("C2"), _c("C3")]
    edges = [
        ("e1", "C1"),
        ("C1", "f1"),
        ("f1", "f2"),
        ("f2", "f3"),
        ("f3", "C2"),
        ("f2", "g"),
        ("g", "C3"),
    ]
    return GraphDocument(SurfaceContext.SECTION, DualGraph(vertices, edges), "cD/3 + cD/3 + cD/3")


FIXTURE_FILES = {
    "appendix_a2_ic_m9.graph": lambda: appendix_ic(9),
    "appendix_a3_iib.graph": appendix_iib,
    "appendix_a4_cd3.graph": appendix_cd3,
}


def write_fixtures(directory: str) -> List[str]:
    """Escribe los ficheros de ejemplo en el directorio indicado."""
    os.makedirs(directory, exist_ok=True)
    written = []
    for filename, build in FIXTURE_FILES.items():
        path = write_document(build(), os.path.join(directory, filename))
        logger.info(f"✅ Fixture escrito: {path}")
        written.append(path)
    return written
