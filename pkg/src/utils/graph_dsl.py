#!/usr/bin/env python3
"""
Lector y escritor del lenguaje de descripción de grafos duales.

Formato (una sentencia por línea, '#' inicia un comentario):

    surface <elephant|section>
    vertex <id> <white|black> [selfint=<entero negativo>]
    edge <id> <id>

Autointersecciones por defecto según el contexto:
    elephant: negro −2, blanco −2
    section:  negro −1, blanco −2
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from src.core.errors import ParseError
from src.core.resolution_graph import Color, DualGraph, Vertex

logger = logging.getLogger(__name__)


class SurfaceContext(str, Enum):
    ELEPHANT = "elephant"
    SECTION = "section"


DEFAULT_SELFINT: Dict[SurfaceContext, Dict[Color, int]] = {
    SurfaceContext.ELEPHANT: {Color.BLACK: -2, Color.WHITE: -2},
    SurfaceContext.SECTION: {Color.BLACK: -1, Color.WHITE: -2},
}


@dataclass(frozen=True)
class GraphDocument:
    context: SurfaceContext
    graph: DualGraph
    title: Optional[str] = None


def _parse_selfint(token: str, line: int) -> int:
    key, _, value = token.partition("=")
    if key != "selfint" or not value:
        raise ParseError(line, f"Atributo desconocido: {token}")
    try:
        number = int(value)
    except ValueError:
        raise ParseError(line, f"selfint debe ser un entero: {value}")
    if number > -1:
        raise ParseError(line, f"selfint debe ser negativo: {number}")
    return number


def parse(text: str) -> GraphDocument:
    """
    Convierte el texto del DSL en un GraphDocument.

    Raises:
        ParseError: con el número de línea del problema
    """
    context: Optional[SurfaceContext] = None
    title: Optional[str] = None
    declared: Dict[str, Tuple[Color, Optional[int], int]] = {}
    edges: List[Tuple[str, str, int]] = []
    seen_edges: Dict[frozenset, int] = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        if title is None and raw.strip().startswith("# title:"):
            title = raw.split(":", 1)[1].strip()
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword, args = tokens[0], tokens[1:]

        if keyword == "surface":
            if context is not None:
                raise ParseError(number, "Sentencia 'surface' repetida")
            if declared:
                raise ParseError(number, "'surface' debe ir antes de los vértices")
            if len(args) != 1 or args[0] not in {c.value for c in SurfaceContext}:
                raise ParseError(number, "Uso: surface <elephant|section>")
            context = SurfaceContext(args[0])

        elif keyword == "vertex":
            if len(args) not in (2, 3):
                raise ParseError(number, "Uso: vertex <id> <white|black> [selfint=<n>]")
            vid, color = args[0], args[1]
            if color not in {c.value for c in Color}:
                raise ParseError(number, f"Color desconocido: {color}")
            if vid in declared:
                raise ParseError(number, f"Id duplicado: {vid}")
            selfint = _parse_selfint(args[2], number) if len(args) == 3 else None
            declared[vid] = (Color(color), selfint, number)

        elif keyword == "edge":
            if len(args) != 2:
                raise ParseError(number, "Uso: edge <id> <id>")
            a, b = args
            if a == b:
                raise ParseError(number, f"Lazo en {a}")
            key = frozenset((a, b))
            if key in seen_edges:
                raise ParseError(number, f"Arista múltiple {a}-{b} (ya en la línea {seen_edges[key]})")
            seen_edges[key] = number
            edges.append((a, b, number))

        else:
            raise ParseError(number, f"Sentencia desconocida: {keyword}")

    context = context or SurfaceContext.ELEPHANT
    for a, b, number in edges:
        for v in (a, b):
            if v not in declared:
                raise ParseError(number, f"Vértice no declarado: {v}")

    defaults = DEFAULT_SELFINT[context]
    vertices = [
        Vertex(vid, color, selfint if selfint is not None else defaults[color])
        for vid, (color, selfint, _) in declared.items()
    ]
    graph = DualGraph(vertices, [(a, b) for a, b, _ in edges])
    logger.debug(f"Documento leído: {len(vertices)} vértices, {len(edges)} aristas, contexto {context.value}")
    return GraphDocument(context, graph, title)


def render(doc: GraphDocument) -> str:
    """Escribe el documento en el DSL; sólo se anotan las autointersecciones no por defecto."""
    defaults = DEFAULT_SELFINT[doc.context]
    lines = []
    if doc.title:
        lines.append(f"# title: {doc.title}")
    lines.append(f"surface {doc.context.value}")
    for v in doc.graph.vertices:
        suffix = "" if v.self_intersection == defaults[v.color] else f" selfint={v.self_intersection}"
        lines.append(f"vertex {v.id} {v.color.value}{suffix}")
    for a, b in doc.graph.edges:
        lines.append(f"edge {a} {b}")
    return "\n".join(lines) + "\n"


def read_document(path: str) -> GraphDocument:
    """
    Raises:
        ParseError: con línea 0 si el fichero no está en UTF-8
    """
    with open(path, "rb") as handle:
        raw = handle.read()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(0, f"El fichero no está en UTF-8 (byte {e.start})")
    return parse(text)


def write_document(doc: GraphDocument, path: str) -> str:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(render(doc))
    return path
