#!/usr/bin/env python3
"""
Exportación de grafos duales al lenguaje DOT de Graphviz.

Blancos: círculo hueco. Negros: círculo relleno. La etiqueta muestra la
autointersección; el orden de nodos y aristas es el lexicográfico de los ids.
"""

import logging

from src.core.resolution_graph import Color
from src.utils.graph_dsl import GraphDocument

logger = logging.getLogger(__name__)

NODE_STYLE = {
    Color.WHITE: 'shape=circle, style=solid, fillcolor=white',
    Color.BLACK: 'shape=circle, style=filled, fillcolor=black, fontcolor=white',
}


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(doc: GraphDocument) -> str:
    """Texto DOT determinista del documento (un grafo vacío sigue siendo DOT válido)."""
    g = doc.graph
    lines = ["graph dual {"]
    if doc.title:
        lines.append(f"  label={_quote(doc.title)};")
    lines.append(f"  // surface {doc.context.value}")
    for v in g.vertices:
        lines.append(f"  {_quote(v.id)} [label={_quote(str(v.self_intersection))}, {NODE_STYLE[v.color]}];")
    for a, b in g.edges:
        lines.append(f"  {_quote(a)} -- {_quote(b)};")
    lines.append("}")
    logger.debug(f"DOT generado: {len(g)} nodos, {len(g.edges)} aristas")
    return "\n".join(lines) + "\n"
