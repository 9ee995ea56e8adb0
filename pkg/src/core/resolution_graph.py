#!/usr/bin/env python3
"""
Grafo dual de una resolución y operaciones de teoría de intersección.

Convenciones:
    - Vértice blanco: curva excepcional E_i de la resolución mínima.
    - Vértice negro: componente de la curva central C.
    - Todas las curvas son racionales lisas (género 0), así que la adjunción
      se reduce a K·E = -2 - E².
    - Las filas de cualquier matriz siguen el orden lexicográfico de los ids.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from src.core.errors import InvalidGraph, NotBlack, NotContractible, UnknownVertex
from src.core.rational_core import (
    Definiteness,
    SymMatrix,
    definiteness,
    determinant as matrix_determinant,
    solve_linear,
)

logger = logging.getLogger(__name__)


class Color(str, Enum):
    WHITE = "white"
    BLACK = "black"


@dataclass(frozen=True)
class Vertex:
    id: str
    color: Color
    self_intersection: int

    @property
    def is_white(self) -> bool:
        return self.color is Color.WHITE

    @property
    def is_black(self) -> bool:
        return self.color is Color.BLACK


class DualGraph:
    """
    Grafo dual simple (sin lazos ni aristas múltiples), inmutable tras construirse.

    Internamente es un networkx.Graph congelado con los atributos
    'color' y 'selfint' en cada nodo.
    """

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[Tuple[str, str]] = ()):
        graph = nx.Graph()
        for v in vertices:
            if not isinstance(v.color, Color):
                raise InvalidGraph(f"Color inválido en {v.id}: {v.color!r}")
            if v.id in graph:
                raise InvalidGraph(f"Id de vértice duplicado: {v.id}")
            if v.self_intersection > -1:
                raise InvalidGraph(
                    f"Autointersección {v.self_intersection} en {v.id}; debe ser <= -1"
                )
            graph.add_node(v.id, color=v.color, selfint=int(v.self_intersection))

        for a, b in edges:
            if a not in graph:
                raise UnknownVertex(a)
            if b not in graph:
                raise UnknownVertex(b)
            if a == b:
                raise InvalidGraph(f"Lazo en {a}")
            if graph.has_edge(a, b):
                raise InvalidGraph(f"Arista múltiple {a}-{b}")
            graph.add_edge(a, b)

        self._graph = nx.freeze(graph)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "DualGraph":
        vertices = [
            Vertex(node, Color(data["color"]), data["selfint"]) for node, data in graph.nodes(data=True)
        ]
        return cls(vertices, graph.edges())

    @property
    def nx_graph(self) -> nx.Graph:
        return self._graph

    @property
    def vertex_ids(self) -> List[str]:
        return sorted(self._graph.nodes)

    @property
    def vertices(self) -> List[Vertex]:
        return [self.vertex(v) for v in self.vertex_ids]

    @property
    def edges(self) -> List[Tuple[str, str]]:
        return sorted(tuple(sorted(e)) for e in self._graph.edges())

    def __len__(self) -> int:
        return self._graph.number_of_nodes()

    def __contains__(self, vertex_id: str) -> bool:
        return vertex_id in self._graph

    def vertex(self, vertex_id: str) -> Vertex:
        if vertex_id not in self._graph:
            raise UnknownVertex(vertex_id)
        data = self._graph.nodes[vertex_id]
        return Vertex(vertex_id, data["color"], data["selfint"])

    def whites(self) -> List[str]:
        return [v for v in self.vertex_ids if self._graph.nodes[v]["color"] is Color.WHITE]

    def blacks(self) -> List[str]:
        return [v for v in self.vertex_ids if self._graph.nodes[v]["color"] is Color.BLACK]

    def neighbors(self, vertex_id: str) -> List[str]:
        if vertex_id not in self._graph:
            raise UnknownVertex(vertex_id)
        return sorted(self._graph.neighbors(vertex_id))

    def valency(self, vertex_id: str) -> int:
        if vertex_id not in self._graph:
            raise UnknownVertex(vertex_id)
        return self._graph.degree(vertex_id)

    def has_edge(self, a: str, b: str) -> bool:
        return self._graph.has_edge(a, b)

    def subgraph(self, ids: Iterable[str]) -> "DualGraph":
        ids = list(ids)
        for v in ids:
            if v not in self._graph:
                raise UnknownVertex(v)
        return DualGraph.from_networkx(self._graph.subgraph(ids))

    def relabel(self, mapping: Mapping[str, str]) -> "DualGraph":
        return DualGraph.from_networkx(nx.relabel_nodes(nx.Graph(self._graph), dict(mapping), copy=True))

    def is_isomorphic(self, other: "DualGraph") -> bool:
        """Isomorfismo que respeta color y autointersección."""
        return nx.is_isomorphic(self._graph, other._graph, node_match=_same_label)

    def __repr__(self) -> str:
        return f"DualGraph(whites={len(self.whites())}, blacks={len(self.blacks())}, edges={len(self.edges)})"


def _same_label(a: Dict, b: Dict) -> bool:
    return a["color"] == b["color"] and a["selfint"] == b["selfint"]


class ADEFamily(str, Enum):
    A = "A"
    D = "D"
    E = "E"


@dataclass(frozen=True)
class ADEType:
    family: ADEFamily
    rank: int

    @property
    def name(self) -> str:
        return f"{self.family.value}_{self.rank}"

    def __str__(self) -> str:
        return self.name


def ade_determinant(t: ADEType) -> int:
    """|det| de la matriz de Cartan: n+1, 4, 3, 2, 1."""
    if t.family is ADEFamily.A:
        return t.rank + 1
    if t.family is ADEFamily.D:
        return 4
    return {6: 3, 7: 2, 8: 1}[t.rank]


@dataclass(frozen=True)
class Codiscrepancy:
    """Coeficientes θ_i de Θ, con K_{H̃} = μ*K_H − Θ."""

    coefficients: Dict[str, Fraction] = field(default_factory=dict)

    @property
    def du_val(self) -> bool:
        return all(theta == 0 for theta in self.coefficients.values())

    @property
    def log_terminal(self) -> bool:
        return all(0 <= theta < 1 for theta in self.coefficients.values())

    def __getitem__(self, vertex_id: str) -> Fraction:
        return self.coefficients[vertex_id]


def intersection_matrix(g: DualGraph, subset: Optional[Iterable[str]] = None) -> SymMatrix:
    """
    Matriz de intersección de los vértices indicados (por defecto, todos).

    Diagonal = autointersecciones; fuera de la diagonal 1 si hay arista.
    Orden de filas = ids ordenados.
    """
    ids = g.vertex_ids if subset is None else sorted(set(subset))
    for v in ids:
        if v not in g:
            raise UnknownVertex(v)
    index = {v: i for i, v in enumerate(ids)}
    entries = {(i, i): g.vertex(v).self_intersection for v, i in index.items()}
    for a, b in g.edges:
        if a in index and b in index:
            entries[(index[a], index[b])] = 1
    return SymMatrix.from_entries(len(ids), entries)


def contractibility(g: DualGraph) -> Definiteness:
    """Definitud de la matriz completa (blancos y negros)."""
    if len(g) == 0:
        raise InvalidGraph("El grafo está vacío")
    return definiteness(intersection_matrix(g))


def determinant(g: DualGraph) -> int:
    """|det| de la matriz de intersección completa."""
    return abs(int(matrix_determinant(intersection_matrix(g))))


def _white_system(g: DualGraph) -> Tuple[List[str], SymMatrix]:
    whites = g.whites()
    matrix = intersection_matrix(g, whites)
    result = definiteness(matrix)
    if not result.is_negative_definite:
        raise NotContractible(
            f"La parte blanca no es definida negativa ({result})", kind=result.kind.value
        )
    return whites, matrix


def codiscrepancy(g: DualGraph) -> Codiscrepancy:
    """
    Resuelve Σ_j θ_j (E_j·E_i) = 2 + E_i² para cada vértice blanco i.

    Raises:
        NotContractible: si la parte blanca no es definida negativa
    """
    whites, matrix = _white_system(g)
    if not whites:
        return Codiscrepancy({})
    rhs = [2 + g.vertex(w).self_intersection for w in whites]
    theta = solve_linear(matrix, rhs)
    logger.debug(f"Codiscrepancia resuelta sobre {len(whites)} vértices blancos")
    return Codiscrepancy(dict(zip(whites, theta)))


def _require_black(g: DualGraph, vertex_id: str) -> Vertex:
    v = g.vertex(vertex_id)
    if not v.is_black:
        raise NotBlack(vertex_id)
    return v


def anticanonical_degree(
    g: DualGraph, c: str, theta: Optional[Codiscrepancy] = None
) -> Fraction:
    """
    −K_H·C = (2 + C̃²) − Θ·C̃.

    Args:
        g: Grafo dual
        c: Id de un vértice negro
        theta: Codiscrepancia ya calculada (opcional, se recalcula si falta)
    """
    v = _require_black(g, c)
    theta = theta if theta is not None else codiscrepancy(g)
    contribution = sum(
        (theta[w] for w in g.neighbors(c) if w in theta.coefficients), Fraction(0)
    )
    return Fraction(2 + v.self_intersection) - contribution


def pullback_coefficients(g: DualGraph, c: str) -> Dict[str, Fraction]:
    """
    Coeficientes γ_j de μ*C = C̃ + Σ γ_j E_j, con (μ*C)·E_i = 0 para todo blanco i.
    """
    _require_black(g, c)
    whites, matrix = _white_system(g)
    if not whites:
        return {}
    rhs = [-1 if g.has_edge(c, w) else 0 for w in whites]
    return dict(zip(whites, solve_linear(matrix, rhs)))


def pushforward_product(g: DualGraph, c1: str, c2: str) -> Fraction:
    """
    Intersección C_1·C_2 en la superficie singular: (μ*C_1)·C̃_2.

    Con c1 == c2 devuelve C² en la superficie singular.
    """
    v2 = _require_black(g, c2)
    gamma = pullback_coefficients(g, c1)
    if c1 == c2:
        base = Fraction(v2.self_intersection)
    else:
        base = Fraction(1 if g.has_edge(c1, c2) else 0)
    return base + sum((gamma[w] for w in g.neighbors(c2) if w in gamma), Fraction(0))


def _arm_lengths(tree: nx.Graph, center: str) -> List[int]:
    lengths = []
    for start in tree.neighbors(center):
        length, prev, cur = 1, center, start
        while True:
            nxt = [n for n in tree.neighbors(cur) if n != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    return sorted(lengths)


def ade_classify(g: DualGraph) -> Optional[ADEType]:
    """
    Reconoce diagramas de Dynkin A, D, E de curvas (−2).

    El camino de 3 vértices se devuelve como A_3 (D_3 = A_3).
    """
    graph = g.nx_graph
    n = graph.number_of_nodes()
    if n == 0 or not nx.is_tree(graph):
        return None
    if any(g.vertex(v).self_intersection != -2 for v in graph.nodes):
        return None

    degrees = dict(graph.degree())
    if max(degrees.values()) > 3:
        return None
    branch = [v for v, d in degrees.items() if d == 3]
    if not branch:
        return ADEType(ADEFamily.A, n)
    if len(branch) > 1:
        return None

    arms = _arm_lengths(graph, branch[0])
    if arms[0] == 1 and arms[1] == 1:
        return ADEType(ADEFamily.D, n)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return ADEType(ADEFamily.E, n)
    return None


@dataclass
class WhiteComponent:
    index: int
    graph: DualGraph
    ade: Optional[ADEType]

    @property
    def vertex_ids(self) -> List[str]:
        return self.graph.vertex_ids


def white_components(g: DualGraph) -> List[WhiteComponent]:
    """
    Componentes conexas del subgrafo blanco, ordenadas por su menor id.
    """
    white = g.nx_graph.subgraph(g.whites())
    parts = sorted((sorted(c) for c in nx.connected_components(white)), key=lambda c: c[0])
    result = []
    for index, ids in enumerate(parts):
        sub = g.subgraph(ids)
        result.append(WhiteComponent(index, sub, ade_classify(sub)))
    return result


def path_order(g: DualGraph) -> Optional[List[str]]:
    """
    Si el grafo es un camino, devuelve sus vértices de un extremo a otro
    empezando por el extremo de menor id; si no, None.
    """
    graph = g.nx_graph
    if len(g) == 0 or not nx.is_tree(graph):
        return None
    if len(g) == 1:
        return list(graph.nodes)
    ends = sorted(v for v, d in graph.degree() if d == 1)
    if len(ends) != 2 or max(d for _, d in graph.degree()) > 2:
        return None
    return nx.shortest_path(graph, ends[0], ends[1])


def chain_of_curves(
    prefix: str, self_intersections: Sequence[int], color: Color = Color.WHITE
) -> Tuple[List[Vertex], List[Tuple[str, str]]]:
    """
    Vértices y aristas de una cadena lineal. El índice se rellena con ceros a
    un ancho fijo (tres cifras como mínimo) para que el orden lexicográfico de
    los ids coincida con el de la cadena.
    """
    width = max(3, len(str(len(self_intersections))))
    ids = [f"{prefix}{i:0{width}d}" for i in range(1, len(self_intersections) + 1)]
    vertices = [Vertex(v, color, s) for v, s in zip(ids, self_intersections)]
    edges = list(zip(ids, ids[1:]))
    return vertices, edges