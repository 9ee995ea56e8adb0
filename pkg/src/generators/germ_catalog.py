#!/usr/bin/env python3
"""
Catálogo de grafos duales del elefante general para cada tipo de germen
(IC, IIB, kAD, k3A, k2A) y motor de pegado de configuraciones.

Todos los vértices son (−2): la contracción D → D_Z es crepante.
El criterio de compatibilidad es puramente combinatorio: la configuración
pegada debe ser un diagrama de Dynkin A, D o E.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from networkx.algorithms.isomorphism import GraphMatcher

from config.config import DEFAULT_MAX_RANK
from src.core.errors import GlueError, InvalidParams
from src.core.resolution_graph import (
    ADEType,
    Color,
    DualGraph,
    Vertex,
    WhiteComponent,
    ade_classify,
    chain_of_curves,
    path_order,
    white_components,
)

logger = logging.getLogger(__name__)

SCOPE_NOTE = (
    "Sólo se comprueba el criterio de Dynkin sobre el grafo; restricciones que "
    "dependen de datos no combinatorios (primitividad, tipos locales IIA/II∨) no se verifican."
)


class GermKind(str, Enum):
    IC = "IC"
    IIB = "IIB"
    KAD = "kAD"
    K3A = "k3A"
    K2A = "k2A"


NON_CHAIN_KINDS = (GermKind.IC, GermKind.IIB, GermKind.KAD, GermKind.K3A)


@dataclass(frozen=True)
class GermTemplateSpec:
    kind: GermKind
    m: Optional[int] = None
    k: Optional[int] = None
    n: Optional[int] = None
    l: Optional[int] = None

    def params(self) -> Dict[str, int]:
        return {key: value for key, value in (("m", self.m), ("k", self.k), ("n", self.n), ("l", self.l)) if value is not None}

    def __str__(self) -> str:
        inner = ", ".join(f"{key}={value}" for key, value in self.params().items())
        return f"{self.kind.value}({inner})"


@dataclass(frozen=True)
class ElephantGraph:
    graph: DualGraph
    marked_black: Tuple[str, ...]


@dataclass(frozen=True)
class ParamBounds:
    max_m: int = 9
    max_k: int = 2
    max_n: int = 5
    max_l: int = 3
    max_rank: int = DEFAULT_MAX_RANK


def _validate(spec: GermTemplateSpec) -> None:
    kind, m, k, n, l = spec.kind, spec.m, spec.k, spec.n, spec.l
    if kind is GermKind.IC:
        if m is None or m < 5 or m % 2 == 0:
            raise InvalidParams(f"IC requiere m impar >= 5: {spec}")
    elif kind is GermKind.IIB:
        if spec.params() and spec.params() != {"m": 4, "k": 3}:
            raise InvalidParams(f"IIB no admite parámetros (k=3, m=4 fijos): {spec}")
    elif kind in (GermKind.KAD, GermKind.K3A):
        if (k or 1) != 1 or (n or 2) != 2:
            raise InvalidParams(f"{kind.value} sólo se genera con k=1, n=2: {spec}")
        if m is None or m < 3 or m % 2 == 0:
            raise InvalidParams(f"{kind.value} requiere m impar >= 3: {spec}")
        if kind is GermKind.KAD and (l is None or l < 1):
            raise InvalidParams(f"kAD requiere l >= 1: {spec}")
    elif kind is GermKind.K2A:
        if None in (m, k, n, l) or m < 2 or n < 2 or k < 1 or l < 1:
            raise InvalidParams(f"k2A requiere m, n >= 2 y k, l >= 1: {spec}")


def template_rank(spec: GermTemplateSpec) -> int:
    """Número total de vértices del diagrama."""
    _validate(spec)
    kind = spec.kind
    if kind is GermKind.IC:
        return spec.m
    if kind is GermKind.IIB:
        return 6
    if kind is GermKind.KAD:
        return spec.m + 2 * spec.l + 1
    if kind is GermKind.K3A:
        return spec.m + 2
    return spec.k * spec.m + spec.l * spec.n - 1


def _whites(prefix: str, count: int) -> Tuple[List[Vertex], List[Tuple[str, str]]]:
    return chain_of_curves(prefix, [-2] * count, Color.WHITE)


def _white(vertex_id: str) -> Vertex:
    return Vertex(vertex_id, Color.WHITE, -2)


def _black(vertex_id: str = "C") -> Vertex:
    return Vertex(vertex_id, Color.BLACK, -2)


@lru_cache(maxsize=512)
def template(spec: GermTemplateSpec) -> ElephantGraph:
    """
    Genera el diagrama del tipo indicado.

    IC:  w_1 … w_{m−1}, negro pegado a w_{m−2}
    IIB: w_1 … w_4, w_5 - w_3, negro - w_4
    kAD: u_1 … u_{m−1} - negro - v_1 … v_{2l−2} - f con dos puntas blancas
    k3A: u_1 … u_{m−1} - negro con dos puntas blancas
    k2A: a_1 … a_{km−1} - negro - b_1 … b_{ln−1}

    Raises:
        InvalidParams: fuera de los parámetros admitidos
    """
    _validate(spec)
    kind = spec.kind
    black = _black()

    if kind is GermKind.IC:
        vertices, edges = _whites("w", spec.m - 1)
        ids = [v.id for v in vertices]
        edges.append((black.id, ids[-2]))
        vertices.append(black)

    elif kind is GermKind.IIB:
        vertices, edges = _whites("w", 4)
        ids = [v.id for v in vertices]
        tip = _white("w005")
        vertices += [tip, black]
        edges += [(tip.id, ids[2]), (black.id, ids[3])]

    elif kind is GermKind.KAD:
        u, u_edges = _whites("u", spec.m - 1)
        v, v_edges = _whites("v", 2 * spec.l - 2)
        fork, tips = _white("f"), [_white("t1"), _white("t2")]
        vertices = u + [black] + v + [fork] + tips
        spine = [x.id for x in u] + [black.id] + [x.id for x in v] + [fork.id]
        edges = u_edges + v_edges + list(zip(spine, spine[1:])) + [(fork.id, t.id) for t in tips]
        edges = sorted(set(tuple(sorted(e)) for e in edges))

    elif kind is GermKind.K3A:
        u, edges = _whites("u", spec.m - 1)
        tips = [_white("t1"), _white("t2")]
        vertices = u + [black] + tips
        edges += [(u[-1].id, black.id)] + [(black.id, t.id) for t in tips]

    else:
        a, a_edges = _whites("a", spec.k * spec.m - 1)
        b, b_edges = _whites("b", spec.l * spec.n - 1)
        vertices = a + [black] + b
        edges = a_edges + b_edges + [(a[-1].id, black.id), (black.id, b[0].id)]

    graph = DualGraph(vertices, edges)
    logger.debug(f"Plantilla {spec}: {len(graph)} vértices")
    return ElephantGraph(graph, (black.id,))


def expected_whole_type(spec: GermTemplateSpec) -> str:
    """Tipo de Dynkin esperado del diagrama completo."""
    kind = spec.kind
    if kind is GermKind.IC:
        return f"D_{spec.m}"
    if kind is GermKind.IIB:
        return "E_6"
    if kind is GermKind.KAD:
        return f"D_{spec.m + 2 * spec.l + 1}"
    if kind is GermKind.K3A:
        return f"D_{spec.m + 2}"
    return f"A_{spec.k * spec.m + spec.l * spec.n - 1}"


@dataclass
class ElephantCheck:
    is_dynkin: bool
    type: Optional[ADEType]
    valency3_count: int
    has_valency_ge4: bool
    scope_note: str = SCOPE_NOTE

    def to_dict(self) -> Dict:
        return {
            "is_dynkin": self.is_dynkin,
            "type": self.type.name if self.type else None,
            "valency3_count": self.valency3_count,
            "has_valency_ge4": self.has_valency_ge4,
            "scope_note": self.scope_note,
        }


def check_elephant(e: ElephantGraph) -> ElephantCheck:
    """Clasificación ADE del grafo entero más estadísticas de valencia."""
    g = e.graph
    valencies = [g.valency(v) for v in g.vertex_ids]
    ade = ade_classify(g) if len(g) else None
    return ElephantCheck(
        is_dynkin=ade is not None,
        type=ade,
        valency3_count=sum(1 for d in valencies if d == 3),
        has_valency_ge4=any(d >= 4 for d in valencies),
    )


def _component(e: ElephantGraph, index: int) -> WhiteComponent:
    comps = white_components(e.graph)
    if not 0 <= index < len(comps):
        raise GlueError(GlueError.UNKNOWN_COMPONENT, f"No existe la componente blanca {index}")
    return comps[index]


def component_matchings(
    e1: ElephantGraph, comp1: int, e2: ElephantGraph, comp2: int
) -> List[Dict[str, str]]:
    """
    Todos los isomorfismos (que respetan autointersección) de la componente
    comp2 de e2 sobre la componente comp1 de e1, en orden determinista.
    """
    return _matchings(_component(e1, comp1), _component(e2, comp2))


def _matchings(c1: WhiteComponent, c2: WhiteComponent) -> List[Dict[str, str]]:
    if len(c1.graph) != len(c2.graph) or len(c1.graph.edges) != len(c2.graph.edges):
        return []
    matcher = GraphMatcher(
        c2.graph.nx_graph, c1.graph.nx_graph, node_match=lambda a, b: a["selfint"] == b["selfint"]
    )
    found = {tuple(sorted(m.items())) for m in matcher.isomorphisms_iter()}
    return [dict(m) for m in sorted(found)]


def _path_matching(c1: WhiteComponent, c2: WhiteComponent, flip: bool) -> Dict[str, str]:
    order1, order2 = path_order(c1.graph), path_order(c2.graph)
    if order1 is None or order2 is None or len(order1) != len(order2):
        raise GlueError(GlueError.NOT_ISOMORPHIC, "Las componentes no son caminos de la misma longitud")
    if flip:
        order2 = list(reversed(order2))
    for a, b in zip(order1, order2):
        if c1.graph.vertex(a).self_intersection != c2.graph.vertex(b).self_intersection:
            raise GlueError(GlueError.NOT_ISOMORPHIC, f"Autointersecciones distintas en {a} / {b}")
    return dict(zip(order2, order1))


def glue(
    e1: ElephantGraph,
    e2: ElephantGraph,
    comp1: int,
    comp2: int,
    flip: bool = False,
    matching: Optional[Dict[str, str]] = None,
) -> ElephantGraph:
    """
    Identifica la componente blanca comp2 de e2 con la comp1 de e1.

    Para caminos, la identificación alinea extremos (el de menor id con el de
    menor id) y flip invierte la orientación de e2. Para otras formas hay que
    dar matching explícito (id de e2 -> id de e1) o se toma el primer isomorfismo.
    Los vértices de e2 que no se identifican conservan su id salvo colisión,
    en cuyo caso se les añade un apóstrofo.

    Raises:
        GlueError: NotIsomorphic o UnknownComponent
    """
    c1, c2 = _component(e1, comp1), _component(e2, comp2)
    if len(c1.graph) != len(c2.graph):
        raise GlueError(
            GlueError.NOT_ISOMORPHIC,
            f"Tamaños distintos: {len(c1.graph)} y {len(c2.graph)} vértices",
        )

    if matching is None:
        if path_order(c1.graph) is not None and path_order(c2.graph) is not None:
            matching = _path_matching(c1, c2, flip)
        else:
            options = _matchings(c1, c2)
            if not options:
                raise GlueError(GlueError.NOT_ISOMORPHIC, "Las componentes no son isomorfas")
            matching = options[0]
    else:
        _check_matching(c1, c2, matching)

    return _identify(e1, e2, matching)


def _identify(e1: ElephantGraph, e2: ElephantGraph, matching: Dict[str, str]) -> ElephantGraph:
    g1, g2 = e1.graph, e2.graph
    rename: Dict[str, str] = dict(matching)
    taken = set(g1.vertex_ids)
    for v in g2.vertex_ids:
        if v in rename:
            continue
        new = v
        while new in taken:
            new += "'"
        rename[v] = new
        taken.add(new)

    vertices = list(g1.vertices)
    for v in g2.vertices:
        if v.id not in matching:
            vertices.append(Vertex(rename[v.id], v.color, v.self_intersection))
    edges = {tuple(sorted(e)) for e in g1.edges}
    edges |= {tuple(sorted((rename[a], rename[b]))) for a, b in g2.edges}

    result = DualGraph(vertices, sorted(edges))
    marked = tuple(e1.marked_black) + tuple(rename[b] for b in e2.marked_black)
    return ElephantGraph(result, marked)


def _check_matching(c1: WhiteComponent, c2: WhiteComponent, matching: Dict[str, str]) -> None:
    ids1, ids2 = set(c1.vertex_ids), set(c2.vertex_ids)
    if set(matching) != ids2 or set(matching.values()) != ids1:
        raise GlueError(GlueError.NOT_ISOMORPHIC, "La identificación no es una biyección entre componentes")
    for a, b in matching.items():
        if c2.graph.vertex(a).self_intersection != c1.graph.vertex(b).self_intersection:
            raise GlueError(GlueError.NOT_ISOMORPHIC, f"Autointersecciones distintas en {a} / {b}")
    for a, b in c2.graph.edges:
        if not c1.graph.has_edge(matching[a], matching[b]):
            raise GlueError(GlueError.NOT_ISOMORPHIC, f"La arista {a}-{b} no se conserva")
    if len(c1.graph.edges) != len(c2.graph.edges):
        raise GlueError(GlueError.NOT_ISOMORPHIC, "Número de aristas distinto")


def _attachments(e: ElephantGraph, comp: WhiteComponent) -> List[str]:
    ids = set(comp.vertex_ids)
    return [w for b in e.marked_black for w in e.graph.neighbors(b) if w in ids]


def _distinct_ends(
    e1: ElephantGraph, c1: WhiteComponent, e2: ElephantGraph, c2: WhiteComponent, matching: Dict[str, str]
) -> bool:
    """Las curvas centrales de cada lado tocan vértices distintos de la componente común."""
    if len(c1.graph) == 1:
        return True
    side1 = set(_attachments(e1, c1))
    side2 = {matching[w] for w in _attachments(e2, c2)}
    return not (side1 & side2)


def iter_specs(kind: GermKind, bounds: ParamBounds) -> Iterator[GermTemplateSpec]:
    """Todas las especificaciones válidas del tipo dentro de las cotas."""
    candidates: List[GermTemplateSpec] = []
    if kind is GermKind.IC:
        candidates = [GermTemplateSpec(kind, m=m) for m in range(5, bounds.max_m + 1, 2)]
    elif kind is GermKind.IIB:
        candidates = [GermTemplateSpec(kind)]
    elif kind is GermKind.KAD:
        candidates = [
            GermTemplateSpec(kind, m=m, k=1, n=2, l=l)
            for m in range(3, bounds.max_m + 1, 2)
            for l in range(1, bounds.max_l + 1)
        ]
    elif kind is GermKind.K3A:
        candidates = [GermTemplateSpec(kind, m=m, k=1, n=2) for m in range(3, bounds.max_m + 1, 2)]
    else:
        candidates = [
            GermTemplateSpec(kind, m=m, k=k, n=n, l=l)
            for m, k, n, l in product(
                range(2, bounds.max_m + 1),
                range(1, bounds.max_k + 1),
                range(2, bounds.max_n + 1),
                range(1, bounds.max_l + 1),
            )
        ]
    for spec in candidates:
        if template_rank(spec) <= bounds.max_rank:
            yield spec


@dataclass(frozen=True)
class GluedConfiguration:
    spec_a: GermTemplateSpec
    spec_b: GermTemplateSpec
    comp_a: int
    comp_b: int
    matching: Tuple[Tuple[str, str], ...]
    elephant: ElephantGraph = field(compare=False)
    type: ADEType = field(compare=False)

    def sort_key(self) -> Tuple:
        return (str(self.spec_a), str(self.spec_b), self.comp_a, self.comp_b, self.matching)


def _glue_pair(args: Tuple[GermTemplateSpec, GermTemplateSpec, bool]) -> List[GluedConfiguration]:
    spec_a, spec_b, distinct_ends = args
    ea, eb = template(spec_a), template(spec_b)
    comps_a, comps_b = white_components(ea.graph), white_components(eb.graph)
    found = []
    for ca, cb in product(comps_a, comps_b):
        for matching in _matchings(ca, cb):
            if distinct_ends and not _distinct_ends(ea, ca, eb, cb, matching):
                continue
            glued = _identify(ea, eb, matching)
            check = check_elephant(glued)
            if check.is_dynkin:
                found.append(
                    GluedConfiguration(
                        spec_a, spec_b, ca.index, cb.index, tuple(sorted(matching.items())), glued, check.type
                    )
                )
    return found


def enumerate_compatible(
    kind_a: GermKind,
    kind_b: GermKind,
    bounds: ParamBounds = ParamBounds(),
    distinct_ends: bool = True,
    workers: Optional[int] = None,
) -> List[GluedConfiguration]:
    """
    Prueba todos los pegados de plantillas de los dos tipos dentro de las cotas
    y devuelve los que siguen siendo diagramas de Dynkin.

    Args:
        kind_a, kind_b: Tipos de germen
        bounds: Cotas de parámetros y de rango de cada plantilla
        distinct_ends: Exige que las curvas centrales toquen vértices distintos
            de la componente común (salvo si tiene un solo vértice)
        workers: Procesos en paralelo

    Returns:
        Configuraciones compatibles, ordenadas de forma determinista
    """
    pairs = [
        (a, b, distinct_ends)
        for a in iter_specs(GermKind(kind_a), bounds)
        for b in iter_specs(GermKind(kind_b), bounds)
    ]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_glue_pair, pairs))
    else:
        chunks = [_glue_pair(p) for p in pairs]

    result = sorted((c for chunk in chunks for c in chunk), key=GluedConfiguration.sort_key)
    logger.info(f"📊 {GermKind(kind_a).value}×{GermKind(kind_b).value}: {len(pairs)} pares de plantillas, {len(result)} pegados compatibles")
    return result
