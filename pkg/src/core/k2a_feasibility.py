#!/usr/bin/env python3
"""
Aritmética de dos componentes k2A que se cortan en un punto P_0.

Cada punto no Gorenstein P_0 = C_1 ∩ C_2, P_1 ∈ C_1, P_2 ∈ C_2 es de clase T
con parámetros (m_i, p_i, a_i). Con la asignación de extremos

    Θ_1·C̃_1 = a_1/m_1,  Θ_0·C̃_1 = (m_0 − a_0)/m_0,
    Θ_0·C̃_2 = a_0/m_0,  Θ_2·C̃_2 = (m_2 − a_2)/m_2

se obtienen fórmulas cerradas para −K·C_i, C_i² y C_1·C_2. Este módulo las
implementa, construye el plumbing correspondiente para contrastarlas con el
cálculo sobre el grafo y recorre el espacio de parámetros en busca de
configuraciones factibles.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Dict, Iterator, List, Optional, Tuple

from src.core.errors import InvalidParams
from src.core.quotient_sing import TParams, hj_expand
from src.core.rational_core import (
    NEGATIVE_DEFINITE,
    OTHER,
    Definiteness,
    negative_semidefinite,
    rational_to_json,
)
from src.core.resolution_graph import Color, DualGraph, Vertex

logger = logging.getLogger(__name__)

QUOTED = "quoted"
SWAPPED = "swapped"


@dataclass(frozen=True)
class K2AConfig:
    """P_0 común, P_1 en C_1, P_2 en C_2."""

    p0: TParams
    p1: TParams
    p2: TParams

    def __post_init__(self):
        for name, t in (("p0", self.p0), ("p1", self.p1), ("p2", self.p2)):
            if t.m < 2:
                raise InvalidParams(f"{name}: el índice debe ser >= 2 (punto no Gorenstein): {t}")

    @classmethod
    def from_tuples(cls, p0: Tuple[int, int, int], p1: Tuple[int, int, int], p2: Tuple[int, int, int]) -> "K2AConfig":
        return cls(TParams(*p0), TParams(*p1), TParams(*p2))

    @property
    def has_index_two_on_both(self) -> bool:
        """Cada curva pasa por un punto de índice 2."""
        return 2 in (self.p0.m, self.p1.m) and 2 in (self.p0.m, self.p2.m)

    def as_tuples(self) -> Tuple[Tuple[int, int, int], ...]:
        return tuple((t.m, t.p, t.a) for t in (self.p0, self.p1, self.p2))

    def __str__(self) -> str:
        return " ".join(f"{t.m},{t.p},{t.a}" for t in (self.p0, self.p1, self.p2))


def _norm(t: TParams) -> int:
    return t.m * t.m * t.p


def deltas(cfg: K2AConfig) -> Tuple[int, int]:
    """δ_1 = a_0 m_1 − a_1 m_0,  δ_2 = a_2 m_0 − a_0 m_2."""
    p0, p1, p2 = cfg.p0, cfg.p1, cfg.p2
    return p0.a * p1.m - p1.a * p0.m, p2.a * p0.m - p0.a * p2.m


def big_deltas(cfg: K2AConfig) -> Tuple[int, int]:
    """Δ_i = m_0² p_0 + m_i² p_i − m_0 p_0 m_i p_i δ_i."""
    d1, d2 = deltas(cfg)
    p0 = cfg.p0
    return tuple(
        _norm(p0) + _norm(pi) - p0.m * p0.p * pi.m * pi.p * di
        for pi, di in ((cfg.p1, d1), (cfg.p2, d2))
    )


def degrees(cfg: K2AConfig) -> Tuple[Fraction, Fraction]:
    """(−K_H·C_1, −K_H·C_2) = (δ_1/(m_0 m_1), δ_2/(m_0 m_2))."""
    d1, d2 = deltas(cfg)
    return Fraction(d1, cfg.p0.m * cfg.p1.m), Fraction(d2, cfg.p0.m * cfg.p2.m)


def self_intersections(cfg: K2AConfig) -> Tuple[Fraction, Fraction, Fraction]:
    """(C_1², C_2², C_1·C_2)."""
    big1, big2 = big_deltas(cfg)
    n0, n1, n2 = _norm(cfg.p0), _norm(cfg.p1), _norm(cfg.p2)
    return Fraction(-big1, n0 * n1), Fraction(-big2, n0 * n2), Fraction(1, n0)


def determinant_margin(cfg: K2AConfig) -> int:
    """Δ_1Δ_2 − m_1²p_1 m_2²p_2."""
    big1, big2 = big_deltas(cfg)
    return big1 * big2 - _norm(cfg.p1) * _norm(cfg.p2)


@dataclass(frozen=True)
class FeasibilityReport:
    delta1: int
    delta2: int
    Delta1: int
    Delta2: int
    deg1: Fraction
    deg2: Fraction
    c11: Fraction
    c22: Fraction
    c12: Fraction
    contractible: bool
    ample: bool
    feasible: bool

    def to_dict(self) -> Dict[str, Any]:
        payload = asdict(self)
        for key in ("deg1", "deg2", "c11", "c22", "c12"):
            payload[key] = rational_to_json(payload[key])
        return payload


def is_feasible(cfg: K2AConfig) -> FeasibilityReport:
    """
    Amplitud (δ_i > 0) y contractibilidad (Δ_i > 0 y Δ_1Δ_2 − m_1²p_1m_2²p_2 ≥ 0).
    """
    d1, d2 = deltas(cfg)
    big1, big2 = big_deltas(cfg)
    deg1, deg2 = degrees(cfg)
    c11, c22, c12 = self_intersections(cfg)
    ample = d1 > 0 and d2 > 0
    contractible = big1 > 0 and big2 > 0 and determinant_margin(cfg) >= 0
    return FeasibilityReport(
        delta1=d1,
        delta2=d2,
        Delta1=big1,
        Delta2=big2,
        deg1=deg1,
        deg2=deg2,
        c11=c11,
        c22=c22,
        c12=c12,
        contractible=contractible,
        ample=ample,
        feasible=ample and contractible,
    )


def expected_contractibility(cfg: K2AConfig) -> Definiteness:
    """
    Clase de definitud del plumbing completo predicha por las fórmulas cerradas.

    La parte blanca (cadenas T) es definida negativa, así que la inercia del
    total es la de la forma de C_1, C_2 empujadas: definida si Δ_1 > 0 y el
    margen es > 0, semidefinita con núcleo 1 si Δ_1 > 0 y el margen es 0.
    """
    big1, _ = big_deltas(cfg)
    margin = determinant_margin(cfg)
    if big1 > 0 and margin > 0:
        return NEGATIVE_DEFINITE
    if big1 > 0 and margin == 0:
        return negative_semidefinite(1)
    return OTHER


@dataclass(frozen=True)
class Plumbing:
    graph: DualGraph
    c1: str
    c2: str


def _chain(prefix: str, t: TParams) -> Tuple[List[Vertex], List[str]]:
    ids = [f"{prefix}{i:03d}" for i in range(1, 1 + len(hj_expand(t.quotient)))]
    vertices = [Vertex(v, Color.WHITE, -b) for v, b in zip(ids, hj_expand(t.quotient))]
    return vertices, ids


def build_plumbing(cfg: K2AConfig, orientation: str = QUOTED) -> Plumbing:
    """
    Cadena(P_1) - C̃_1 - cadena(P_0) - C̃_2 - cadena(P_2), con C̃_i curvas (−1).

    Cada cadena se recorre de su primer extremo (codiscrepancia (m − a)/m) al
    último (a/m), de modo que C̃_1 toca el último extremo de P_1 y el primero
    de P_0, y C̃_2 el último de P_0 y el primero de P_2.

    Con orientation="swapped" se usa el otro representante de la simetría que
    intercambia P_1 y P_2.
    """
    if orientation not in (QUOTED, SWAPPED):
        raise InvalidParams(f"Orientación desconocida: {orientation}")
    p1, p2 = (cfg.p1, cfg.p2) if orientation == QUOTED else (cfg.p2, cfg.p1)

    v1, ids1 = _chain("p1_", p1)
    v0, ids0 = _chain("p0_", cfg.p0)
    v2, ids2 = _chain("p2_", p2)
    blacks = [Vertex("C1", Color.BLACK, -1), Vertex("C2", Color.BLACK, -1)]

    path = ids1 + ["C1"] + ids0 + ["C2"] + ids2
    graph = DualGraph(v1 + v0 + v2 + blacks, list(zip(path, path[1:])))
    return Plumbing(graph, "C1", "C2")


def index_two_bounds(cfg: K2AConfig) -> Optional[Tuple[Fraction, Fraction, Fraction]]:
    """
    Para m_0 = 2: (m_1²p_1/(m_1p_1δ_1 − 2), 2p_0, suma de ambos cocientes).

    Si la configuración fuese factible se tendría cota_1 > 2p_0 ≥ suma > cota_1.
    Devuelve None si m_0 ≠ 2 o algún denominador no es positivo.
    """
    if cfg.p0.m != 2:
        return None
    d1, d2 = deltas(cfg)
    x1 = cfg.p1.m * cfg.p1.p * d1 - 2
    x2 = cfg.p2.m * cfg.p2.p * d2 - 2
    if x1 <= 0 or x2 <= 0:
        return None
    bound1 = Fraction(_norm(cfg.p1), x1)
    bound2 = Fraction(_norm(cfg.p2), x2)
    return bound1, Fraction(2 * cfg.p0.p), bound1 + bound2


def iter_t_params(max_m: int, max_p: int, min_m: int = 2) -> Iterator[TParams]:
    for m in range(min_m, max_m + 1):
        for p in range(1, max_p + 1):
            for a in range(1, m):
                if gcd(m, a) == 1:
                    yield TParams(m, p, a)


def outer_index_two_identity(max_m: int) -> bool:
    """
    Con m_1 = m_2 = 2 (luego a_1 = a_2 = 1) se cumple δ_1 + δ_2 = 0 para todo P_0,
    así que δ_1 y δ_2 no pueden ser ambos positivos.
    """
    outer = TParams(2, 1, 1)
    for t0 in iter_t_params(max_m, 1):
        d1, d2 = deltas(K2AConfig(t0, outer, outer))
        if d1 + d2 != 0:
            return False
    return True


def iter_configs(
    max_m: int, max_p: int, exploratory: bool = False, m0: Optional[int] = None
) -> Iterator[K2AConfig]:
    """
    Configuraciones con m_i ≤ max_m y p_i ≤ max_p; sin exploratory se exige
    2 ∈ {m_0, m_1} y 2 ∈ {m_0, m_2}. Con m0 se fija el índice del punto común.
    """
    centers = iter_t_params(max_m, max_p) if m0 is None else iter_t_params(m0, max_p, min_m=m0)
    outers = list(iter_t_params(max_m, max_p))
    for t0 in centers:
        for t1 in outers:
            if not exploratory and 2 not in (t0.m, t1.m):
                continue
            for t2 in outers:
                if not exploratory and 2 not in (t0.m, t2.m):
                    continue
                yield K2AConfig(t0, t1, t2)


def _passes(cfg: K2AConfig) -> bool:
    d1, d2 = deltas(cfg)
    if d1 <= 0 or d2 <= 0:
        return False
    big1, big2 = big_deltas(cfg)
    return big1 > 0 and big2 > 0 and big1 * big2 - _norm(cfg.p1) * _norm(cfg.p2) >= 0


def _search_partition(args: Tuple[int, int, int, bool]) -> List[Tuple[Tuple[int, int, int], ...]]:
    m0, max_m, max_p, exploratory = args
    return [cfg.as_tuples() for cfg in iter_configs(max_m, max_p, exploratory, m0=m0) if _passes(cfg)]


def search_infeasible(
    max_m: int, max_p: int, exploratory: bool = False, workers: Optional[int] = None
) -> List[K2AConfig]:
    """
    Recorre todas las configuraciones con m_i ≤ max_m, p_i ≤ max_p y devuelve
    las factibles (lista vacía = confirmación acotada de la imposibilidad).

    Args:
        max_m: Cota del índice
        max_p: Cota de p
        exploratory: Sin la condición de índice 2 en cada curva (modo exploratorio)
        workers: Procesos en paralelo; el espacio se parte por m_0

    Returns:
        Configuraciones factibles ordenadas
    """
    if max_m < 2 or max_p < 1:
        raise InvalidParams(f"Cotas inválidas: max_m={max_m}, max_p={max_p}")

    tasks = [(m0, max_m, max_p, exploratory) for m0 in range(2, max_m + 1)]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_search_partition, tasks))
    else:
        chunks = [_search_partition(task) for task in tasks]

    found = sorted(t for chunk in chunks for t in chunk)
    mode = "exploratorio" if exploratory else "k2A_2"
    logger.info(f"🔍 Búsqueda {mode} (max_m={max_m}, max_p={max_p}): {len(found)} configuraciones factibles")
    return [K2AConfig.from_tuples(*t) for t in found]
