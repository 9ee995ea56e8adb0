#!/usr/bin/env python3
"""
Singularidades cocientes cíclicas 1/n(1, q).

Fracciones continuas de Hirzebruch–Jung, cadena de resolución, codiscrepancias
en los extremos y reconocimiento de la clase T: 1/(m²p)(1, mpa − 1).

Convención de orientación: el "primer extremo" de la cadena es el de b_1,
y para un punto T(m, p, a) lleva la codiscrepancia (m − a)/m.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import List, Optional, Sequence, Tuple

from src.core.errors import InvalidChain, InvalidParams
from src.core.resolution_graph import (
    Color,
    DualGraph,
    chain_of_curves,
    codiscrepancy,
    determinant,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CyclicQuotient:
    n: int
    q: int

    def __post_init__(self):
        if not (1 <= self.q < self.n):
            raise InvalidParams(f"Se requiere 1 <= q < n, recibido ({self.n}, {self.q})")
        if gcd(self.n, self.q) != 1:
            raise InvalidParams(f"n y q deben ser coprimos: ({self.n}, {self.q})")

    def __str__(self) -> str:
        return f"1/{self.n}(1,{self.q})"


@dataclass(frozen=True)
class TParams:
    """Parámetros (m, p, a) de un punto de clase T; m es el índice."""

    m: int
    p: int
    a: int

    def __post_init__(self):
        if self.m < 1 or self.p < 1 or self.a < 1:
            raise InvalidParams(f"m, p, a deben ser positivos: {self}")
        if self.a >= self.m:
            raise InvalidParams(f"Se requiere a < m: {self}")
        if gcd(self.m, self.a) != 1:
            raise InvalidParams(f"Se requiere gcd(m, a) = 1: {self}")

    @property
    def quotient(self) -> CyclicQuotient:
        return t_params_to_quotient(self)

    def __str__(self) -> str:
        return f"T(m={self.m}, p={self.p}, a={self.a})"


HJChain = List[int]


def t_params_to_quotient(t: TParams) -> CyclicQuotient:
    return CyclicQuotient(t.m * t.m * t.p, t.m * t.p * t.a - 1)


def dual_weight(s: CyclicQuotient) -> int:
    """q′ con q·q′ ≡ 1 (mod n)."""
    return pow(s.q, -1, s.n)


def hj_expand(s: CyclicQuotient) -> HJChain:
    """
    Desarrollo n/q = b_1 − 1/(b_2 − 1/(…)).

    Ejemplo: 9/2 -> [5, 2]
    """
    n, q = s.n, s.q
    chain: HJChain = []
    while q > 0:
        b = -(-n // q)
        chain.append(b)
        n, q = q, b * q - n
    return chain


def hj_contract(chain: Sequence[int]) -> CyclicQuotient:
    """
    Inversa de hj_expand.

    Raises:
        InvalidChain: si la cadena está vacía o tiene alguna entrada < 2
    """
    if not chain:
        raise InvalidChain("La cadena está vacía")
    if any(b < 2 for b in chain):
        raise InvalidChain(f"Todas las entradas deben ser >= 2: {list(chain)}")
    value = Fraction(chain[-1])
    for b in reversed(chain[:-1]):
        value = b - 1 / value
    return CyclicQuotient(value.numerator, value.denominator)


@dataclass(frozen=True)
class ChainGraph:
    """Cadena de resolución con sus extremos designados."""

    graph: DualGraph
    first_end: str
    last_end: str
    order: Tuple[str, ...]


def chain_graph(s: CyclicQuotient, prefix: str = "e") -> ChainGraph:
    """Camino de vértices blancos con autointersecciones −b_i."""
    vertices, edges = chain_of_curves(prefix, [-b for b in hj_expand(s)], Color.WHITE)
    order = tuple(v.id for v in vertices)
    return ChainGraph(DualGraph(vertices, edges), order[0], order[-1], order)


def end_codiscrepancies(s: CyclicQuotient) -> Tuple[Fraction, Fraction]:
    """θ en el primer y en el último vértice de la cadena."""
    chain = chain_graph(s)
    theta = codiscrepancy(chain.graph)
    return theta[chain.first_end], theta[chain.last_end]


def log_discrepancies(s: CyclicQuotient) -> Tuple[Fraction, Fraction]:
    """Log-discrepancias de los extremos: (1 + q)/n y (1 + q′)/n."""
    return Fraction(1 + s.q, s.n), Fraction(1 + dual_weight(s), s.n)


def is_du_val(s: CyclicQuotient) -> bool:
    """A_{n−1}: la cadena es toda de (−2)."""
    return s.q == s.n - 1


def _match_t(n: int, q: int) -> Optional[TParams]:
    for m in range(2, isqrt(n) + 1):
        if n % (m * m):
            continue
        p = n // (m * m)
        if (q + 1) % (m * p):
            continue
        a = (q + 1) // (m * p)
        if 1 <= a < m and gcd(m, a) == 1:
            return TParams(m, p, a)
    return None


def is_class_T(s: CyclicQuotient) -> Optional[TParams]:
    """
    Busca (m, p, a) con n = m²p, q = mpa − 1, a < m y gcd(m, a) = 1,
    primero para q y después para el peso dual q′.

    Los puntos Du Val nunca salen como clase T con m > 1 (usar is_du_val).
    """
    found = _match_t(s.n, s.q)
    if found is None:
        found = _match_t(s.n, dual_weight(s))
    return found


@dataclass(frozen=True)
class QuotientSummary:
    quotient: CyclicQuotient
    chain: Tuple[int, ...]
    dual_chain: Tuple[int, ...]
    t_params: Optional[TParams]
    du_val: bool
    via_partner: bool
    end_codiscrepancies: Tuple[Fraction, Fraction]
    determinant: int


def classify_quotient(s: CyclicQuotient) -> QuotientSummary:
    """Resumen completo usado por el comando `hj`."""
    direct = _match_t(s.n, s.q)
    t_params = direct if direct is not None else _match_t(s.n, dual_weight(s))
    chain = chain_graph(s)
    summary = QuotientSummary(
        quotient=s,
        chain=tuple(hj_expand(s)),
        dual_chain=tuple(hj_expand(CyclicQuotient(s.n, dual_weight(s)))),
        t_params=t_params,
        du_val=is_du_val(s),
        via_partner=direct is None and t_params is not None,
        end_codiscrepancies=end_codiscrepancies(s),
        determinant=determinant(chain.graph),
    )
    logger.debug(f"{s}: cadena {list(summary.chain)}, T={t_params}, du_val={summary.du_val}")
    return summary
