#!/usr/bin/env python3
"""
Núcleo de aritmética racional exacta.

Todas las cantidades del proyecto (coeficientes de codiscrepancia, grados
anticanónicos, números de intersección) son fracciones exactas. Aquí viven la
matriz simétrica, la resolución de sistemas lineales y la clasificación de
definitud por diagonalización por congruencia. No se usa coma flotante.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.core.errors import SingularMatrix, UnderdeterminedSystem

logger = logging.getLogger(__name__)

Rational = Fraction


def to_rational(value: Any) -> Fraction:
    """
    Convierte enteros, cadenas "p/q" o fracciones a Fraction.

    Los float se rechazan: un float ya perdió la exactitud.
    """
    if isinstance(value, float):
        raise TypeError(f"No se admiten números en coma flotante: {value!r}")
    return Fraction(value)


class SymMatrix:
    """Matriz simétrica de racionales, inmutable."""

    __slots__ = ("_data", "_sparse")

    def __init__(self, rows: Iterable[Iterable[Any]]):
        rows = [[to_rational(x) for x in row] for row in rows]
        size = len(rows)
        if any(len(row) != size for row in rows):
            raise ValueError("La matriz debe ser cuadrada")

        data = np.empty((size, size), dtype=object)
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                data[i, j] = value

        if not np.array_equal(data, data.T):
            raise ValueError("La matriz no es simétrica")

        data.setflags(write=False)
        self._data = data
        self._sparse: Optional[List[Dict[int, Fraction]]] = None

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Any]]) -> "SymMatrix":
        return cls(rows)

    @classmethod
    def from_entries(cls, size: int, entries: Mapping[Tuple[int, int], Any]) -> "SymMatrix":
        """
        Construye la matriz a partir de sus entradas no nulas.

        Basta dar cada par una vez; (i, j) y (j, i) con valores distintos es un error.
        """
        sparse: List[Dict[int, Fraction]] = [{} for _ in range(size)]
        for (i, j), value in entries.items():
            if not (0 <= i < size and 0 <= j < size):
                raise ValueError(f"Índice fuera de rango: ({i}, {j})")
            value = to_rational(value)
            if value == 0:
                continue
            for a, b in ((i, j), (j, i)):
                if sparse[a].get(b, value) != value:
                    raise ValueError("La matriz no es simétrica")
                sparse[a][b] = value

        data = np.full((size, size), Fraction(0), dtype=object)
        for i, row in enumerate(sparse):
            for j, value in row.items():
                data[i, j] = value
        data.setflags(write=False)

        matrix = cls.__new__(cls)
        matrix._data = data
        matrix._sparse = sparse
        return matrix

    @property
    def dimension(self) -> int:
        return self._data.shape[0]

    @property
    def rows(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return tuple(tuple(row) for row in self._data)

    def sparse_rows(self) -> List[Dict[int, Fraction]]:
        """Copia de las filas como diccionarios columna -> entrada no nula."""
        if self._sparse is None:
            self._sparse = [{j: x for j, x in enumerate(row) if x != 0} for row in self._data]
        return [dict(row) for row in self._sparse]

    def entry(self, i: int, j: int) -> Fraction:
        return self._data[i, j]

    def as_array(self) -> np.ndarray:
        """Copia modificable (dtype=object) de las entradas."""
        return self._data.copy()

    def principal(self, indices: Sequence[int]) -> "SymMatrix":
        """Submatriz principal con las filas/columnas indicadas, en ese orden."""
        return SymMatrix([[self._data[i, j] for j in indices] for i in indices])

    def apply(self, vector: Sequence[Any]) -> List[Fraction]:
        """Producto M·x exacto."""
        if len(vector) != self.dimension:
            raise ValueError("Dimensión del vector incompatible")
        if self.dimension == 0:
            return []
        x = np.array([to_rational(v) for v in vector], dtype=object)
        return [Fraction(v) for v in self._data.dot(x)]

    def quadratic_form(self, vector: Sequence[Any]) -> Fraction:
        """xᵀ M x."""
        image = self.apply(vector)
        return sum((to_rational(a) * b for a, b in zip(vector, image)), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows)
        return f"SymMatrix([{body}])"


class DefinitenessKind(str, Enum):
    NEGATIVE_DEFINITE = "NegativeDefinite"
    NEGATIVE_SEMIDEFINITE = "NegativeSemidefinite"
    OTHER = "Other"


@dataclass(frozen=True)
class Definiteness:
    """Resultado de la clasificación de definitud."""

    kind: DefinitenessKind
    kernel_dim: int = 0

    @property
    def is_negative_definite(self) -> bool:
        return self.kind is DefinitenessKind.NEGATIVE_DEFINITE

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"class": self.kind.value}
        if self.kind is DefinitenessKind.NEGATIVE_SEMIDEFINITE:
            payload["kernel_dim"] = self.kernel_dim
        return payload

    def __str__(self) -> str:
        if self.kind is DefinitenessKind.NEGATIVE_SEMIDEFINITE:
            return f"{self.kind.value}(kernel_dim={self.kernel_dim})"
        return self.kind.value


NEGATIVE_DEFINITE = Definiteness(DefinitenessKind.NEGATIVE_DEFINITE)
OTHER = Definiteness(DefinitenessKind.OTHER)


def negative_semidefinite(kernel_dim: int) -> Definiteness:
    return Definiteness(DefinitenessKind.NEGATIVE_SEMIDEFINITE, kernel_dim)


@dataclass(frozen=True)
class LinearSolution:
    """Descripción del conjunto de soluciones: una particular más la dimensión del núcleo."""

    particular: Tuple[Fraction, ...]
    kernel_dim: int

    @property
    def is_unique(self) -> bool:
        return self.kernel_dim == 0


def _eliminate_column(
    work: List[Dict[int, Fraction]], pivot: int, targets: Iterable[int], factors: Dict[int, Fraction]
) -> None:
    """work[k] -= factors[k]·work[pivot] para cada k, recorriendo sólo las entradas no nulas del pivote."""
    source = work[pivot]
    for k in targets:
        f = factors[k]
        row = work[k]
        for j, x in source.items():
            value = row.get(j, 0) - f * x
            if value:
                row[j] = value
            else:
                row.pop(j, None)


def inertia(matrix: SymMatrix) -> Tuple[int, int, int]:
    """
    Índice de inercia (negativos, nulos, positivos) por diagonalización por congruencia.

    Se elimina con pivotes diagonales no nulos; si sólo quedan diagonales nulas
    pero hay una entrada fuera de la diagonal, se usa un bloque 2x2 [[0, b], [b, 0]],
    que aporta un autovalor positivo y uno negativo. Las filas se guardan
    dispersas, de modo que una cadena tridiagonal se diagonaliza en tiempo lineal
    en número de operaciones racionales.

    Args:
        matrix: Matriz simétrica

    Returns:
        Tupla (n_neg, n_zero, n_pos)
    """
    work = matrix.sparse_rows()
    active = dict.fromkeys(range(matrix.dimension))
    n_neg = n_zero = n_pos = 0

    while active:
        pivot = next((i for i in active if work[i].get(i)), None)

        if pivot is not None:
            d = work[pivot][pivot]
            if d < 0:
                n_neg += 1
            else:
                n_pos += 1
            del active[pivot]
            neighbours = [k for k in work[pivot] if k != pivot]
            factors = {k: work[k][pivot] / d for k in neighbours}
            for k in neighbours:
                del work[k][pivot]
            work[pivot].pop(pivot)
            _eliminate_column(work, pivot, neighbours, factors)
            continue

        off = next(((i, j) for i in active for j in work[i] if i < j), None)
        if off is None:
            # Todo el bloque restante es nulo
            n_zero += len(active)
            break

        i, j = off
        b = work[i][j]
        n_neg += 1
        n_pos += 1
        del active[i], active[j]
        rest = sorted((set(work[i]) | set(work[j])) - {i, j})
        updated = {
            (k, l): work[k].get(l, 0)
            - (work[k].get(i, 0) * work[j].get(l, 0) + work[k].get(j, 0) * work[i].get(l, 0)) / b
            for k in rest
            for l in rest
        }
        for k in rest:
            work[k].pop(i, None)
            work[k].pop(j, None)
        for (k, l), value in updated.items():
            if value:
                work[k][l] = value
            else:
                work[k].pop(l, None)

    logger.debug(f"Inercia de matriz {matrix.dimension}x{matrix.dimension}: ({n_neg}, {n_zero}, {n_pos})")
    return n_neg, n_zero, n_pos


def definiteness(matrix: SymMatrix) -> Definiteness:
    """
    Clasifica una matriz simétrica: definida negativa, semidefinida negativa
    (con la dimensión exacta del núcleo) u otra.
    """
    _, n_zero, n_pos = inertia(matrix)
    if n_pos > 0:
        return OTHER
    if n_zero == 0:
        return NEGATIVE_DEFINITE
    return negative_semidefinite(n_zero)


def _forward_eliminate(
    rows: List[Dict[int, Fraction]], n_cols: int, normalize: bool
) -> Tuple[List[int], int]:
    """
    Eliminación hacia delante en sitio sobre las primeras n_cols columnas,
    sin rellenar por encima de los pivotes.

    Returns:
        (columnas pivote, signo de la permutación de filas)
    """
    pivot_cols: List[int] = []
    sign = 1
    r = 0
    for c in range(n_cols):
        sel = next((i for i in range(r, len(rows)) if rows[i].get(c)), None)
        if sel is None:
            continue
        if sel != r:
            rows[r], rows[sel] = rows[sel], rows[r]
            sign = -sign
        p = rows[r][c]
        if normalize:
            rows[r] = {j: x / p for j, x in rows[r].items()}
            p = Fraction(1)
        below = [i for i in range(r + 1, len(rows)) if rows[i].get(c)]
        factors = {i: rows[i][c] / p for i in below}
        _eliminate_column(rows, r, below, factors)
        pivot_cols.append(c)
        r += 1
        if r == len(rows):
            break
    return pivot_cols, sign


def solve_system(matrix: SymMatrix, rhs: Sequence[Any]) -> LinearSolution:
    """
    Resuelve M·x = b describiendo todo el conjunto de soluciones
    (las variables libres de la solución particular valen 0).

    Raises:
        SingularMatrix: si b no está en el espacio columna de M
    """
    n = matrix.dimension
    if len(rhs) != n:
        raise ValueError(f"El término independiente tiene longitud {len(rhs)}, se esperaba {n}")

    augmented = matrix.sparse_rows()
    for row, b in zip(augmented, rhs):
        b = to_rational(b)
        if b:
            row[n] = b
    pivot_cols, _ = _forward_eliminate(augmented, n, normalize=True)
    rank = len(pivot_cols)

    if any(row.get(n) for row in augmented[rank:]):
        raise SingularMatrix("Matriz singular y el término independiente no está en su imagen")

    solution = [Fraction(0)] * n
    for row, c in reversed(list(zip(augmented, pivot_cols))):
        tail = sum((x * solution[j] for j, x in row.items() if j != c and j != n), Fraction(0))
        solution[c] = row.get(n, Fraction(0)) - tail

    logger.debug(f"Sistema {n}x{n} resuelto, rango {rank}")
    return LinearSolution(tuple(solution), n - rank)


def solve_linear(matrix: SymMatrix, rhs: Sequence[Any]) -> List[Fraction]:
    """
    Resuelve M·x = b cuando la solución es única.

    Raises:
        SingularMatrix: sistema incompatible
        UnderdeterminedSystem: sistema compatible con núcleo no trivial
    """
    result = solve_system(matrix, rhs)
    if not result.is_unique:
        raise UnderdeterminedSystem(result.kernel_dim, list(result.particular))
    return list(result.particular)


def determinant(matrix: SymMatrix) -> Fraction:
    """Determinante exacto por eliminación gaussiana."""
    n = matrix.dimension
    work = matrix.sparse_rows()
    pivot_cols, sign = _forward_eliminate(work, n, normalize=False)
    if len(pivot_cols) < n:
        return Fraction(0)
    det = Fraction(sign)
    for i in range(n):
        det *= work[i][i]
    return det


def rational_to_json(value: Fraction) -> Dict[str, str]:
    """Serialización exacta: {"num", "den", "display"}."""
    value = Fraction(value)
    display = str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return {"num": str(value.numerator), "den": str(value.denominator), "display": display}


def rational_from_json(payload: Dict[str, str]) -> Fraction:
    return Fraction(int(payload["num"]), int(payload["den"]))


def parse_rational(text: str) -> Optional[Fraction]:
    """Lee "p/q" o "p"; devuelve None si el texto no es un racional."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        return None
