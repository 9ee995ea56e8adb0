#!/usr/bin/env python3
"""
Tests de la aritmética racional exacta: matrices simétricas, sistemas y definitud.
"""

import itertools
import os
import random
import sys
import time
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.core.errors import SingularMatrix, UnderdeterminedSystem
from src.core.rational_core import (
    DefinitenessKind,
    NEGATIVE_DEFINITE,
    OTHER,
    SymMatrix,
    definiteness,
    determinant,
    inertia,
    negative_semidefinite,
    parse_rational,
    rational_from_json,
    rational_to_json,
    solve_linear,
    solve_system,
    to_rational,
)


def test_symmatrix_rejects_non_square_and_non_symmetric():
    with pytest.raises(ValueError):
        SymMatrix([[1, 2]])
    with pytest.raises(ValueError):
        SymMatrix([[1, 2], [3, 4]])


def test_symmatrix_rejects_floats():
    with pytest.raises(TypeError):
        SymMatrix([[0.5]])
    with pytest.raises(TypeError):
        to_rational(1.0)


def test_symmatrix_accessors():
    m = SymMatrix.from_rows([[-2, 1, 0], [1, -2, 1], [0, 1, -2]])
    assert m.dimension == 3
    assert m.entry(0, 1) == 1
    assert m.rows[2] == (Fraction(0), Fraction(1), Fraction(-2))
    assert m.principal([0, 2]) == SymMatrix([[-2, 0], [0, -2]])
    assert m.apply([1, 1, 1]) == [Fraction(-1), Fraction(0), Fraction(-1)]
    assert m.quadratic_form([1, 1, 1]) == -2
    assert SymMatrix([]).dimension == 0


def test_symmatrix_is_read_only():
    m = SymMatrix([[-2]])
    copy = m.as_array()
    copy[0, 0] = Fraction(5)
    assert m.entry(0, 0) == -2


@pytest.mark.parametrize(
    "rows, rhs, expected",
    [
        ([[-2]], [0], [Fraction(0)]),
        ([[-4]], [-2], [Fraction(1, 2)]),
        ([[-5, 1], [1, -2]], [-3, 0], [Fraction(2, 3), Fraction(1, 3)]),
    ],
)
def test_solve_linear_examples(rows, rhs, expected):
    assert solve_linear(SymMatrix(rows), rhs) == expected


def test_solve_linear_singular_and_underdetermined():
    m = SymMatrix([[-2, 2], [2, -2]])
    with pytest.raises(SingularMatrix):
        solve_linear(m, [1, 0])
    with pytest.raises(UnderdeterminedSystem) as info:
        solve_linear(m, [2, -2])
    assert info.value.kernel_dim == 1
    assert info.value.to_dict()["kernel_dim"] == 1


def test_solve_system_describes_affine_solution():
    m = SymMatrix([[-2, 2], [2, -2]])
    result = solve_system(m, [2, -2])
    assert result.kernel_dim == 1
    assert not result.is_unique
    assert m.apply(list(result.particular)) == [Fraction(2), Fraction(-2)]


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[-2, 1], [1, -2]], NEGATIVE_DEFINITE),
        ([[-2, 1, 0], [1, -1, 1], [0, 1, -2]], negative_semidefinite(1)),
        ([[1]], OTHER),
        ([[0, 1], [1, 0]], OTHER),
        ([[0, 0], [0, 0]], negative_semidefinite(2)),
        ([[-1, 1], [1, -1]], negative_semidefinite(1)),
    ],
)
def test_definiteness_examples(rows, expected):
    assert definiteness(SymMatrix(rows)) == expected


def test_definiteness_serialization():
    assert NEGATIVE_DEFINITE.to_dict() == {"class": "NegativeDefinite"}
    assert negative_semidefinite(1).to_dict() == {"class": "NegativeSemidefinite", "kernel_dim": 1}
    assert str(negative_semidefinite(1)) == "NegativeSemidefinite(kernel_dim=1)"
    assert OTHER.kind is DefinitenessKind.OTHER


def test_inertia_with_zero_diagonal_block():
    # bloque [[0, 1], [1, 0]] seguido de un −3 desacoplado
    assert inertia(SymMatrix([[0, 1, 0], [1, 0, 0], [0, 0, -3]])) == (2, 0, 1)


def test_determinant():
    assert determinant(SymMatrix([[-2, 1], [1, -2]])) == 3
    assert determinant(SymMatrix([[-5, 1], [1, -2]])) == 9
    assert determinant(SymMatrix([[-2, 1, 0], [1, -1, 1], [0, 1, -2]])) == 0
    assert determinant(SymMatrix([[0, 1], [1, 0]])) == -1


def test_long_chain_determinant_is_exact():
    # cadena de 40 curvas (−2): |det| = 41, sin desbordamiento
    n = 40
    rows = [[-2 if i == j else (1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
    assert abs(determinant(SymMatrix(rows))) == 41


def test_rational_json():
    payload = rational_to_json(Fraction(-7, 36))
    assert payload == {"num": "-7", "den": "36", "display": "-7/36"}
    assert rational_to_json(Fraction(2))["display"] == "2"
    assert rational_from_json(payload) == Fraction(-7, 36)
    assert parse_rational(" 4/9 ") == Fraction(4, 9)
    assert parse_rational("x") is None
    assert parse_rational("1/0") is None


def _leibniz(rows, idx):
    total = 0
    for perm in itertools.permutations(range(len(idx))):
        sign = 1
        for i in range(len(perm)):
            for j in range(i + 1, len(perm)):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i, p in enumerate(perm):
            term *= rows[idx[i]][idx[p]]
        total += term
    return total


def _oracle(rows):
    """
    Criterio de menores principales sobre −M: semidefinida si todos son >= 0;
    el rango es el mayor orden con un menor principal no nulo.
    """
    n = len(rows)
    negated = [[-x for x in row] for row in rows]
    rank = 0
    for k in range(1, n + 1):
        for idx in itertools.combinations(range(n), k):
            minor = _leibniz(negated, idx)
            if minor < 0:
                return DefinitenessKind.OTHER, None
            if minor != 0:
                rank = k
    if rank == n:
        return DefinitenessKind.NEGATIVE_DEFINITE, 0
    return DefinitenessKind.NEGATIVE_SEMIDEFINITE, n - rank


def _random_symmetric(rng, n):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = rng.randint(-4, 0)
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = rng.choice([0, 0, 0, 1, 1, -1])
    return rows


def test_definiteness_matches_bruteforce_oracle():
    rng = random.Random(20240611)
    for _ in range(500):
        n = rng.randint(1, 6)
        rows = _random_symmetric(rng, n)
        kind, kernel = _oracle(rows)
        result = definiteness(SymMatrix(rows))
        assert result.kind is kind
        if kind is not DefinitenessKind.OTHER:
            assert result.kernel_dim == kernel


def test_definiteness_large_random_consistent_with_inertia():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(5, 6)
        m = SymMatrix(_random_symmetric(rng, n))
        neg, zero, pos = inertia(m)
        assert neg + zero + pos == n
        assert zero == solve_system(m, [0] * n).kernel_dim
        result = definiteness(m)
        assert (result.kind is DefinitenessKind.OTHER) == (pos > 0)


def test_rational_arithmetic_is_exact():
    rng = random.Random(3)
    for _ in range(200):
        a, b, c = (Fraction(rng.randint(-50, 50), rng.randint(1, 30)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def _chain_entries(n, diagonal=-2):
    entries = {(i, i): diagonal for i in range(n)}
    entries.update({(i, i + 1): 1 for i in range(n - 1)})
    return entries


def test_from_entries_matches_dense_constructor():
    dense = SymMatrix([[-2, 1, 0], [1, -3, 0], [0, 0, -1]])
    sparse = SymMatrix.from_entries(3, {(0, 0): -2, (1, 0): 1, (1, 1): -3, (2, 2): -1})
    assert sparse == dense
    assert sparse.sparse_rows() == dense.sparse_rows()
    assert sparse.entry(0, 2) == 0


def test_from_entries_rejects_asymmetric_and_out_of_range():
    with pytest.raises(ValueError):
        SymMatrix.from_entries(2, {(0, 1): 1, (1, 0): 2})
    with pytest.raises(ValueError):
        SymMatrix.from_entries(2, {(0, 2): 1})


def test_sparse_rows_are_copies():
    m = SymMatrix.from_entries(2, _chain_entries(2))
    rows = m.sparse_rows()
    rows[0][0] = Fraction(99)
    assert m.sparse_rows()[0][0] == -2


def test_long_chain_solve_and_determinant_stay_fast():
    n = 1500
    m = SymMatrix.from_entries(n, _chain_entries(n))
    expected = [Fraction(i + 1, 3) for i in range(n)]
    padded = [Fraction(0)] + expected + [Fraction(0)]
    rhs = [padded[i] - 2 * padded[i + 1] + padded[i + 2] for i in range(n)]

    start = time.perf_counter()
    assert solve_linear(m, rhs) == expected
    assert determinant(m) == (-1) ** n * (n + 1)
    assert definiteness(m).is_negative_definite
    assert time.perf_counter() - start < 5.0


def test_long_singular_chain_kernel():
    # ciclo cerrado de −2: núcleo de dimensión 1
    n = 400
    entries = _chain_entries(n)
    entries[(0, n - 1)] = 1
    m = SymMatrix.from_entries(n, entries)
    assert determinant(m) == 0
    assert solve_system(m, [0] * n).kernel_dim == 1
    assert definiteness(m) == negative_semidefinite(1)
