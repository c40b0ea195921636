"""Resultant of three ternary quadrics: an 8×8 Pfaffian and a 6×6 determinant.

A quadric is the coefficient vector (d0, ..., d5) of
d0 x^2 + d1 xy + d2 xz + d3 y^2 + d4 yz + d5 z^2, and [i,j,k] is the maximal
minor on columns i, j, k of the 3×6 matrix with rows a, b, c.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .arith import Matrix, det, pfaffian
from .fixtures import bracket_matrix
from .grassmann import eval_with_coords, pluecker_coords

MONOMIALS = ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))


def _check(q: Sequence) -> list:
    q = list(q)
    if len(q) != 6:
        raise ValueError(f"a ternary quadric has 6 coefficients, got {len(q)}")
    return q


@lru_cache(maxsize=None)
def pfaffian_matrix_quadrics() -> tuple:
    """The alternating 8×8 matrix of linear bracket forms (rows as tuples)."""
    return tuple(tuple(r) for r in bracket_matrix("pfaffian8"))


@lru_cache(maxsize=None)
def _stiefel_bracket_columns() -> tuple:
    return tuple(tuple(r) for r in bracket_matrix("stiefel6"))


def coefficient_matrix(a, b, c) -> Matrix:
    return Matrix.from_rows([_check(a), _check(b), _check(c)])


def stiefel_matrix_quadrics(a, b, c) -> Matrix:
    """6×6 matrix: coefficient columns of a, b, c, then three bracket columns."""
    S = coefficient_matrix(a, b, c)
    coords = pluecker_coords(S)
    rows = []
    for i, brow in enumerate(_stiefel_bracket_columns()):
        rows.append([S[0, i], S[1, i], S[2, i]] + [eval_with_coords(x, coords) for x in brow])
    return Matrix.from_rows(rows)


def pfaffian_matrix_at(a, b, c) -> Matrix:
    coords = pluecker_coords(coefficient_matrix(a, b, c))
    return Matrix.from_rows([[eval_with_coords(x, coords) for x in r] for r in pfaffian_matrix_quadrics()])


def resultant_quadrics(a, b, c):
    """det of the 6×6 Stiefel matrix (the reference normalization)."""
    return det(stiefel_matrix_quadrics(a, b, c))


def pfaffian_resultant_quadrics(a, b, c):
    return pfaffian(pfaffian_matrix_at(a, b, c))


def evaluate_quadric(q: Sequence, point: Sequence):
    x = point
    return sum(
        (c * x[0] ** e[0] * x[1] ** e[1] * x[2] ** e[2] for c, e in zip(q, MONOMIALS)),
        start=q[0] * 0,
    )


def planted_common_zero_quadrics(P: Sequence, rng, field) -> tuple:
    """Three random quadrics over ``field`` vanishing at the point P."""
    P = [field(x) for x in P]
    if all(x == 0 for x in P):
        raise ValueError("the zero vector is not a projective point")
    values = [P[0] ** e[0] * P[1] ** e[1] * P[2] ** e[2] for e in MONOMIALS]
    pivot = next(i for i, v in enumerate(values) if v != 0)
    out = []
    for _ in range(3):
        q = [field.random(rng) for _ in range(6)]
        rest = sum((q[i] * values[i] for i in range(6) if i != pivot), start=field.zero)
        q[pivot] = -rest / values[pivot]
        out.append(tuple(q))
    return tuple(out)


def random_quadric(rng, field) -> tuple:
    return tuple(field.random(rng) for _ in range(6))
