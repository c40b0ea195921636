"""Resultants of two binary forms of equal degree d.

A form f = f_0 s^d + f_1 s^{d-1} t + ... + f_d t^d is given by its
coefficient list (f_0, ..., f_d).  Three matrices are provided: the classical
Sylvester matrix, the symmetric d×d Bézout matrix whose entries are linear in
the brackets [p,q] of the 2×(d+1) matrix with rows f, g, and the 2d×d
Sylvester-type matrix over the exterior algebra whose kernel it spans.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .arith import Matrix, SparsePoly, det, gcd_univariate
from .exterior import ExtElement, ExtMatrix, ext_mat_mul
from .grassmann import BracketPoly, bracket_matrix_eval, bracket_to_wedge


def _check_pair(f: Sequence, g: Sequence) -> int:
    if len(f) != len(g):
        raise ValueError(f"degree mismatch: {len(f) - 1} vs {len(g) - 1}")
    d = len(f) - 1
    if d < 1:
        raise ValueError("binary forms must have degree >= 1")
    return d


def sylvester_matrix(f: Sequence, g: Sequence) -> Matrix:
    """2d×2d matrix whose determinant is Res(f, g)."""
    d = _check_pair(f, g)
    zero = f[0] * 0
    rows = []
    for coeffs in (f, g):
        for shift in range(d):
            row = [zero] * (2 * d)
            for i, c in enumerate(coeffs):
                row[shift + i] = c
            rows.append(row)
    return Matrix.from_rows(rows)


def bezout_bracket_matrix(d: int) -> list:
    """Symmetric d×d matrix a_ij = Σ [p,q] over p < min(i,j), p+q = i+j-1, q <= d."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    out = []
    for i in range(1, d + 1):
        row = []
        for j in range(1, d + 1):
            acc = BracketPoly(1, d)
            for p in range(min(i, j)):
                q = i + j - 1 - p
                if p < q <= d:
                    acc = acc + BracketPoly.bracket(1, d, (p, q))
            row.append(acc)
        out.append(row)
    return out


def stiefel_of(f: Sequence, g: Sequence) -> Matrix:
    _check_pair(f, g)
    return Matrix.from_rows([list(f), list(g)])


def bezout_resultant(f: Sequence, g: Sequence):
    """det of the Bézout bracket matrix evaluated at the rows f, g."""
    d = _check_pair(f, g)
    return det(bracket_matrix_eval(bezout_bracket_matrix(d), stiefel_of(f, g)))


def sylvester_resultant(f: Sequence, g: Sequence):
    return det(sylvester_matrix(f, g))


def resultant(f: Sequence, g: Sequence, method: str = "sylvester"):
    if method == "sylvester":
        return sylvester_resultant(f, g)
    if method == "bezout":
        return bezout_resultant(f, g)
    raise ValueError(f"unknown method {method!r} (expected 'sylvester' or 'bezout')")


def exterior_B(d: int) -> ExtMatrix:
    """2d×d matrix b_kl = y_{k-l} over V of dimension d+1."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    n = d + 1
    zero = ExtElement.zero(n)
    rows = []
    for k in range(2 * d):
        rows.append([ExtElement.gen(n, k - l) if 0 <= k - l <= d else zero for l in range(d)])
    return ExtMatrix(2 * d, d, n, rows)


def bezout_exterior(d: int) -> ExtMatrix:
    """The Bézout matrix with [p,q] read as y_p ∧ y_q."""
    A = bezout_bracket_matrix(d)
    return ExtMatrix(d, d, d + 1, [[bracket_to_wedge(x) for x in r] for r in A])


def verify_BA_zero_binary(d: int) -> bool:
    return ext_mat_mul(exterior_B(d), bezout_exterior(d)).is_zero()


def _dehomogenize(f: Sequence) -> SparsePoly:
    # t = 1: f(s, 1) = Σ f_i s^{d-i}
    d = len(f) - 1
    return SparsePoly.from_coeffs([f[d - i] for i in range(d + 1)])


def common_root_binary(f: Sequence, g: Sequence) -> bool:
    """True iff f and g share a root in P^1 over the algebraic closure."""
    _check_pair(f, g)
    if all(c == 0 for c in f) and all(c == 0 for c in g):
        raise ValueError("both forms are zero")
    if f[0] == 0 and g[0] == 0:  # the point (1:0)
        return True
    F, G = _dehomogenize(f), _dehomogenize(g)
    if F.is_zero() or G.is_zero():
        # one form vanishes identically: the other has a root in P^1
        return True
    return gcd_univariate(F, G).degree() > 0


def bezout_constant(d: int):
    """c_d with det(Bézout) = c_d·Res, measured on one reference pair."""
    f = [1] + [0] * (d - 1) + [-1]  # s^d - t^d
    g = [1] + [0] * (d - 1) + [-2**d]  # s^d - 2^d t^d
    return Fraction(bezout_resultant(f, g)) / Fraction(sylvester_resultant(f, g))
