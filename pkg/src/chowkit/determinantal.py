"""Chow forms of linear determinantal varieties via the Eagon–Northcott complex.

A linear matrix φ is g×f (f >= g) with entries in W, the space of linear
forms in x_0..x_n; each entry is a coefficient vector of length n+1.  Its
Eagon–Northcott type complex has terms

    P_i = Λ^{g-1+i} F ⊗ D_i(G*),   i = 0..c,   c = f - g + 1,

and differential f_J ⊗ γ^(α) ↦ Σ_{j∈J} Σ_b (-1)^{pos(j,J)} φ_{b,j} f_{J-j} ⊗ γ^(α-ε_b).
The wedge composite Ψ = (1/c!) φ_1 ∧ ... ∧ φ_c is a square P_0×P_c matrix
over Λ^c W, which becomes a matrix of linear bracket forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from math import factorial
from typing import Sequence

from .arith import Matrix, SparsePoly, det
from .exterior import ExtElement, ExtMatrix, ext_mat_mul
from .grassmann import BracketPoly, eval_with_coords, pluecker_coords, wedge_to_bracket


# ---------------------------------------------------------------------------
# linear matrices


@dataclass(frozen=True)
class LinearMatrix:
    """g×f matrix of linear forms in n+1 variables."""

    g: int
    f: int
    n: int
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(tuple(v) for v in r) for r in self.entries)
        if self.f < self.g or self.g < 1:
            raise ValueError(f"need f >= g >= 1, got g={self.g}, f={self.f}")
        if len(rows) != self.g or any(len(r) != self.f for r in rows):
            raise ValueError(f"entries do not form a {self.g}x{self.f} matrix")
        if any(len(v) != self.n + 1 for r in rows for v in r):
            raise ValueError(f"every entry must have {self.n + 1} coefficients")
        object.__setattr__(self, "entries", rows)

    @property
    def codim(self) -> int:
        return self.f - self.g + 1

    def entry(self, b: int, j: int) -> ExtElement:
        return ExtElement.linear(list(self.entries[b][j]))

    def to_json(self) -> dict:
        from .arith import format_scalar

        return {
            "g": self.g,
            "f": self.f,
            "n": self.n,
            "entries": [[[format_scalar(x) for x in v] for v in r] for r in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LinearMatrix":
        from .arith import parse_scalar

        return cls(
            obj["g"],
            obj["f"],
            obj["n"],
            tuple(tuple(tuple(parse_scalar(str(x)) for x in v) for v in r) for r in obj["entries"]),
        )

    def evaluate(self, point: Sequence) -> Matrix:
        return Matrix.from_rows(
            [[sum((c * x for c, x in zip(v, point)), start=0 * point[0]) for v in r] for r in self.entries]
        )


def _unit(n: int, i: int) -> tuple:
    return tuple(1 if t == i else 0 for t in range(n + 1))


def rnc_matrix(d: int) -> LinearMatrix:
    """2×d Hankel matrix of the rational normal curve of degree d in P^d."""
    return scroll_matrix([d])


def scroll_matrix(degrees: Sequence[int]) -> LinearMatrix:
    """2×Σd_i matrix of the rational normal scroll S(d_1, ..., d_r)."""
    if not degrees or any(d < 1 for d in degrees):
        raise ValueError(f"scroll degrees must be positive, got {tuple(degrees)}")
    n = sum(d + 1 for d in degrees) - 1
    top, bottom = [], []
    start = 0
    for d in degrees:
        for m in range(d):
            top.append(_unit(n, start + m))
            bottom.append(_unit(n, start + m + 1))
        start += d + 1
    return LinearMatrix(2, len(top), n, (tuple(top), tuple(bottom)))


def scroll_point(degrees: Sequence[int], s, t, lambdas: Sequence) -> list:
    """The point (λ_i s^{d_i-m} t^m) of S(d_1..d_r)."""
    out = []
    for d, lam in zip(degrees, lambdas):
        out.extend(lam * s ** (d - m) * t**m for m in range(d + 1))
    return out


def incident_plane(degrees: Sequence[int], k1: int, field, rng) -> tuple:
    """Random k1×(n+1) Stiefel matrix over ``field`` whose rows vanish at a random scroll point."""
    s, t = field.random(rng), field.random(rng)
    lambdas = [field.random(rng, nonzero=True) for _ in degrees]
    P = scroll_point(degrees, s, t, lambdas)
    if all(x == 0 for x in P):
        return incident_plane(degrees, k1, field, rng)
    n1 = len(P)
    R = [[field.random(rng) for _ in range(n1)] for _ in range(k1)]
    j = next(i for i, x in enumerate(P) if x != 0)
    rows = []
    for r in R:
        rp = sum((a * b for a, b in zip(r, P)), start=field.zero)
        rows.append([x - (rp / P[j] if i == j else 0) for i, x in enumerate(r)])
    return Matrix.from_rows(rows), P


# ---------------------------------------------------------------------------
# the complex


def divided_power_basis(g: int, i: int) -> list:
    """Exponent vectors α with |α| = i in g slots, lex order."""
    return sorted((a for a in product(range(i + 1), repeat=g) if sum(a) == i), reverse=True)


@dataclass
class LinearComplex:
    """Ranks, bases and differentials φ_1..φ_c (φ_i stored as P_{i-1}×P_i)."""

    phi: LinearMatrix
    bases: list
    differentials: list

    @property
    def c(self) -> int:
        return len(self.differentials)

    @property
    def ranks(self) -> tuple:
        return tuple(len(b) for b in self.bases)


def eagon_northcott(phi: LinearMatrix) -> LinearComplex:
    g, f = phi.g, phi.f
    c = phi.codim
    bases = [
        [(J, a) for J in combinations(range(f), g - 1 + i) for a in divided_power_basis(g, i)]
        for i in range(c + 1)
    ]
    ngens = phi.n + 1
    zero = ExtElement.zero(ngens)
    entries = [[phi.entry(b, j) for j in range(f)] for b in range(g)]
    diffs = []
    for i in range(1, c + 1):
        index = {key: r for r, key in enumerate(bases[i - 1])}
        cols = []
        for J, a in bases[i]:
            col = [zero] * len(bases[i - 1])
            for pos, j in enumerate(J):
                J2 = J[:pos] + J[pos + 1:]
                for b in range(g):
                    if a[b] == 0:
                        continue
                    a2 = a[:b] + (a[b] - 1,) + a[b + 1:]
                    r = index[(J2, a2)]
                    term = entries[b][j] if pos % 2 == 0 else -entries[b][j]
                    col[r] = col[r] + term
            cols.append(col)
        mat = [[cols[s][r] for s in range(len(cols))] for r in range(len(bases[i - 1]))]
        diffs.append(ExtMatrix(len(bases[i - 1]), len(bases[i]), ngens, mat))
    return LinearComplex(phi, bases, diffs)


def _as_linear_poly(x: ExtElement) -> SparsePoly:
    n = x.ngens
    return SparsePoly(n, {tuple(1 if t == i else 0 for t in range(n)): c for (i,), c in x.items()})


def symmetric_composite(A: ExtMatrix, B: ExtMatrix) -> Matrix:
    """A·B with entries multiplied as linear forms (in the symmetric algebra)."""
    if A.cols != B.rows:
        raise ValueError("dimension mismatch")
    n = A.ngens
    a = [[_as_linear_poly(x) for x in r] for r in A.data]
    b = [[_as_linear_poly(x) for x in r] for r in B.data]
    rows = []
    for i in range(A.rows):
        row = []
        for j in range(B.cols):
            acc = SparsePoly(n)
            for l in range(A.cols):
                if a[i][l] and b[l][j]:
                    acc = acc + a[i][l] * b[l][j]
            row.append(acc)
        rows.append(row)
    return Matrix.from_rows(rows)


def composites_vanish(L: LinearComplex) -> bool:
    return all(
        symmetric_composite(L.differentials[i - 1], L.differentials[i]).is_zero()
        for i in range(1, L.c)
    )


def tensor_composite(L: LinearComplex) -> list:
    """Full composite in W^{⊗c} ⊗ Hom(P_c, P_0): entry (r,s) is {index tuple: coeff}."""
    mats = [[[dict((i, c) for (i,), c in x.items()) for x in row] for row in D.data] for D in L.differentials]
    cur = [[{(): 1} if r == s else {} for s in range(L.ranks[0])] for r in range(L.ranks[0])]
    for D in mats:
        nxt = []
        for r in range(len(cur)):
            row = []
            for s in range(len(D[0])):
                acc: dict = {}
                for l in range(len(D)):
                    left, right = cur[r][l], D[l][s]
                    if not left or not right:
                        continue
                    for idx, x in left.items():
                        for i, y in right.items():
                            key = idx + (i,)
                            acc[key] = acc.get(key, 0) + x * y
                row.append({k: v for k, v in acc.items() if v != 0})
            nxt.append(row)
        cur = nxt
    return cur


def is_alternating_tensor(T: list) -> bool:
    """Every entry changes sign under each adjacent transposition of tensor slots."""
    for row in T:
        for entry in row:
            for idx, x in entry.items():
                for p in range(len(idx) - 1):
                    sw = idx[:p] + (idx[p + 1], idx[p]) + idx[p + 2:]
                    if entry.get(sw, 0) != -x:
                        return False
    return True


def wedge_compose(L: LinearComplex) -> ExtMatrix:
    """Ψ = (1/c!) φ_1 ∧ ... ∧ φ_c as a P_0×P_c matrix over Λ^c W."""
    acc = L.differentials[0]
    for D in L.differentials[1:]:
        acc = ext_mat_mul(acc, D)
    scale = Fraction(1, factorial(L.c))
    return acc.map(lambda x: x.map_coeffs(lambda c: _exact(c * scale)))


def _exact(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class BracketDeterminant:
    """det of a square matrix of bracket forms, kept as the matrix.

    ``evaluate`` substitutes one Stiefel matrix and takes a scalar
    determinant; ``expand`` computes the bracket polynomial symbolically.
    """

    def __init__(self, matrix: list):
        self.matrix = [list(r) for r in matrix]
        if any(len(r) != len(self.matrix) for r in self.matrix):
            raise ValueError("bracket matrix is not square")
        x = self.matrix[0][0]
        self.k, self.n = x.k, x.n

    @property
    def size(self) -> int:
        return len(self.matrix)

    def evaluate(self, S: Matrix):
        if (S.rows, S.cols) != (self.k + 1, self.n + 1):
            raise ValueError(f"need a {self.k + 1}x{self.n + 1} Stiefel matrix, got {S.rows}x{S.cols}")
        coords = pluecker_coords(S)
        return det(Matrix.from_rows([[eval_with_coords(x, coords) for x in r] for r in self.matrix]))

    def expand(self) -> BracketPoly:
        M = Matrix.from_rows([[x.poly for x in r] for r in self.matrix])
        return BracketPoly(self.k, self.n, det(M))

    def __str__(self):
        return "det" + str([[str(x) for x in r] for r in self.matrix])


def psi_bracket_matrix(phi: LinearMatrix) -> list:
    L = eagon_northcott(phi)
    Psi = wedge_compose(L)
    k = phi.n - L.c
    if k < 0:
        raise ValueError(f"codimension {L.c} exceeds the ambient dimension {phi.n}")
    return [[wedge_to_bracket(x, k) for x in r] for r in Psi.data]


def chow_form_determinantal(phi: LinearMatrix) -> BracketDeterminant:
    """The Chow form det(Ψ) read in brackets of (n-c+1)×(n+1) Stiefel matrices."""
    return BracketDeterminant(psi_bracket_matrix(phi))
