"""Stiefel matrices, Plücker brackets and bracket polynomials.

A Stiefel matrix is a (k+1)×(n+1) matrix whose rows are coefficient vectors;
its maximal minors are the brackets [i0 ... ik].  A :class:`BracketPoly` is a
polynomial in those bracket symbols, stored as a :class:`SparsePoly` whose
variables are the (k+1)-subsets of {0..n} in lex order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Sequence

from .arith import GF, Matrix, SparsePoly, det
from .exterior import ExtElement, indices_of, sort_sign, top_coefficient, wedge, wedge_sign

EQUALITY_POINTS = 25


# ---------------------------------------------------------------------------
# Stiefel matrices and Plücker coordinates


def stiefel(rows: Sequence[Sequence]) -> Matrix:
    """Validate and wrap a (k+1)×(n+1) Stiefel matrix with rows <= cols."""
    m = rows if isinstance(rows, Matrix) else Matrix.from_rows(rows)
    if m.rows > m.cols:
        raise ValueError(f"Stiefel matrix has {m.rows} rows but only {m.cols} columns")
    return m


def has_full_row_rank(S: Matrix) -> bool:
    return any(v != 0 for v in pluecker_coords(S).values())


def pluecker_coords(S: Matrix) -> dict:
    """Map each column subset (i0 < ... < ik) to its maximal minor."""
    S = stiefel(S)
    k1 = S.rows
    return {
        cols: det(S.submatrix(range(k1), cols))
        for cols in combinations(range(S.cols), k1)
    }


def random_stiefel(k1: int, n1: int, field: GF, rng) -> Matrix:
    return Matrix(k1, n1, [[field.random(rng) for _ in range(n1)] for _ in range(k1)])


# ---------------------------------------------------------------------------
# bracket polynomials


def normalize_bracket(indices: Sequence[int]) -> tuple[int, tuple]:
    """Sort a bracket, returning (sign, sorted tuple); sign 0 on a repeat."""
    sign = sort_sign(indices)
    return sign, tuple(sorted(indices))


def format_bracket(idx: Sequence[int]) -> str:
    if all(i < 10 for i in idx):
        return "[" + "".join(map(str, idx)) + "]"
    return "[" + " ".join(map(str, idx)) + "]"


_BRACKET = re.compile(r"\[([0-9 ,]*)\]")


def parse_bracket(text: str, size: int | None = None) -> tuple:
    """Inverse of :func:`format_bracket`; also accepts commas.

    A compact body such as "10" is read digit by digit unless ``size`` = 1
    says it is a single index.
    """
    m = _BRACKET.fullmatch(text.strip())
    if not m:
        raise ValueError(f"not a bracket: {text!r}")
    body = m.group(1).strip()
    if "," in body or " " in body:
        out = tuple(int(x) for x in re.split(r"[ ,]+", body) if x)
    elif size == 1:
        out = (int(body),)
    else:
        out = tuple(int(ch) for ch in body)
    if size is not None and len(out) != size:
        raise ValueError(f"bracket {text!r} does not have {size} indices")
    return out


class BracketPoly:
    """Polynomial in the brackets of a (k+1)×(n+1) Stiefel matrix."""

    __slots__ = ("k", "n", "poly")

    _index_cache: dict = {}

    def __init__(self, k: int, n: int, poly: SparsePoly | None = None):
        if not 0 <= k <= n:
            raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
        self.k, self.n = k, n
        nv = comb(n + 1, k + 1)
        self.poly = SparsePoly(nv) if poly is None else poly
        if self.poly.nvars != nv:
            raise ValueError("underlying polynomial has the wrong number of variables")

    # -- variable bookkeeping ---------------------------------------------

    @classmethod
    def _variables(cls, k: int, n: int):
        key = (k, n)
        if key not in cls._index_cache:
            brackets = list(combinations(range(n + 1), k + 1))
            cls._index_cache[key] = (brackets, {b: i for i, b in enumerate(brackets)})
        return cls._index_cache[key]

    def brackets(self) -> list:
        return self._variables(self.k, self.n)[0]

    @classmethod
    def bracket(cls, k: int, n: int, indices: Sequence[int], coeff=1) -> "BracketPoly":
        """The single bracket [indices]·coeff, antisymmetry applied."""
        if len(indices) != k + 1:
            raise ValueError(f"bracket {tuple(indices)} does not have {k + 1} indices")
        if any(not 0 <= i <= n for i in indices):
            raise ValueError(f"bracket {tuple(indices)} has an index outside 0..{n}")
        sign, idx = normalize_bracket(indices)
        nv = comb(n + 1, k + 1)
        if sign == 0 or coeff == 0:
            return cls(k, n, SparsePoly(nv))
        pos = cls._variables(k, n)[1][idx]
        return cls(k, n, SparsePoly.var(nv, pos, coeff if sign == 1 else -coeff))

    @classmethod
    def const(cls, k: int, n: int, c) -> "BracketPoly":
        return cls(k, n, SparsePoly.const(comb(n + 1, k + 1), c))

    @classmethod
    def from_terms(cls, k: int, n: int, terms: Iterable) -> "BracketPoly":
        """Build from (coeff, [bracket, bracket, ...]) monomials."""
        acc = cls(k, n)
        for coeff, monomial in terms:
            term = cls.const(k, n, coeff)
            for b in monomial:
                term = term * cls.bracket(k, n, b)
            acc = acc + term
        return acc

    def terms(self) -> list:
        """(coeff, [bracket, ...]) pairs in a canonical order."""
        names = self.brackets()
        out = []
        for e in sorted(self.poly.terms, reverse=True):
            mono = []
            for i, p in enumerate(e):
                mono.extend([names[i]] * p)
            out.append((self.poly.terms[e], mono))
        return out

    # -- arithmetic --------------------------------------------------------

    def _same(self, other: "BracketPoly"):
        if (self.k, self.n) != (other.k, other.n):
            raise ValueError(f"bracket shapes differ: (k,n)=({self.k},{self.n}) vs ({other.k},{other.n})")

    def _lift(self, other):
        if isinstance(other, BracketPoly):
            self._same(other)
            return other.poly
        return SparsePoly.const(self.poly.nvars, other)

    def __add__(self, other):
        return BracketPoly(self.k, self.n, self.poly + self._lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return BracketPoly(self.k, self.n, self.poly - self._lift(other))

    def __rsub__(self, other):
        return BracketPoly(self.k, self.n, self._lift(other) - self.poly)

    def __neg__(self):
        return BracketPoly(self.k, self.n, -self.poly)

    def __mul__(self, other):
        if isinstance(other, BracketPoly):
            self._same(other)
            return BracketPoly(self.k, self.n, self.poly * other.poly)
        return BracketPoly(self.k, self.n, self.poly * other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return BracketPoly(self.k, self.n, self.poly**e)

    def exquo(self, other: "BracketPoly") -> "BracketPoly":
        self._same(other)
        return BracketPoly(self.k, self.n, self.poly.exquo(other.poly))

    def __eq__(self, other):
        if isinstance(other, BracketPoly):
            return (self.k, self.n) == (other.k, other.n) and self.poly == other.poly
        return self.poly == other

    def __hash__(self):
        return hash((self.k, self.n, self.poly))

    def __bool__(self):
        return bool(self.poly)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def degree(self) -> int:
        return self.poly.degree()

    def is_linear(self) -> bool:
        return all(sum(e) == 1 for e in self.poly.terms)

    def evaluate(self, S: Matrix):
        return eval_bracket(self, S)

    def __str__(self):
        if self.poly.is_zero():
            return "0"
        parts = []
        for coeff, mono in self.terms():
            body = "".join(format_bracket(b) for b in mono)
            if not mono:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{coeff}*{body}")
        text = "+".join(parts)
        return text.replace("+-", "-")

    def __repr__(self):
        return f"BracketPoly(k={self.k}, n={self.n}, {self})"


def eval_bracket(P: BracketPoly, S: Matrix):
    """Substitute the Plücker coordinates of S into P."""
    S = stiefel(S)
    if (S.rows, S.cols) != (P.k + 1, P.n + 1):
        raise ValueError(
            f"bracket polynomial needs a {P.k + 1}x{P.n + 1} Stiefel matrix, got {S.rows}x{S.cols}"
        )
    coords = pluecker_coords(S)
    return P.poly.eval([coords[b] for b in P.brackets()])


def eval_with_coords(P: BracketPoly, coords: dict):
    return P.poly.eval([coords[b] for b in P.brackets()])


def parse_bracket_linear(k: int, n: int, text: str) -> BracketPoly:
    """Parse a linear bracket expression such as ``-[125]+[045]`` or ``2*[01]``."""
    acc = BracketPoly(k, n)
    if text.strip() in ("", "0"):
        return acc
    pos = 0
    term = re.compile(r"\s*([+-]?)\s*(?:(\d+(?:/\d+)?)\*)?(\[[0-9 ,]*\])")
    while pos < len(text):
        m = term.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse bracket expression {text!r} at position {pos}")
        coeff = Fraction(m.group(2)) if m.group(2) else 1
        if m.group(1) == "-":
            coeff = -coeff
        acc = acc + BracketPoly.bracket(k, n, parse_bracket(m.group(3), k + 1), coeff)
        pos = m.end()
        while pos < len(text) and text[pos] == " ":
            pos += 1
    return acc


# ---------------------------------------------------------------------------
# ΛW and linear forms on the Grassmannian


def rows_wedge(S: Matrix) -> ExtElement:
    """row_0 ∧ ... ∧ row_k as an element of Λ^{k+1}W."""
    acc = ExtElement.scalar(S.cols, 1)
    for r in S.data:
        acc = wedge(acc, ExtElement.linear(list(r)))
    return acc


def wedge_to_bracket(omega: ExtElement, k: int) -> BracketPoly:
    """Linear form L_ω with L_ω(S) = top(ω ∧ row_0(S) ∧ ... ∧ row_k(S))."""
    n = omega.ngens - 1
    if omega.terms and omega.degree() != n - k:
        raise ValueError(f"expected an element of degree {n - k}, got degree {omega.degree()}")
    full = (1 << (n + 1)) - 1
    acc = BracketPoly(k, n)
    for m, c in omega.terms.items():
        comp = full & ~m
        acc = acc + BracketPoly.bracket(k, n, indices_of(comp), c * wedge_sign(m, comp))
    return acc


def wedge_pairing(omega: ExtElement, S: Matrix):
    return top_coefficient(wedge(omega, rows_wedge(S)))


def plucker_relations_check(S: Matrix) -> bool:
    """All Grassmann–Plücker relations Σ_l (-1)^l [I j_l][J - j_l] = 0."""
    S = stiefel(S)
    k1, n1 = S.rows, S.cols
    p = pluecker_coords(S)

    def val(idx):
        sign, key = normalize_bracket(idx)
        return 0 if sign == 0 else (p[key] if sign == 1 else -p[key])

    for I in combinations(range(n1), k1 - 1):
        for J in combinations(range(n1), k1 + 1):
            total = 0
            for l, j in enumerate(J):
                term = val(I + (j,)) * val(J[:l] + J[l + 1:])
                total = total + (term if l % 2 == 0 else -term)
            if total != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# randomized identity testing


class RatioMismatch(AssertionError):
    pass


def constant_ratio(pairs: Iterable[tuple]) -> tuple:
    """Proportionality protocol for value pairs (x, y) with claimed y = r·x.

    The ratio r is measured at the first pair where both values are nonzero;
    every pair must then satisfy y == r·x exactly (so x and y vanish together).
    Returns (r, number of pairs, number of mismatches); r is None if no pair
    had both values nonzero.
    """
    ratio = None
    seen = []
    for x, y in pairs:
        seen.append((x, y))
        if ratio is None and x != 0 and y != 0:
            ratio = y / x
    if ratio is None:
        bad = sum(1 for x, y in seen if (x == 0) != (y == 0))
        return None, len(seen), bad
    bad = sum(1 for x, y in seen if y != ratio * x)
    return ratio, len(seen), bad


def brackets_equal(P: BracketPoly, Q: BracketPoly, rng, points: int = EQUALITY_POINTS, p: int | None = None) -> bool:
    """Decide P == Q by evaluation at random Stiefel points over Z/p."""
    P._same(Q)
    field = GF(p)
    for _ in range(points):
        S = random_stiefel(P.k + 1, P.n + 1, field, rng)
        if eval_bracket(P, S) != eval_bracket(Q, S):
            return False
    return True


def proportional_on_random_points(
    f: Callable, g: Callable, k1: int, n1: int, rng, points: int = EQUALITY_POINTS, p: int | None = None
) -> tuple:
    """Run :func:`constant_ratio` on (f(S), g(S)) for random Stiefel S over Z/p."""
    field = GF(p)
    pairs = []
    for _ in range(points):
        S = random_stiefel(k1, n1, field, rng)
        pairs.append((f(S), g(S)))
    return constant_ratio(pairs)


def bracket_to_wedge(L: BracketPoly) -> ExtElement:
    """Read a linear bracket form as an element of Λ^{k+1}V: [I] ↦ y_I."""
    if not L.is_linear():
        raise ValueError(f"{L} is not linear in the brackets")
    names = L.brackets()
    terms = {}
    for e, c in L.poly.terms.items():
        terms[names[e.index(1)]] = c
    return ExtElement(L.n + 1, terms)


def bracket_matrix_eval(M, S: Matrix) -> Matrix:
    """Evaluate a matrix of BracketPolys at one Stiefel matrix."""
    k1 = M[0][0].k + 1 if isinstance(M, list) else M[0, 0].k + 1
    rows = M if isinstance(M, list) else M.tolist()
    coords = pluecker_coords(S)
    if (S.rows, S.cols) != (k1, rows[0][0].n + 1):
        raise ValueError(f"bracket matrix needs a {k1}x{rows[0][0].n + 1} Stiefel matrix")
    return Matrix.from_rows([[eval_with_coords(x, coords) for x in r] for r in rows])
