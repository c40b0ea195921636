"""Closed formulas for Ulrich sheaves on Veronese embeddings, and betti tables.

Conventions: ``k`` is the dimension of the projective space P^k and ``d`` the
degree of the Veronese embedding.  A betti table stores h^i(F(j-i)) in row i
and column j, rows listed from the top (largest i) down.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Sequence

from sympy import factorint


def ulrich_chi(h0: int, k: int, d: int, e: int) -> Fraction:
    """χ(F(e)) = h0 · binom(e/d + k, k) for an Ulrich sheaf on the d-uple P^k."""
    if d < 1 or k < 0:
        raise ValueError(f"need d >= 1 and k >= 0, got d={d}, k={k}")
    x = Fraction(e, d)
    return h0 * prod((x + i for i in range(1, k + 1)), start=Fraction(1)) / factorial(k)


def legendre_valuation(k: int, p: int) -> int:
    """Exponent of the prime p in k!."""
    v, q = 0, p
    while q <= k:
        v += k // q
        q *= p
    return v


def min_rank_divisor(k: int, d: int) -> int:
    """∏_{p | d} p^{v_p(k!)}: every Ulrich sheaf on the d-uple P^k has rank divisible by it."""
    if k < 1 or d < 1:
        raise ValueError(f"need k >= 1 and d >= 1, got k={k}, d={d}")
    return prod((p ** legendre_valuation(k, p) for p in factorint(d)), start=1)


def _check_partition(lam: Sequence[int]) -> tuple:
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not a partition")
    return lam


def hook_lengths(lam: Sequence[int]) -> dict:
    """Hook length of each box (row, col), both 1-based."""
    lam = _check_partition(lam)
    conj = [sum(1 for x in lam if x >= c) for c in range(1, (lam[0] if lam else 0) + 1)]
    return {
        (r, c): (lam[r - 1] - c) + (conj[c - 1] - r) + 1
        for r in range(1, len(lam) + 1)
        for c in range(1, lam[r - 1] + 1)
    }


def schur_rank(lam: Sequence[int], n: int) -> int:
    """Rank of S_λ Q for Q of rank n: the product over boxes of (n + col - row)/hook."""
    hooks = hook_lengths(lam)
    value = prod((Fraction(n + c - r, h) for (r, c), h in hooks.items()), start=Fraction(1))
    if value.denominator != 1:
        raise ArithmeticError(f"hook-content product for {tuple(lam)}, n={n} is {value}, not an integer")
    return value.numerator


def ulrich_partition(n: int, d: int) -> tuple:
    """((d-1)(n-1), (d-1)(n-2), ..., d-1, 0)."""
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    return tuple((d - 1) * (n - 1 - i) for i in range(n))


def homogeneous_ulrich_rank(n: int, d: int) -> int:
    lam = ulrich_partition(n, d)
    hooks = hook_lengths(lam)
    if hooks and hooks[(1, 1)] != d * (n - 1) - 1:
        raise ArithmeticError(f"corner hook {hooks[(1, 1)]} != d(n-1)-1 = {d * (n - 1) - 1}")
    return schur_rank(lam, n)


def weakly_ulrich_line_range(k: int, d: int) -> range:
    """Twists j with O(j) weakly Ulrich on the d-uple P^k: (k-2)d - k <= j <= d-1."""
    if k < 1 or d < 1:
        raise ValueError(f"need k >= 1 and d >= 1, got k={k}, d={d}")
    return range((k - 2) * d - k, d)


def instanton_c2(d: int) -> int:
    """c_2 = (d^2-1)/3 of the rank-2 Ulrich bundle on the d-uple P^3."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    if d % 3 == 0:
        raise ValueError(f"d={d} is divisible by 3: no rank-2 Ulrich sheaf exists")
    return (d * d - 1) // 3


# ---------------------------------------------------------------------------
# betti tables


@dataclass(frozen=True)
class BettiTable:
    """Window of a Tate resolution diagram.

    ``rows[r][c]`` is h^i(F(j-i)) with i = top_index - r and
    j = c - origin_column; ``None`` marks a cell outside the displayed data.
    """

    rows: tuple
    top_index: int
    origin_column: int

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if len(rows) != self.top_index + 1:
            raise ValueError(f"{len(rows)} rows for cohomological degrees 0..{self.top_index}")
        if len({len(r) for r in rows}) > 1:
            raise ValueError("rows have different lengths")
        for r in rows:
            for x in r:
                if x is not None and (not isinstance(x, int) or x < 0):
                    raise ValueError(f"betti entries must be non-negative integers, got {x!r}")
        object.__setattr__(self, "rows", rows)

    @property
    def width(self) -> int:
        return len(self.rows[0])

    def columns(self) -> range:
        return range(-self.origin_column, self.width - self.origin_column)

    def entry(self, i: int, j: int):
        """h^i(F(j-i)); None if not displayed."""
        r, c = self.top_index - i, j + self.origin_column
        if not (0 <= r < len(self.rows) and 0 <= c < self.width):
            return None
        return self.rows[r][c]

    def h(self, i: int, e: int):
        return self.entry(i, e + i)

    def chi(self, e: int):
        """Σ (-1)^i h^i(F(e)), or None if a needed cell is not displayed."""
        total = 0
        for i in range(self.top_index + 1):
            v = self.h(i, e)
            if v is None:
                return None
            total += -v if i % 2 else v
        return total

    def chi_values(self) -> dict:
        out = {}
        for e in range(-self.origin_column - self.top_index - 1, self.width):
            v = self.chi(e)
            if v is not None:
                out[e] = v
        return out

    def to_text(self) -> str:
        cols = list(self.columns())
        cells = [[str(j) for j in cols]] + [
            ["..." if x is None else ("." if x == 0 else str(x)) for x in r] for r in self.rows
        ]
        labels = ["j"] + [f"h{self.top_index - r}" for r in range(len(self.rows))]
        w = max(len(c) for row in cells for c in row)
        lw = max(len(x) for x in labels)
        return "\n".join(
            f"{lab:>{lw}} " + " ".join(f"{c:>{w}}" for c in row) for lab, row in zip(labels, cells)
        )


def rank2_p2_tate_table(d: int) -> BettiTable:
    """Tate diagram of a rank-2 Ulrich bundle on the d-uple P^2, columns -3d..0.

    h^0(F(e)) = (e+d)(e+2d) for e > -d, h^1 = -(e+d)(e+2d) for -2d < e < -d,
    h^2 = (e+d)(e+2d) for e < -2d.
    """
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")

    def h(i, e):
        chi = (e + d) * (e + 2 * d)
        if i == 0 and e > -d:
            return chi
        if i == 1 and -2 * d < e < -d:
            return -chi
        if i == 2 and e < -2 * d:
            return chi
        return 0

    cols = range(-3 * d, 1)
    rows = [[h(i, j - i) for j in cols] for i in (2, 1, 0)]
    return BettiTable(rows=rows, top_index=2, origin_column=3 * d)


def betti_from_fixture(obj: dict) -> BettiTable:
    return BettiTable(rows=obj["rows"], top_index=obj["top_index"], origin_column=obj["origin_column"])


def chi_polynomial(values: dict) -> list:
    """Interpolating polynomial through (e, χ(e)) points, as exact coefficients low to high."""
    from sympy import Rational, interpolate, symbols, Poly

    x = symbols("x")
    pts = [(Rational(e), Rational(v)) for e, v in sorted(values.items())]
    poly = Poly(interpolate(pts, x), x)
    return [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]


__all__ = [
    "BettiTable",
    "betti_from_fixture",
    "chi_polynomial",
    "hook_lengths",
    "homogeneous_ulrich_rank",
    "instanton_c2",
    "legendre_valuation",
    "min_rank_divisor",
    "rank2_p2_tate_table",
    "schur_rank",
    "ulrich_chi",
    "ulrich_partition",
    "weakly_ulrich_line_range",
]
