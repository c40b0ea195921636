"""Resultants on the hyperelliptic curve s^2 = f(t), f = f1·f2.

Two functions a + b·s and c + d·s (deg a, c <= k; deg b, d <= k-g-1) have a
common zero on the curve iff the 4k×4k Sylvester-type determinant vanishes,
iff the 2k×2k Bézout determinant vanishes.  Polynomials are coefficient lists
from t^0 upwards.

Big brackets: the 2×3(k+1) matrix has rows (a | b·f1 | b·f2) and
(c | d·f1 | d·f2).  Column p <= k is written p, column p+(k+1) is p^(1) and
column q+2(k+1) is q^(2).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .arith import GF, Matrix, SparsePoly, det, gcd_univariate
from .exterior import ExtElement, ExtMatrix, ext_mat_mul, wedge
from .fixtures import bracket_matrix
from .grassmann import eval_with_coords, pluecker_coords

VERIFIED_K = 12


# ---------------------------------------------------------------------------
# polynomial helpers


def _trim(p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    return len(_trim(p)) - 1


def poly_mul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [p[0] * 0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x == 0:
            continue
        for j, y in enumerate(q):
            out[i + j] = out[i + j] + x * y
    return out


def poly_eval(p: Sequence, t):
    acc = 0
    for c in reversed(list(p)):
        acc = acc * t + c
    return acc


def pad(p: Sequence, length: int) -> list:
    p = _trim(p)
    if len(p) > length:
        raise ValueError(f"polynomial of degree {len(p) - 1} does not fit in {length} coefficients")
    zero = p[0] * 0 if p else 0
    return p + [zero] * (length - len(p))


# ---------------------------------------------------------------------------
# instances


@dataclass(frozen=True)
class HyperellipticInstance:
    g: int
    k: int
    f1: tuple
    f2: tuple
    a: tuple
    b: tuple
    c: tuple
    d: tuple

    def __post_init__(self):
        g, k = self.g, self.k
        if g < 0 or k < g + 1:
            raise ValueError(f"need 0 <= g and k >= g+1, got g={g}, k={k}")
        for name in ("f1", "f2", "a", "b", "c", "d"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        for name, bound in (("f1", g + 1), ("f2", g + 1), ("a", k), ("c", k), ("b", k - g - 1), ("d", k - g - 1)):
            if degree(getattr(self, name)) > bound:
                raise ValueError(f"deg {name} = {degree(getattr(self, name))} exceeds {bound}")
        if degree(self.f1) < 0 or degree(self.f2) < 0:
            raise ValueError("f1 and f2 must be nonzero")
        if degree(self.f) < 2 * g + 1:
            raise ValueError(f"deg f = {degree(self.f)} < 2g+1 = {2 * g + 1}")
        if k > VERIFIED_K:
            warnings.warn(f"k={k} lies beyond the verified range k <= {VERIFIED_K}", stacklevel=2)

    @property
    def f(self) -> list:
        return _trim(poly_mul(self.f1, self.f2))

    def is_squarefree(self) -> bool:
        F = SparsePoly.from_coeffs(self.f)
        return gcd_univariate(F, F.derivative()).degree() == 0

    def check(self) -> "HyperellipticInstance":
        if not self.is_squarefree():
            raise ValueError("f = f1·f2 is not squarefree")
        return self

    def map(self, fn) -> "HyperellipticInstance":
        return HyperellipticInstance(
            self.g, self.k, *[tuple(fn(x) for x in getattr(self, nm)) for nm in ("f1", "f2", "a", "b", "c", "d")]
        )


def random_instance(g: int, k: int, field: GF, rng, zero_bd: bool = False) -> HyperellipticInstance:
    """Random instance over ``field`` with deg f = 2g+2 squarefree."""
    while True:
        f1 = [field.random(rng) for _ in range(g + 1)] + [field.random(rng, nonzero=True)]
        f2 = [field.random(rng) for _ in range(g + 1)] + [field.random(rng, nonzero=True)]
        a = [field.random(rng) for _ in range(k + 1)]
        c = [field.random(rng) for _ in range(k + 1)]
        nb = k - g
        b = [field.zero] * nb if zero_bd else [field.random(rng) for _ in range(nb)]
        d = [field.zero] * nb if zero_bd else [field.random(rng) for _ in range(nb)]
        inst = HyperellipticInstance(g, k, f1, f2, a, b, c, d)
        if inst.is_squarefree():
            return inst


def planted_instance(g: int, k: int, field: GF, rng) -> tuple:
    """Random instance with a common zero at an affine curve point (t0, s0)."""
    inst = random_instance(g, k, field, rng)
    f = inst.f
    while True:
        t0 = field.random(rng)
        s0 = field.sqrt(poly_eval(f, t0))
        if s0 is not None:
            break
    a, c = list(inst.a), list(inst.c)
    a[0] = a[0] - (poly_eval(a, t0) + poly_eval(inst.b, t0) * s0)
    c[0] = c[0] - (poly_eval(c, t0) + poly_eval(inst.d, t0) * s0)
    return HyperellipticInstance(g, k, inst.f1, inst.f2, a, inst.b, c, inst.d), (t0, s0)


# ---------------------------------------------------------------------------
# Sylvester formula


def syl_block(k: int, r: Sequence) -> Matrix:
    """2k×k block with entry (κ, l) = r_{κ-l}."""
    r = pad(r, k + 1)
    zero = r[0] * 0
    return Matrix(
        2 * k, k, [[r[kap - l] if 0 <= kap - l <= k else zero for l in range(k)] for kap in range(2 * k)]
    )


def hyperelliptic_sylvester(inst: HyperellipticInstance) -> Matrix:
    k = inst.k
    bf1, bf2 = poly_mul(inst.b, inst.f1), poly_mul(inst.b, inst.f2)
    df1, df2 = poly_mul(inst.d, inst.f1), poly_mul(inst.d, inst.f2)
    S = lambda r: syl_block(k, r)  # noqa: E731
    return Matrix.block(
        [
            [S(inst.a), S(bf2), S(inst.c), S(df2)],
            [S(bf1), S(inst.a), S(df1), S(inst.c)],
        ]
    )


# ---------------------------------------------------------------------------
# Bézout formula


@lru_cache(maxsize=None)
def bezout_big_brackets(k: int) -> tuple:
    """The 2k×2k matrix A as lists of big-bracket column pairs (P, Q), 0-based labels."""
    one, two = k + 1, 2 * (k + 1)

    def sym_sum(i, j):
        return [(p, i + j - 1 - p) for p in range(min(i, j)) if p < i + j - 1 - p <= k]

    def cross_sum(i, j):
        return [(p, i + j - 1 - p) for p in range(min(j, k + 1)) if 0 <= i + j - 1 - p <= k]

    blocks = {}
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            blocks[(1, 1, i, j)] = [x for p, q in sym_sum(i, j) for x in ((p + two, q), (p, q + two))]
            blocks[(1, 2, i, j)] = sym_sum(i, j) + [(p + one, q + two) for p, q in cross_sum(i, j)]
            blocks[(2, 1, i, j)] = sym_sum(i, j) + [(p + two, q + one) for p, q in cross_sum(i, j)]
            blocks[(2, 2, i, j)] = [x for p, q in sym_sum(i, j) for x in ((p + one, q), (p, q + one))]
    rows = []
    for bi in (1, 2):
        for i in range(1, k + 1):
            rows.append(tuple(tuple(blocks[(bi, bj, i, j)]) for bj in (1, 2) for j in range(1, k + 1)))
    return tuple(rows)


def big_matrix(inst: HyperellipticInstance) -> Matrix:
    k = inst.k
    top = pad(inst.a, k + 1) + pad(poly_mul(inst.b, inst.f1), k + 1) + pad(poly_mul(inst.b, inst.f2), k + 1)
    bot = pad(inst.c, k + 1) + pad(poly_mul(inst.d, inst.f1), k + 1) + pad(poly_mul(inst.d, inst.f2), k + 1)
    return Matrix.from_rows([top, bot])


def hyperelliptic_bezout(inst: HyperellipticInstance) -> Matrix:
    """The 2k×2k Bézout matrix evaluated at the instance."""
    M = big_matrix(inst)
    (r0, r1) = M.data

    def minor(P, Q):
        return r0[P] * r1[Q] - r0[Q] * r1[P]

    zero = r0[0] * 0
    return Matrix.from_rows(
        [[sum((minor(P, Q) for P, Q in entry), start=zero) for entry in row] for row in bezout_big_brackets(inst.k)]
    )


def resultant(inst: HyperellipticInstance, method: str = "sylvester"):
    if method == "sylvester":
        return det(hyperelliptic_sylvester(inst))
    if method == "bezout":
        return det(hyperelliptic_bezout(inst))
    raise ValueError(f"unknown method {method!r} (expected 'sylvester' or 'bezout')")


# ---------------------------------------------------------------------------
# B·A = 0 with symbolic f1, f2 (fast packed kernel)
#
# An element of ΛV ⊗ Z[f1_0.., f2_0..] is a dict {key: int} with
# key = mask | (monomial << nV); monomials pack 4-bit exponents, so adding
# packed monomials multiplies them.


class _Packed:
    def __init__(self, g: int, k: int):
        self.g, self.k = g, k
        self.nV = 2 * k - g + 1
        self.nf = g + 2
        self.low = (1 << self.nV) - 1

    def fvar(self, which: int, i: int) -> int:
        """Packed monomial of the coefficient f^(which)_i."""
        return 1 << (4 * ((which - 1) * self.nf + i))

    def v(self, P: int) -> list:
        """Column functional v_P as [(generator, monomial, coeff)]."""
        k, g = self.k, self.g
        if P <= k:
            return [(P, 0, 1)]
        which, p = (1, P - (k + 1)) if P < 2 * (k + 1) else (2, P - 2 * (k + 1))
        return [
            (k + 1 + j, self.fvar(which, p - j), 1)
            for j in range(k - g)
            if 0 <= p - j <= g + 1
        ]

    def wedge2(self, P: int, Q: int) -> dict:
        out: dict = {}
        for i, mi, ci in self.v(P):
            for j, mj, cj in self.v(Q):
                if i == j:
                    continue
                sign = 1 if i < j else -1
                key = (1 << i | 1 << j) | ((mi + mj) << self.nV)
                out[key] = out.get(key, 0) + sign * ci * cj
        return {x: c for x, c in out.items() if c}

    def A(self) -> list:
        rows = []
        for row in bezout_big_brackets(self.k):
            out_row = []
            for entry in row:
                acc: dict = {}
                for P, Q in entry:
                    for key, c in self.wedge2(P, Q).items():
                        acc[key] = acc.get(key, 0) + c
                out_row.append({x: c for x, c in acc.items() if c})
            rows.append(out_row)
        return rows

    def B(self) -> list:
        """4k×2k matrix of degree-one elements [(generator, monomial, coeff)]."""
        k, g = self.k, self.g

        def E0(m):
            return [(m, 0, 1)] if 0 <= m <= k else []

        def E1f(which, m):
            return [
                (k + 1 + j, self.fvar(which, m - j), 1)
                for j in range(k - g)
                if 0 <= m - j <= g + 1
            ]

        rows = []
        for kap in range(2 * k):
            rows.append([E0(kap - l) for l in range(k)] + [E1f(2, kap - l) if kap >= l else [] for l in range(k)])
        for kap in range(2 * k):
            rows.append([E1f(1, kap - l) if kap >= l else [] for l in range(k)] + [E0(kap - l) for l in range(k)])
        return rows

    def product_is_zero(self, B: list, A: list) -> bool:
        nV, low = self.nV, self.low
        ncols = len(A[0])
        for brow in B:
            for j in range(ncols):
                acc: dict = {}
                for l, lin in enumerate(brow):
                    if not lin:
                        continue
                    col = A[l][j]
                    for gi, mono, c in lin:
                        bit = 1 << gi
                        shift = mono << nV
                        for key, x in col.items():
                            mask = key & low
                            if mask & bit:
                                continue
                            # e_gi ∧ e_S: gi passes the members of S below it
                            sign = -1 if (mask & (bit - 1)).bit_count() & 1 else 1
                            nk = (key | bit) + shift
                            acc[nk] = acc.get(nk, 0) + sign * c * x
                if any(acc.values()):
                    return False
        return True

    def symmetric(self, A: list) -> bool:
        n = len(A)
        return all(A[i][j] == A[j][i] for i in range(n) for j in range(i + 1, n))


def verify_BA_zero_hyper(g: int, k: int) -> bool:
    """B·A = 0 over ΛV with the coefficients of f1, f2 kept symbolic."""
    if not 1 <= g + 1 <= k:
        raise ValueError(f"need 1 <= g+1 <= k, got g={g}, k={k}")
    if k > VERIFIED_K:
        warnings.warn(f"k={k} lies beyond the verified range k <= {VERIFIED_K}", stacklevel=2)
    K = _Packed(g, k)
    return K.product_is_zero(K.B(), K.A())


def bezout_is_symmetric(g: int, k: int) -> bool:
    """A is symmetric once big brackets are expanded into small brackets."""
    K = _Packed(g, k)
    return K.symmetric(K.A())


# ---------------------------------------------------------------------------
# B·A = 0 through the generic exterior algebra (independent route, slower)


def _fvar_poly(g: int, which: int, i: int) -> SparsePoly:
    return SparsePoly.var(2 * (g + 2), (which - 1) * (g + 2) + i)


def exterior_B_hyper(g: int, k: int) -> ExtMatrix:
    nV = 2 * k - g + 1
    nvars = 2 * (g + 2)
    zero = ExtElement.zero(nV)
    one = SparsePoly.const(nvars, 1)
    E0 = [ExtElement.gen(nV, i, one) for i in range(k + 1)]

    def E1f(which, m):
        acc = zero
        for j in range(k - g):
            if 0 <= m - j <= g + 1:
                acc = acc + ExtElement.gen(nV, k + 1 + j, _fvar_poly(g, which, m - j))
        return acc

    def block(fn):
        return [[fn(kap - l) if 0 <= kap - l <= k else zero for l in range(k)] for kap in range(2 * k)]

    tl, tr = block(lambda m: E0[m]), block(lambda m: E1f(2, m))
    bl, br = block(lambda m: E1f(1, m)), block(lambda m: E0[m])
    rows = [a + b for a, b in zip(tl, tr)] + [a + b for a, b in zip(bl, br)]
    return ExtMatrix(4 * k, 2 * k, nV, rows)


def column_functional(g: int, k: int, P: int) -> ExtElement:
    nV = 2 * k - g + 1
    one = SparsePoly.const(2 * (g + 2), 1)
    if P <= k:
        return ExtElement.gen(nV, P, one)
    which, p = (1, P - (k + 1)) if P < 2 * (k + 1) else (2, P - 2 * (k + 1))
    acc = ExtElement.zero(nV)
    for j in range(k - g):
        if 0 <= p - j <= g + 1:
            acc = acc + ExtElement.gen(nV, k + 1 + j, _fvar_poly(g, which, p - j))
    return acc


def exterior_A_hyper(g: int, k: int) -> ExtMatrix:
    nV = 2 * k - g + 1
    v = [column_functional(g, k, P) for P in range(3 * (k + 1))]
    rows = []
    for row in bezout_big_brackets(k):
        out = []
        for entry in row:
            acc = ExtElement.zero(nV)
            for P, Q in entry:
                acc = acc + wedge(v[P], v[Q])
            out.append(acc)
        rows.append(out)
    return ExtMatrix(2 * k, 2 * k, nV, rows)


def verify_BA_zero_hyper_generic(g: int, k: int) -> bool:
    return ext_mat_mul(exterior_B_hyper(g, k), exterior_A_hyper(g, k)).is_zero()


# ---------------------------------------------------------------------------
# common-zero oracles


def _at_infinity(inst: HyperellipticInstance) -> bool:
    """Common zero over t = ∞: a_k + b_{k-g-1}σ = 0 = c_k + d_{k-g-1}σ with σ^2 = f_{2g+2}."""
    k, g = inst.k, inst.g
    ak, ck = pad(inst.a, k + 1)[k], pad(inst.c, k + 1)[k]
    bt, dt = pad(inst.b, k - g)[k - g - 1], pad(inst.d, k - g)[k - g - 1]
    ftop = pad(inst.f, 2 * g + 3)[2 * g + 2]
    return ak * ak == bt * bt * ftop and ck * ck == dt * dt * ftop and ak * dt == bt * ck


def curve_common_zero_oracle(inst: HyperellipticInstance, p: int | None = None, method: str = "gcd") -> bool:
    """Do a + b·s and c + d·s vanish together at a point of s^2 = f(t)?

    ``method="gcd"`` decides it over the algebraic closure: an affine common
    zero exists iff a^2 - b^2 f, c^2 - d^2 f and ad - bc share a root.
    ``method="scan"`` (small p only) tries every t in F_p and both square
    roots of f(t) in F_{p^2}.  Both also test the points over t = ∞.
    """
    if p is not None:
        field = GF(p)
        try:
            inst = inst.map(field)
        except ZeroDivisionError as exc:
            raise ValueError(f"bad reduction mod {p}: {exc}") from None
    if _at_infinity(inst):
        return True
    if method == "gcd":
        f = inst.f
        h1 = _trim([x - y for x, y in _zip_pad(poly_mul(inst.a, inst.a), poly_mul(poly_mul(inst.b, inst.b), f))])
        h2 = _trim([x - y for x, y in _zip_pad(poly_mul(inst.c, inst.c), poly_mul(poly_mul(inst.d, inst.d), f))])
        h3 = _trim([x - y for x, y in _zip_pad(poly_mul(inst.a, inst.d), poly_mul(inst.b, inst.c))])
        polys = [SparsePoly.from_coeffs(h) for h in (h1, h2, h3)]
        nonzero = [q for q in polys if not q.is_zero()]
        if not nonzero:
            return True
        acc = nonzero[0]
        for q in nonzero[1:]:
            acc = gcd_univariate(acc, q)
        return acc.degree() > 0
    if method == "scan":
        if p is None:
            raise ValueError("scanning needs a prime p")
        if p > 200_000:
            raise ValueError(f"p={p} is too large to scan")
        field = GF(p)
        for t0 in range(p):
            t = field(t0)
            a, b, c, d = (poly_eval(x, t) for x in (inst.a, inst.b, inst.c, inst.d))
            y = poly_eval(inst.f, t)
            s = field.sqrt(y)
            if s is None:
                # s lies in F_{p^2} - F_p, so a + b s = 0 forces a = b = 0
                if a == 0 and b == 0 and c == 0 and d == 0:
                    return True
                continue
            for root in {s.v, (-s).v}:
                if a + b * root == 0 and c + d * root == 0:
                    return True
        return False
    raise ValueError(f"unknown oracle method {method!r}")


def _zip_pad(p: list, q: list):
    n = max(len(p), len(q))
    zero = (p + q)[0] * 0 if p or q else 0
    return zip(p + [zero] * (n - len(p)), q + [zero] * (n - len(q)))


# ---------------------------------------------------------------------------
# elliptic case


@lru_cache(maxsize=None)
def _elliptic_fixture():
    from .fixtures import load_fixture

    return load_fixture("elliptic4")


def elliptic_matrix(a0, a1, a2, b0, c0, c1, c2, d0, r1, r2, r3) -> Matrix:
    M = bracket_matrix(_elliptic_fixture(), params=(r1, r2, r3))
    coords = pluecker_coords(Matrix.from_rows([[a0, a1, a2, b0], [c0, c1, c2, d0]]))
    return Matrix.from_rows([[eval_with_coords(x, coords) for x in r] for r in M])


def elliptic_resultant(a0, a1, a2, b0, c0, c1, c2, d0, r1, r2, r3):
    """det of the 4×4 matrix for a0 + a1 t + a2 t^2 + (b0/2)s and c0 + c1 t + c2 t^2 + (d0/2)s
    on s^2 = 4(t-r1)(t-r2)(t-r3)."""
    if r1 == r2 or r1 == r3 or r2 == r3:
        raise ValueError("the half-period values must be pairwise distinct")
    return det(elliptic_matrix(a0, a1, a2, b0, c0, c1, c2, d0, r1, r2, r3))


def elliptic_as_hyperelliptic(a0, a1, a2, b0, c0, c1, c2, d0, r1, r2, r3) -> HyperellipticInstance:
    """The same pair of functions with f1 = (t-r1)(t-r2), f2 = 4(t-r3), b = b0/2, d = d0/2."""
    half = 1 / (r1 * 0 + 2)
    f1 = (r1 * r2, -(r1 + r2), r1 * 0 + 1)
    f2 = (-4 * r3, r1 * 0 + 4)
    return HyperellipticInstance(1, 2, f1, f2, (a0, a1, a2), (b0 * half,), (c0, c1, c2), (d0 * half,))


def planted_elliptic(field: GF, rng) -> tuple:
    """Random (a, b0, c, d0, r) with a common zero at a point (t0, s0)."""
    while True:
        r = [field.random(rng) for _ in range(3)]
        if len({x.v for x in r}) == 3:
            break
    while True:
        t0 = field.random(rng)
        s0 = field.sqrt(4 * (t0 - r[0]) * (t0 - r[1]) * (t0 - r[2]))
        if s0 is not None:
            break
    a = [field.random(rng) for _ in range(3)]
    c = [field.random(rng) for _ in range(3)]
    b0, d0 = field.random(rng), field.random(rng)
    half = field(2).inverse()
    a[0] = a[0] - (poly_eval(a, t0) + b0 * half * s0)
    c[0] = c[0] - (poly_eval(c, t0) + d0 * half * s0)
    return (a[0], a[1], a[2], b0, c[0], c[1], c[2], d0, *r), (t0, s0)


__all__ = [
    "HyperellipticInstance",
    "bezout_big_brackets",
    "bezout_is_symmetric",
    "curve_common_zero_oracle",
    "elliptic_as_hyperelliptic",
    "elliptic_resultant",
    "hyperelliptic_bezout",
    "hyperelliptic_sylvester",
    "planted_elliptic",
    "planted_instance",
    "random_instance",
    "resultant",
    "syl_block",
    "verify_BA_zero_hyper",
    "verify_BA_zero_hyper_generic",
]
