"""Exterior algebras on indexed generators.

A basis monomial e_{i0} ∧ ... ∧ e_{ir} with i0 < ... < ir is stored as the
bitmask ``sum(1 << i)``; an :class:`ExtElement` maps bitmasks to nonzero
coefficients.  The same class models both ΛW (generators e_i) and its dual
ΛV (generators y_i); only the generator count has to agree.

Contraction convention: y_J acts on ΛW by iterated interior products, the
last generator of y_J acting first.  A single y_j is the signed derivation
y_j ⌟ e_S = (-1)^{#{s in S : s < j}} e_{S - j}.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .arith import Matrix


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def indices_of(mask: int) -> tuple:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@lru_cache(maxsize=1 << 20)
def wedge_sign(s: int, t: int) -> int:
    """Sign of e_S ∧ e_T relative to e_{S ∪ T}; 0 if S and T meet."""
    if s & t:
        return 0
    inversions = 0
    rest = t
    while rest:
        low = rest & -rest
        # members of S above this member of T must jump over it
        inversions += (s & ~((low << 1) - 1)).bit_count()
        rest ^= low
    return -1 if inversions & 1 else 1


@lru_cache(maxsize=1 << 20)
def contract_sign(j: int, s: int) -> int:
    """Sign of y_J ⌟ e_S relative to e_{S - J}; 0 unless J ⊆ S."""
    if j & ~s:
        return 0
    count = 0
    rest = j
    while rest:
        low = rest & -rest
        count += (s & (low - 1)).bit_count()
        rest ^= low
    return -1 if count & 1 else 1


def sort_sign(indices: Sequence[int]) -> int:
    """Sign of the permutation sorting ``indices``; 0 on a repeat."""
    if len(set(indices)) != len(indices):
        return 0
    inv = sum(1 for a, b in combinations(indices, 2) if a > b)
    return -1 if inv & 1 else 1


class ExtElement:
    """Element of the exterior algebra on ``ngens`` generators."""

    __slots__ = ("ngens", "terms")

    def __init__(self, ngens: int, terms: dict | None = None):
        self.ngens = ngens
        clean = {}
        limit = 1 << ngens
        for m, c in (terms or {}).items():
            if isinstance(m, tuple):
                sign = sort_sign(m)
                if sign == 0:
                    continue
                c = c if sign == 1 else -c
                m = mask_of(m)
            if not 0 <= m < limit:
                raise ValueError(f"monomial {indices_of(m)} uses an index >= {ngens}")
            if m in clean:
                c = clean[m] + c
            if c != 0:
                clean[m] = c
            else:
                clean.pop(m, None)
        self.terms = clean

    @classmethod
    def _raw(cls, ngens: int, terms: dict) -> "ExtElement":
        x = cls.__new__(cls)
        x.ngens = ngens
        x.terms = terms
        return x

    @classmethod
    def zero(cls, ngens: int) -> "ExtElement":
        return cls._raw(ngens, {})

    @classmethod
    def scalar(cls, ngens: int, c) -> "ExtElement":
        return cls._raw(ngens, {0: c} if c != 0 else {})

    @classmethod
    def gen(cls, ngens: int, i: int, c=1) -> "ExtElement":
        if not 0 <= i < ngens:
            raise ValueError(f"generator {i} out of range for {ngens} generators")
        return cls._raw(ngens, {1 << i: c})

    @classmethod
    def monomial(cls, ngens: int, indices: Sequence[int], c=1) -> "ExtElement":
        return cls(ngens, {tuple(indices): c})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "ExtElement":
        """Degree-one element Σ coeffs[i]·e_i."""
        return cls._raw(len(coeffs), {1 << i: c for i, c in enumerate(coeffs) if c != 0})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set:
        return {m.bit_count() for m in self.terms}

    def degree(self) -> int:
        """Degree of a homogeneous element (-1 for zero)."""
        ds = self.degrees()
        if not ds:
            return -1
        if len(ds) > 1:
            raise ValueError(f"element is not homogeneous (degrees {sorted(ds)})")
        return ds.pop()

    def items(self):
        """(index tuple, coefficient) pairs in a canonical order."""
        return sorted((indices_of(m), c) for m, c in self.terms.items())

    def coefficient(self, indices: Sequence[int]):
        sign = sort_sign(indices)
        if sign == 0:
            return 0
        c = self.terms.get(mask_of(indices), 0)
        return c if sign == 1 else -c

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "ExtElement"):
        if not isinstance(other, ExtElement):
            raise TypeError(f"expected ExtElement, got {type(other).__name__}")
        if other.ngens != self.ngens:
            raise ValueError(f"generator count mismatch: {self.ngens} vs {other.ngens}")

    def __add__(self, other):
        if other == 0 and not isinstance(other, ExtElement):
            return self
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v != 0:
                    out[m] = v
                else:
                    del out[m]
        return ExtElement._raw(self.ngens, out)

    __radd__ = __add__

    def __neg__(self):
        return ExtElement._raw(self.ngens, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ExtElement":
        if c == 0:
            return ExtElement._raw(self.ngens, {})
        out = {}
        for m, x in self.terms.items():
            v = x * c
            if v != 0:
                out[m] = v
        return ExtElement._raw(self.ngens, out)

    def __mul__(self, c):
        if isinstance(c, ExtElement):
            raise TypeError("use wedge() or ^ for the exterior product")
        return self.scale(c)

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if isinstance(other, ExtElement):
            return self.ngens == other.ngens and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def map_coeffs(self, f) -> "ExtElement":
        return ExtElement(self.ngens, {m: f(c) for m, c in self.terms.items()})

    def __repr__(self):
        return f"ExtElement({self.ngens}, {dict(self.items())!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c})*e_{''.join(map(str, idx))}" if idx else f"({c})"
            for idx, c in self.items()
        )


def wedge(u: ExtElement, v: ExtElement) -> ExtElement:
    """Exterior product u ∧ v."""
    u._check(v)
    out: dict = {}
    get = out.get
    for s, a in u.terms.items():
        for t, b in v.terms.items():
            if s & t:
                continue
            sign = wedge_sign(s, t)
            m = s | t
            prod = a * b if sign == 1 else -(a * b)
            prev = get(m)
            out[m] = prod if prev is None else prev + prod
    return ExtElement._raw(u.ngens, {m: c for m, c in out.items() if c != 0})


def wedge_all(factors: Sequence[ExtElement], ngens: int | None = None) -> ExtElement:
    if not factors:
        if ngens is None:
            raise ValueError("empty wedge product needs ngens")
        return ExtElement.scalar(ngens, 1)
    acc = factors[0]
    for f in factors[1:]:
        acc = wedge(acc, f)
    return acc


def contract(a: ExtElement, w: ExtElement) -> ExtElement:
    """The action a ⌟ w of the dual exterior algebra on w."""
    a._check(w)
    out: dict = {}
    get = out.get
    for j, x in a.terms.items():
        for s, c in w.terms.items():
            if j & ~s:
                continue
            sign = contract_sign(j, s)
            m = s & ~j
            prod = x * c if sign == 1 else -(x * c)
            prev = get(m)
            out[m] = prod if prev is None else prev + prod
    return ExtElement._raw(w.ngens, {m: c for m, c in out.items() if c != 0})


def top_coefficient(w: ExtElement):
    """Coefficient of e_0 ∧ ... ∧ e_{n} (orientation fixed once and for all)."""
    return w.terms.get((1 << w.ngens) - 1, 0)


def basis(ngens: int, degree: int) -> list:
    """Bitmasks of the degree-``degree`` monomials, in lex order of index tuples."""
    return [mask_of(c) for c in combinations(range(ngens), degree)]


def random_element(ngens: int, degree: int, rng, low: int = -5, high: int = 5) -> ExtElement:
    """Random homogeneous element with small integer coefficients."""
    terms = {m: int(rng.integers(low, high + 1)) for m in basis(ngens, degree)}
    return ExtElement(ngens, terms)


# ---------------------------------------------------------------------------
# matrices over an exterior algebra


class ExtMatrix:
    """Dense matrix of ExtElements sharing one generator count."""

    __slots__ = ("rows", "cols", "ngens", "data")

    def __init__(self, rows: int, cols: int, ngens: int, data):
        data = [list(r) for r in data]
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"entries do not form a {rows}x{cols} matrix")
        for r in data:
            for x in r:
                if x.ngens != ngens:
                    raise ValueError(f"entry over {x.ngens} generators, expected {ngens}")
        self.rows, self.cols, self.ngens = rows, cols, ngens
        self.data = tuple(tuple(r) for r in data)

    @classmethod
    def zeros(cls, rows: int, cols: int, ngens: int) -> "ExtMatrix":
        z = ExtElement.zero(ngens)
        return cls(rows, cols, ngens, [[z] * cols for _ in range(rows)])

    @classmethod
    def scalar_identity(cls, n: int, ngens: int) -> "ExtMatrix":
        one, z = ExtElement.scalar(ngens, 1), ExtElement.zero(ngens)
        return cls(n, n, ngens, [[one if i == j else z for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.data for x in r)

    def transpose(self) -> "ExtMatrix":
        return ExtMatrix(self.cols, self.rows, self.ngens, zip(*self.data))

    def map(self, f) -> "ExtMatrix":
        return ExtMatrix(self.rows, self.cols, self.ngens, [[f(x) for x in r] for r in self.data])

    def __eq__(self, other):
        return (
            isinstance(other, ExtMatrix)
            and (self.rows, self.cols, self.ngens) == (other.rows, other.cols, other.ngens)
            and all(a == b for r, s in zip(self.data, other.data) for a, b in zip(r, s))
        )

    __hash__ = None

    def __matmul__(self, other: "ExtMatrix") -> "ExtMatrix":
        return ext_mat_mul(self, other)

    def to_matrix(self) -> Matrix:
        return Matrix(self.rows, self.cols, self.data)

    def __repr__(self):
        return f"ExtMatrix({self.rows}x{self.cols} over {self.ngens} generators)"


def ext_mat_mul(A: ExtMatrix, B: ExtMatrix) -> ExtMatrix:
    """Matrix product with entries Σ_l A[i,l] ∧ B[l,j]."""
    if A.cols != B.rows:
        raise ValueError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    if A.ngens != B.ngens:
        raise ValueError(f"generator count mismatch: {A.ngens} vs {B.ngens}")
    n = A.ngens
    out = []
    for i in range(A.rows):
        row = []
        for j in range(B.cols):
            acc = ExtElement.zero(n)
            for l in range(A.cols):
                a, b = A.data[i][l], B.data[l][j]
                if a.terms and b.terms:
                    acc = acc + wedge(a, b)
            row.append(acc)
        out.append(row)
    return ExtMatrix(A.rows, B.cols, n, out)


# ---------------------------------------------------------------------------
# the sign identity for duals of α-maps


def gr_sign(k: int, i: int, j: int) -> int:
    return -1 if (k * (i + j) + i * j) % 2 else 1


def _random_subspace_element(basis_vecs: list, degree: int, ngens: int, rng) -> ExtElement:
    """Random element of Λ^degree U, U spanned by ``basis_vecs`` (degree-1 elements)."""
    acc = ExtElement.zero(ngens)
    for combo in combinations(range(len(basis_vecs)), degree):
        c = int(rng.integers(-4, 5))
        if c == 0:
            continue
        acc = acc + wedge_all([basis_vecs[t] for t in combo], ngens).scale(c)
    return acc


def check_gr_signs(v: int, k: int, i: int, j: int, trials: int = 20, rng=None) -> bool:
    """Test a(γ) ∧ β = (-1)^{k(i+j)+ij} a(β) ∧ γ on random data.

    W has dimension ``v``; U ⊂ W is a random (k+1)-dimensional subspace,
    β ∈ Λ^{k+1-i}U, γ ∈ Λ^{k+1-j}U and a = α ⌟ (y_0 ∧ ... ∧ y_{v-1}) for a
    random α ∈ Λ^{c+i+j}W with c = v-k-1.  Both sides live in the line
    Λ^{k+1}U and are compared exactly.
    """
    import numpy as np

    if not (0 <= i <= k + 1 and 0 <= j <= k + 1 and k + 1 <= v and k + 1 - i - j >= 0):
        raise ValueError(f"degree constraints violated for v={v}, k={k}, i={i}, j={j}")
    rng = np.random.default_rng(0) if rng is None else rng
    c = v - k - 1
    sign = gr_sign(k, i, j)
    full = ExtElement._raw(v, {(1 << v) - 1: 1})
    for _ in range(trials):
        u_basis = [ExtElement.linear([int(x) for x in rng.integers(-4, 5, size=v)]) for _ in range(k + 1)]
        alpha = random_element(v, c + i + j, rng)
        a = contract(alpha, full)
        beta = _random_subspace_element(u_basis, k + 1 - i, v, rng)
        gamma = _random_subspace_element(u_basis, k + 1 - j, v, rng)
        lhs = wedge(contract(a, gamma), beta)
        rhs = wedge(contract(a, beta), gamma)
        if lhs != rhs.scale(sign):
            return False
    return True
