"""Exact scalars, sparse multivariate polynomials and dense matrices.

Scalars are either :class:`fractions.Fraction` (plain ``int`` is accepted
wherever a rational is) or :class:`ModP` elements of a prime field.  Every
container in the package is generic over the coefficient ring: anything
supporting ``+ - *`` and comparison with ``0`` works, and exact division is
looked up through :func:`exquo`.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from sympy.ntheory import isprime

DEFAULT_PRIME = 2**31 - 1


def default_prime() -> int:
    """Modulus used for randomized checks; ``CHOWKIT_PRIME`` overrides it."""
    value = os.environ.get("CHOWKIT_PRIME")
    return int(value) if value else DEFAULT_PRIME


# ---------------------------------------------------------------------------
# prime fields


class ModP:
    """Element of Z/p.  Immutable; mixes freely with ``int`` and ``Fraction``."""

    __slots__ = ("v", "p")

    def __init__(self, value, p: int):
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {p}")
            value = value.numerator * pow(value.denominator, -1, p)
        elif isinstance(value, ModP):
            if value.p != p:
                raise ValueError(f"cannot move {value} into Z/{p}")
            value = value.v
        self.v = int(value) % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return ModP(other, self.p).v
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError("division by zero in Z/p")
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(o, self.p) / self

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return ModP(pow(pow(self.v, -1, self.p), -e, self.p), self.p)
        return ModP(pow(self.v, e, self.p), self.p)

    def inverse(self) -> "ModP":
        return ModP(pow(self.v, -1, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.v == o

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return f"{self.v} mod {self.p}"


class GF:
    """The prime field Z/p; calling it coerces a value into the field."""

    def __init__(self, p: int | None = None):
        p = default_prime() if p is None else int(p)
        if not isprime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def __call__(self, value) -> ModP:
        return ModP(value, self.p)

    @property
    def zero(self) -> ModP:
        return ModP(0, self.p)

    @property
    def one(self) -> ModP:
        return ModP(1, self.p)

    def random(self, rng, nonzero: bool = False) -> ModP:
        lo = 1 if nonzero else 0
        return ModP(int(rng.integers(lo, self.p)), self.p)

    def sqrt(self, a) -> ModP | None:
        """A square root of ``a`` in the field, or None for a non-residue."""
        from sympy.ntheory import sqrt_mod

        r = sqrt_mod(int(ModP(a, self.p)), self.p)
        return None if r is None else ModP(r, self.p)

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def parse_scalar(text: str):
    """Parse ``"p/q"``, ``"n"`` or ``"r mod p"`` into an exact scalar."""
    text = text.strip()
    if " mod " in text:
        r, p = text.split(" mod ")
        return GF(int(p))(int(r))
    return Fraction(text)


def format_scalar(x) -> str:
    """Inverse of :func:`parse_scalar`."""
    if isinstance(x, ModP):
        return str(x)
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def is_zero(x) -> bool:
    return x == 0


def exquo(a, b):
    """Exact quotient ``a / b``; raises if the division leaves a remainder."""
    if isinstance(a, SparsePoly) or isinstance(b, SparsePoly):
        if not isinstance(a, SparsePoly):
            a = SparsePoly.const(b.nvars, a)
        return a.exquo(b)
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return a / b


# ---------------------------------------------------------------------------
# sparse polynomials


def _cdiv(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return a / b


class SparsePoly:
    """Polynomial in ``nvars`` variables: ``{exponent tuple: coefficient}``.

    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        if terms:
            for e in terms:
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have length {nvars}")
            self.terms = {e: c for e, c in terms.items() if c != 0}
        else:
            self.terms = {}

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "SparsePoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def const(cls, nvars: int, c) -> "SparsePoly":
        return cls._raw(nvars, {(0,) * nvars: c} if c != 0 else {})

    @classmethod
    def var(cls, nvars: int, i: int, c=1) -> "SparsePoly":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): c})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "SparsePoly":
        """Univariate polynomial from coefficients listed low to high."""
        return cls._raw(1, {(i,): c for i, c in enumerate(coeffs) if c != 0})

    def coeffs(self, length: int | None = None) -> list:
        """Univariate coefficient list, low to high (zero-padded to ``length``)."""
        if self.nvars != 1:
            raise ValueError("coeffs() needs a univariate polynomial")
        n = self.degree() + 1 if length is None else length
        if self.terms and self.degree() >= n:
            raise ValueError(f"degree {self.degree()} does not fit in {n} coefficients")
        out = [0] * max(n, 0)
        for (i,), c in self.terms.items():
            out[i] = c
        return out

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def leading_term(self):
        """Lex-largest exponent and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    # -- arithmetic --------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return SparsePoly.const(self.nvars, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v != 0:
                    out[e] = v
                else:
                    del out[e]
        return SparsePoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            if other == 0:
                return SparsePoly._raw(self.nvars, {})
            return SparsePoly._raw(
                self.nvars, {e: c * other for e, c in self.terms.items() if c * other != 0}
            )
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        out: dict = {}
        get = out.get
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = get(e)
                out[e] = ca * cb if v is None else v + ca * cb
        return SparsePoly._raw(self.nvars, {e: c for e, c in out.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = SparsePoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            return self.terms == SparsePoly.const(self.nvars, other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def exquo(self, other: "SparsePoly") -> "SparsePoly":
        """Exact division by lex leading terms; ``ValueError`` on a remainder."""
        other = self._lift(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        le, lc = other.leading_term()
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            m = max(rem)
            shift = tuple(a - b for a, b in zip(m, le))
            if min(shift) < 0:
                raise ValueError("polynomial division is not exact")
            c = _cdiv(rem[m], lc)
            quot[shift] = c
            for e, d in other.terms.items():
                t = tuple(a + b for a, b in zip(e, shift))
                v = rem.get(t, 0) - c * d
                if v != 0:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return SparsePoly._raw(self.nvars, quot)

    def eval(self, point: Sequence):
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)}, expected {self.nvars}")
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x**k
            total = total + t
        return total

    def map_coeffs(self, f: Callable) -> "SparsePoly":
        return SparsePoly(self.nvars, {e: f(c) for e, c in self.terms.items()})

    def derivative(self, i: int = 0) -> "SparsePoly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return SparsePoly(self.nvars, out)

    def __repr__(self):
        return f"SparsePoly({self.nvars}, {self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        names = ["t"] if self.nvars == 1 else [f"x{i}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            c = self.terms[e]
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


def eval_poly(p: SparsePoly, point: Sequence):
    return p.eval(point)


def _field_coeff(c):
    return Fraction(c) if isinstance(c, int) else c


def poly_divmod(f: SparsePoly, g: SparsePoly):
    """Univariate division with remainder over a field."""
    if not g.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    dg = g.degree()
    lc = _field_coeff(g.terms[(dg,)])
    rem = {e: _field_coeff(c) for e, c in f.terms.items()}
    quot = {}
    while rem:
        (dr,) = max(rem)
        if dr < dg:
            break
        c = rem[(dr,)] / lc
        quot[(dr - dg,)] = c
        for (e,), d in g.terms.items():
            t = (e + dr - dg,)
            v = rem.get(t, 0) - c * d
            if v != 0:
                rem[t] = v
            else:
                rem.pop(t, None)
    return SparsePoly._raw(1, quot), SparsePoly._raw(1, rem)


def gcd_univariate(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """Monic gcd of two univariate polynomials over a field."""
    if f.nvars != 1 or g.nvars != 1:
        raise ValueError("gcd_univariate needs univariate polynomials")
    if not f.terms and not g.terms:
        raise ValueError("gcd of two zero polynomials is undefined")
    while g.terms:
        f, g = g, poly_divmod(f, g)[1]
    lc = _field_coeff(f.terms[(f.degree(),)])
    return SparsePoly._raw(1, {e: _field_coeff(c) / lc for e, c in f.terms.items()})


# ---------------------------------------------------------------------------
# dense matrices


class Matrix:
    """Dense row-major matrix over any ring; immutable."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Iterable):
        data = tuple(tuple(r) for r in data)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"entries do not form a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, rows)

    @classmethod
    def fill(cls, rows: int, cols: int, value) -> "Matrix":
        return cls(rows, cols, [[value] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int, one=1, zero=0) -> "Matrix":
        return cls(n, n, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        rows = []
        for brow in blocks:
            for i in range(brow[0].rows):
                rows.append([x for b in brow for x in b.data[i]])
        return cls.from_rows(rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def tolist(self) -> list:
        return [list(r) for r in self.data]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, zip(*self.data)) if self.rows else Matrix(self.cols, 0, [[]] * self.cols)

    T = property(transpose)

    def map(self, f: Callable) -> "Matrix":
        return Matrix(self.rows, self.cols, [[f(x) for x in r] for r in self.data])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(len(rows), len(cols), [[self.data[i][j] for j in cols] for i in rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ocols = other.col
        out = []
        cols = [ocols(j) for j in range(other.cols)]
        for r in self.data:
            out.append([_dot(r, c) for c in cols])
        return Matrix(self.rows, other.cols, out)

    def __mul__(self, scalar) -> "Matrix":
        return self.map(lambda x: x * scalar)

    def __rmul__(self, scalar) -> "Matrix":
        return self.map(lambda x: scalar * x)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.rows, self.cols, [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and all(a == b for r, s in zip(self.data, other.data) for a, b in zip(r, s))
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def det(self, method: str = "auto"):
        return det(self, method)

    def pfaffian(self):
        return pfaffian(self)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def _dot(r, c):
    acc = None
    for a, b in zip(r, c):
        if a == 0 or b == 0:
            prod = None
        else:
            prod = a * b
        if prod is not None:
            acc = prod if acc is None else acc + prod
    if acc is None:
        # keep the ring of the entries: a structured zero, not the int 0
        return r[0] * c[0] if r else 0
    return acc


def _has_division(x) -> bool:
    return isinstance(x, (int, Fraction, ModP, SparsePoly))


def det(m: Matrix, method: str = "auto"):
    """Determinant over an integral domain.

    ``method`` is ``"bareiss"`` (fraction-free elimination, needs exact
    division), ``"cofactor"`` (Laplace expansion, any commutative ring) or
    ``"auto"``.
    """
    if not m.is_square():
        raise ValueError(f"det of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return 1
    if method == "auto":
        method = "bareiss" if all(_has_division(x) for r in m.data for x in r) else "cofactor"
    if method == "cofactor":
        return _cofactor_det([list(r) for r in m.data])
    if method != "bareiss":
        raise ValueError(f"unknown det method {method!r}")
    return _bareiss([list(r) for r in m.data])


def _cofactor_det(a: list):
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = None
    for j in range(n):
        if a[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * _cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return a[0][0] * 0 if total is None else total


def _divider(prev):
    if isinstance(prev, ModP):
        inv = prev.inverse()
        return lambda x: x * inv
    if prev == 1 and not isinstance(prev, SparsePoly):
        return lambda x: x
    return lambda x: exquo(x, prev)


def _bareiss(a: list):
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k] * 0
        div = _divider(prev)
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                if aik == 0:
                    v = rowi[j] * akk
                else:
                    v = rowi[j] * akk - aik * rowk[j]
                rowi[j] = div(v)
        prev = akk
    return a[n - 1][n - 1] if sign == 1 else -a[n - 1][n - 1]


def check_skew(m: Matrix) -> None:
    if not m.is_square():
        raise ValueError(f"Pfaffian of a non-square {m.rows}x{m.cols} matrix")
    for i in range(m.rows):
        if m[i, i] != 0:
            raise ValueError(f"diagonal entry ({i},{i}) is nonzero")
        for j in range(i + 1, m.rows):
            if m[i, j] != -m[j, i]:
                raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not negatives")


def pfaffian(m: Matrix):
    """Pfaffian by expansion along the first remaining row (memoized)."""
    check_skew(m)
    n = m.rows
    if n % 2:
        raise ValueError(f"Pfaffian of odd order {n}")
    if n == 0:
        return 1
    a = m.data

    @lru_cache(maxsize=None)
    def pf(mask: int):
        if mask == 0:
            return None  # empty product, handled by caller
        idx = [i for i in range(n) if mask >> i & 1]
        i0 = idx[0]
        total = None
        for pos, j in enumerate(idx[1:], start=1):
            x = a[i0][j]
            if x == 0:
                continue
            rest = pf(mask & ~(1 << i0) & ~(1 << j))
            term = x if rest is None else (x * rest if rest != 0 else None)
            if term is None:
                continue
            if pos % 2 == 0:
                term = -term
            total = term if total is None else total + term
        return a[i0][idx[1]] * 0 if total is None else total

    result = pf((1 << n) - 1)
    return result
