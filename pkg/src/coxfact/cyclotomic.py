"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A :class:`CycloNum` stores a polynomial in ``zeta_m`` reduced modulo the
m-th cyclotomic polynomial, with :class:`fractions.Fraction` coefficients.
Values of different orders are combined by lifting both operands into
``Q(zeta_lcm)``.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "CycloNum",
    "UnityExponent",
    "cyclotomic_polynomial",
    "euler_phi",
    "zeta",
    "add",
    "mul",
    "neg",
    "power",
    "conjugate",
    "as_rational",
]


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def _poly_divmod(num: list[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    # den is monic; coefficient lists are low degree first
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    return quot, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
        assert not any(rem), (m, d)
    return tuple(poly)


@lru_cache(maxsize=None)
def _phi_tail(m: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    # degree of Phi_m and its nonzero non-leading terms
    phi = cyclotomic_polynomial(m)
    return len(phi) - 1, tuple((j, c) for j, c in enumerate(phi[:-1]) if c)


@lru_cache(maxsize=None)
def _power_residue(m: int, i: int) -> tuple[tuple[int, int], ...]:
    """Sparse integer coefficients (j, c) of x**i mod Phi_m, for i < m."""
    deg, tail = _phi_tail(m)
    if i < deg:
        return ((i, 1),)
    # x**i = x * x**(i-1), and x**deg = -sum(tail)
    prev = dict(_power_residue(m, i - 1))
    top = prev.pop(deg - 1, 0)
    out = {j + 1: c for j, c in prev.items()}
    for j, c in tail:
        out[j] = out.get(j, 0) - top * c
    return tuple(sorted((j, c) for j, c in out.items() if c))


def _reduce_int(nums: Sequence[int], m: int) -> list[int]:
    """Integer polynomial -> coefficients modulo Phi_m (length phi(m))."""
    deg, _ = _phi_tail(m)
    if len(nums) <= deg:
        return list(nums) + [0] * (deg - len(nums))
    # fold with x**m = 1, then substitute the residues of the high powers
    work = [0] * max(deg, min(len(nums), m))
    for i, c in enumerate(nums):
        if c:
            work[i % m] += c
    out = work[:deg]
    for i in range(deg, len(work)):
        c = work[i]
        if c:
            for j, x in _power_residue(m, i):
                out[j] += c * x
    return out


def _common_denominator(values: Sequence) -> tuple[list[int], int]:
    fr = [v if isinstance(v, int) else Fraction(v) for v in values]
    den = 1
    for c in fr:
        if not isinstance(c, int) and c.denominator != 1:
            den = den // gcd(den, c.denominator) * c.denominator
    nums = [c * den if isinstance(c, int) else c.numerator * (den // c.denominator) for c in fr]
    return nums, den


def _substitute_power_int(nums: Sequence[int], t: int, m: int) -> list[int]:
    """p(x) -> p(x**t) mod Phi_m, integer coefficients."""
    out = [0] * m
    for i, c in enumerate(nums):
        if c:
            out[(i * t) % m] += c
    return _reduce_int(out, m)


def _substitute_power(coeffs: Sequence[Fraction], t: int, m: int) -> tuple[Fraction, ...]:
    """Send zeta to zeta_m**t, i.e. p(x) -> p(x**t) mod Phi_m."""
    nums, den = _common_denominator(coeffs)
    return tuple(Fraction(x, den) for x in _substitute_power_int(nums, t, m))


class CycloNum:
    """An element of Q(zeta_m) in the power basis 1, zeta_m, ..., zeta_m**(phi(m)-1).

    Stored as integer numerators over one positive denominator.  The order is
    not required to be minimal; equality and hashing are order independent.
    """

    __slots__ = ("order", "num", "den", "_hash")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        nums, den = _common_denominator(list(coeffs))
        self._set(order, _reduce_int(nums, order), den)

    def _set(self, order: int, num: Sequence[int], den: int) -> None:
        g = den
        for x in num:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if not any(num):
            g = den
        self.order = order
        self.num = tuple(x // g for x in num) if g != 1 else tuple(num)
        self.den = den // g
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def _from_int(cls, order: int, num: Sequence[int], den: int = 1) -> "CycloNum":
        obj = cls.__new__(cls)
        if den < 0:
            num, den = [-x for x in num], -den
        obj._set(order, num, den)
        return obj

    @classmethod
    def _raw(cls, order: int, coeffs: Sequence) -> "CycloNum":
        nums, den = _common_denominator(coeffs)
        return cls._from_int(order, nums, den)

    @classmethod
    def rational(cls, value) -> "CycloNum":
        if isinstance(value, int):
            return cls._from_int(1, (value,), 1)
        q = Fraction(value)
        return cls._from_int(1, (q.numerator,), q.denominator)

    @classmethod
    def coerce(cls, value) -> "CycloNum":
        if isinstance(value, CycloNum):
            return value
        if isinstance(value, (int, Rational)):
            return cls.rational(value)
        raise TypeError(f"cannot convert {type(value).__name__} to CycloNum")

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.num)

    # -- order handling -----------------------------------------------------

    def lift(self, order: int) -> "CycloNum":
        """Re-express in Q(zeta_order); ``order`` must be a multiple of self.order."""
        if order % self.order:
            raise ValueError(f"order {order} is not a multiple of {self.order}")
        if order == self.order:
            return self
        return CycloNum._from_int(order, _substitute_power_int(self.num, order // self.order, order), self.den)

    def canonical(self) -> "CycloNum":
        """Equal value expressed at the smallest order whose field contains it."""
        m = self.order
        if m == 1 or not any(self.num[1:]):
            return CycloNum._from_int(1, self.num[:1], self.den)
        for d in _divisors(m)[1:-1]:
            sub = self._descend(d)
            if sub is not None:
                return sub
        return self

    def _descend(self, d: int) -> CycloNum | None:
        # Solve sum_j x_j * zeta_d**j == self inside Q(zeta_m) over Q.
        m = self.order
        t = m // d
        cols = [tuple(Fraction(x) for x in _substitute_power_int([0] * j + [1], t, m)) for j in range(euler_phi(d))]
        x = _solve_rational(cols, self.coeffs)
        if x is None:
            return None
        return CycloNum._raw(d, x)

    @staticmethod
    def _common(a: "CycloNum", b: "CycloNum") -> tuple["CycloNum", "CycloNum"]:
        if a.order == b.order:
            return a, b
        if a.order == 1 and b.order != 1:
            return CycloNum._from_int(b.order, _reduce_int(a.num, b.order), a.den), b
        if b.order == 1:
            return a, CycloNum._from_int(a.order, _reduce_int(b.num, a.order), b.den)
        m = _lcm(a.order, b.order)
        return a.lift(m), b.lift(m)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = CycloNum.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = CycloNum._common(self, other)
        if a.den == b.den:
            return CycloNum._from_int(a.order, [x + y for x, y in zip(a.num, b.num)], a.den)
        den = _lcm(a.den, b.den)
        fa, fb = den // a.den, den // b.den
        return CycloNum._from_int(a.order, [x * fa + y * fb for x, y in zip(a.num, b.num)], den)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._from_int(self.order, [-x for x in self.num], self.den)

    def __sub__(self, other):
        try:
            other = CycloNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _scale(self, f: Fraction) -> "CycloNum":
        return CycloNum._from_int(self.order, [x * f.numerator for x in self.num], self.den * f.denominator)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self._scale(Fraction(other))
        if not isinstance(other, CycloNum):
            return NotImplemented
        if other.order == 1:
            return self._scale(Fraction(other.num[0], other.den))
        if self.order == 1:
            return other._scale(Fraction(self.num[0], self.den))
        a, b = CycloNum._common(self, other)
        prod = [0] * (2 * len(a.num) - 1)
        bnz = [(j, y) for j, y in enumerate(b.num) if y]
        for i, x in enumerate(a.num):
            if x:
                for j, y in bnz:
                    prod[i + j] += x * y
        return CycloNum._from_int(a.order, _reduce_int(prod, a.order), a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # Only rational divisors; field division is not supported.
        if isinstance(other, CycloNum):
            q = other.as_rational()
            if q is None:
                raise TypeError("division by an irrational cyclotomic number is not supported")
            other = q
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        f = Fraction(other)
        if f == 0:
            raise ZeroDivisionError("CycloNum division by zero")
        return self._scale(1 / f)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            unit_order = _lcm(2, self.order)
            if self ** unit_order != 1:
                raise ValueError("negative powers are only defined for roots of unity")
            k %= unit_order
        result = CycloNum.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, k: int) -> "CycloNum":
        """Apply the automorphism zeta_m -> zeta_m**k (k coprime to m)."""
        if gcd(k, self.order) != 1:
            raise ValueError(f"{k} is not a unit modulo {self.order}")
        return CycloNum._from_int(self.order, _substitute_power_int(self.num, k % self.order, self.order), self.den)

    def conjugate(self) -> "CycloNum":
        return self.galois(-1)

    # -- queries ------------------------------------------------------------

    def as_rational(self) -> Fraction | None:
        if any(self.num[1:]):
            return None
        return Fraction(self.num[0], self.den)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            other = CycloNum.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = CycloNum._common(self, other)
        return a.den == b.den and a.num == b.num

    def __hash__(self):
        if self._hash is None:
            c = self.canonical()
            q = c.as_rational()
            self._hash = hash(q) if q is not None else hash((c.order, c.num, c.den))
        return self._hash

    def to_complex(self) -> complex:
        """Floating-point embedding with zeta_m = exp(2 pi i / m); diagnostics only."""
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(x * z ** i for i, x in enumerate(self.num)) / self.den

    def to_source(self) -> str:
        """Render in the table grammar (``-1 + 2*z5^3``); integer coefficients only."""
        if self.den != 1:
            raise ValueError("only integral cyclotomic numbers have a source form")
        parts = []
        for i, c in enumerate(self.num):
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                mono = f"z{self.order}" + (f"^{i}" if i > 1 else "")
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        q = self.as_rational()
        if q is not None:
            return f"CycloNum({q})"
        try:
            return f"CycloNum({self.to_source()!r})"
        except ValueError:
            return f"CycloNum(order={self.order}, coeffs={[str(c) for c in self.coeffs]})"


def _solve_rational(cols: list[tuple[Fraction, ...]], rhs: Sequence[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan over Q: find x with sum_j x_j * cols[j] == rhs, or None."""
    nrows = len(rhs)
    ncols = len(cols)
    mat = [[cols[j][i] for j in range(ncols)] + [Fraction(rhs[i])] for i in range(nrows)]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, nrows) if mat[i][col]), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        p = mat[row][col]
        mat[row] = [v / p for v in mat[row]]
        for i in range(nrows):
            if i != row and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[row])]
        pivots.append(col)
        row += 1
    if any(mat[i][ncols] for i in range(row, nrows)):
        return None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        x[col] = mat[i][ncols]
    return x


class UnityExponent:
    """The root of unity exp(2 pi i q) for a reduced fraction 0 <= q < 1."""

    __slots__ = ("value",)

    def __init__(self, value):
        q = Fraction(value) % 1
        self.value = q

    @property
    def order(self) -> int:
        return self.value.denominator

    def root(self) -> CycloNum:
        return zeta(self.value.denominator, self.value.numerator)

    def is_primitive(self, h: int) -> bool:
        return self.value.denominator == h

    def __eq__(self, other):
        if isinstance(other, UnityExponent):
            return self.value == other.value
        return NotImplemented

    def __lt__(self, other):
        return self.value < other.value

    def __hash__(self):
        return hash(("unity", self.value))

    def __repr__(self):
        return f"UnityExponent({self.value})"


def zeta(m: int, k: int = 1) -> CycloNum:
    """zeta_m ** k, where zeta_m = exp(2 pi i / m)."""
    if m < 1:
        raise ValueError(f"root order must be positive, got {m}")
    k %= m
    deg, _ = _phi_tail(m)
    num = [0] * deg
    for j, c in _power_residue(m, k):
        num[j] = c
    return CycloNum._from_int(m, num, 1)


def add(a, b, canonicalize: bool = False) -> CycloNum:
    res = CycloNum.coerce(a) + b
    return res.canonical() if canonicalize else res


def mul(a, b, canonicalize: bool = False) -> CycloNum:
    res = CycloNum.coerce(a) * b
    return res.canonical() if canonicalize else res


def neg(a, canonicalize: bool = False) -> CycloNum:
    res = -CycloNum.coerce(a)
    return res.canonical() if canonicalize else res


def power(a, k: int, canonicalize: bool = False) -> CycloNum:
    res = CycloNum.coerce(a) ** k
    return res.canonical() if canonicalize else res


def conjugate(a) -> CycloNum:
    return CycloNum.coerce(a).conjugate()


def as_rational(a) -> Fraction | None:
    return CycloNum.coerce(a).as_rational()
