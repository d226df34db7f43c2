"""Monomial models of the well-generated infinite families.

Elements of G(r, p, n) are written ``sigma wr (i_1, ..., i_n)``: the matrix
with entry ``zeta_r ** i_l`` at row l, column sigma(l).  Permutations are
stored 0-based in one-line notation.  The symmetric group S_N is modelled
by permutation matrices of size N (r = 1); its rank N - 1 only enters
through the invariants stored on :class:`GroupSpec`.

Every element has a dense rank in ``[0, |W|)`` (Lehmer code of the
permutation, then the weights in mixed radix), which indexes the counting
tables.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import permutations, product
from math import factorial, gcd, prod
from typing import Iterator

import numpy as np

from coxfact import kernels
from coxfact.cyclotomic import CycloNum, UnityExponent, zeta

__all__ = [
    "CapExceeded",
    "GroupSpec",
    "MonomialElement",
    "ReflectionClassId",
    "ElementTable",
    "symmetric",
    "gr1n",
    "grrn",
    "cyclic",
    "dihedral",
    "identity",
    "multiply",
    "inverse",
    "elements",
    "rank",
    "unrank",
    "reflections",
    "reflecting_hyperplanes",
    "eigenvalue_exponents",
    "fix_space_dim",
    "is_coxeter",
    "coxeter_class",
    "canonical_coxeter",
    "coxeter_exponents",
]

DEFAULT_MAX_ELEMENTS = 10**6


class CapExceeded(RuntimeError):
    """A computation would exceed a configured resource cap."""


def max_elements() -> int:
    return int(os.environ.get("COXFACT_MAX_ELEMENTS", DEFAULT_MAX_ELEMENTS))


@dataclass(frozen=True)
class GroupSpec:
    """One of Symmetric(N), GR1N(r, n), GRRN(r, n), Cyclic(r).

    ``r`` is the modulus of the weights (1 for the symmetric group) and
    ``points`` the size of the monomial matrices.
    """

    family: str
    r: int
    points: int

    def __post_init__(self):
        if self.family == "S":
            if self.r != 1 or self.points < 2:
                raise ValueError("Symmetric(N) needs N >= 2")
        elif self.family == "GR1N":
            if self.r < 2 or self.points < 1:
                raise ValueError("G(r,1,n) needs r >= 2, n >= 1")
        elif self.family == "GRRN":
            if self.r < 2 or self.points < 2:
                raise ValueError("G(r,r,n) needs r >= 2, n >= 2")
        elif self.family == "C":
            if self.r < 2 or self.points != 1:
                raise ValueError("Cyclic(r) needs r >= 2")
        else:
            raise ValueError(f"unknown family {self.family!r}")

    # -- naming -------------------------------------------------------------

    @property
    def name(self) -> str:
        if self.family == "S":
            return f"Sn:{self.points}"
        if self.family == "C":
            return f"C:{self.r}"
        if self.family == "GRRN" and self.points == 2:
            return f"I2:{self.r}"
        p = 1 if self.family == "GR1N" else self.r
        return f"G:{self.r},{p},{self.points}"

    def __str__(self):
        return self.name

    @property
    def is_dihedral(self) -> bool:
        return self.family == "GRRN" and self.points == 2

    @property
    def p(self) -> int:
        return self.r if self.family == "GRRN" else 1

    # -- invariants ---------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.points - 1 if self.family == "S" else self.points

    @property
    def order(self) -> int:
        n, r = self.points, self.r
        if self.family == "S":
            return factorial(n)
        return factorial(n) * r**n // self.p

    @property
    def degrees(self) -> tuple[int, ...]:
        n, r = self.points, self.r
        if self.family == "S":
            return tuple(range(2, n + 1))
        degs = [r * i for i in range(1, n)] + [r * n // self.p]
        return tuple(sorted(degs))

    @property
    def codegrees(self) -> tuple[int, ...]:
        n, r = self.points, self.r
        if self.family == "S":
            codes = list(range(0, n - 1))
        elif self.family == "GRRN":
            codes = [r * i for i in range(0, n - 1)] + [(n - 1) * r - n]
        else:
            codes = [r * i for i in range(0, n)]
        return tuple(sorted(codes, reverse=True))

    @property
    def coxeter_number(self) -> int:
        return max(self.degrees)

    h = coxeter_number

    @property
    def num_reflections(self) -> int:
        return sum(d - 1 for d in self.degrees)

    @property
    def num_hyperplanes(self) -> int:
        return sum(d + 1 for d in self.codegrees)

    @property
    def is_well_generated(self) -> bool:
        dn = max(self.degrees)
        return all(d + c == dn for d, c in zip(self.degrees, self.codegrees))

    def summary(self) -> dict:
        return {
            "spec": self.name,
            "n": self.rank,
            "order": self.order,
            "h": self.h,
            "degrees": list(self.degrees),
            "codegrees": list(self.codegrees),
            "refl": self.num_reflections,
            "corefl": self.num_hyperplanes,
        }

    # -- element coding -----------------------------------------------------

    @property
    def free_weights(self) -> int:
        """Number of independent weight coordinates."""
        if self.family == "S":
            return 0
        return self.points - 1 if self.family == "GRRN" else self.points

    def contains(self, w: "MonomialElement") -> bool:
        if w.r != self.r or len(w.perm) != self.points:
            return False
        return self.family != "GRRN" or sum(w.weights) % self.r == 0

    @cached_property
    def table(self) -> "ElementTable":
        return ElementTable(self)


def symmetric(n: int) -> GroupSpec:
    return GroupSpec("S", 1, n)


def gr1n(r: int, n: int) -> GroupSpec:
    return GroupSpec("GR1N", r, n)


def grrn(r: int, n: int) -> GroupSpec:
    return GroupSpec("GRRN", r, n)


def cyclic(r: int) -> GroupSpec:
    return GroupSpec("C", r, 1)


def dihedral(r: int) -> GroupSpec:
    return GroupSpec("GRRN", r, 2)


@dataclass(frozen=True)
class MonomialElement:
    perm: tuple[int, ...]
    weights: tuple[int, ...]
    r: int = field(default=1)

    def __post_init__(self):
        if len(self.perm) != len(self.weights):
            raise ValueError("permutation and weight vector differ in length")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"not a permutation: {self.perm}")
        if any(not 0 <= i < self.r for i in self.weights):
            raise ValueError(f"weights must lie in [0, {self.r})")

    @classmethod
    def from_cycles(cls, n: int, cycles, weights=None, r: int = 1) -> "MonomialElement":
        """Build from 1-based cycles, e.g. ``from_cycles(4, [(1, 2, 3, 4)])``."""
        perm = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                perm[a - 1] = b - 1
        w = tuple(x % r for x in weights) if weights is not None else (0,) * n
        return cls(tuple(perm), w, r)

    @property
    def degree(self) -> int:
        return len(self.perm)

    @property
    def projection(self) -> tuple[int, ...]:
        """|w|, the underlying permutation."""
        return self.perm

    @property
    def norm(self) -> int:
        """||w|| = sum of weights mod r."""
        return sum(self.weights) % self.r

    def __mul__(self, other: "MonomialElement") -> "MonomialElement":
        return multiply(self, other)

    def inverse(self) -> "MonomialElement":
        return inverse(self)

    def cycles(self) -> list[tuple[int, ...]]:
        """0-based cycles of the permutation, fixed points included."""
        seen = set()
        out = []
        for start in range(len(self.perm)):
            if start in seen:
                continue
            cyc = []
            x = start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.perm[x]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def to_matrix(self) -> list[list[CycloNum]]:
        n = len(self.perm)
        zero = CycloNum.rational(0)
        rows = [[zero] * n for _ in range(n)]
        for l, (s, i) in enumerate(zip(self.perm, self.weights)):
            rows[l][s] = zeta(self.r, i)
        return rows

    def to_complex_matrix(self) -> np.ndarray:
        n = len(self.perm)
        m = np.zeros((n, n), dtype=complex)
        for l, (s, i) in enumerate(zip(self.perm, self.weights)):
            m[l, s] = np.exp(2j * np.pi * i / self.r)
        return m

    def multiplicative_order(self) -> int:
        out = 1
        for cyc in self.cycles():
            s = sum(self.weights[x] for x in cyc) % self.r
            k = len(cyc) * (self.r // gcd(s, self.r))
            out = out * k // gcd(out, k)
        return out

    def __str__(self):
        cyc = "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in self.cycles() if len(c) > 1) or "()"
        if self.r == 1:
            return cyc
        return f"{cyc} wr {self.weights}"


@dataclass(frozen=True)
class ReflectionClassId:
    """R0 (off-diagonal reflections) or R_l (diagonal entry zeta_r**l), 1 <= l < r."""

    ell: int = 0

    def __str__(self):
        return f"R{self.ell}"


def identity(spec: GroupSpec) -> MonomialElement:
    n = spec.points
    return MonomialElement(tuple(range(n)), (0,) * n, spec.r)


def multiply(a: MonomialElement, b: MonomialElement) -> MonomialElement:
    """Matrix product a * b."""
    if a.r != b.r or len(a.perm) != len(b.perm):
        raise ValueError("cannot multiply elements of different groups")
    r = a.r
    perm = tuple(b.perm[s] for s in a.perm)
    weights = tuple((i + b.weights[s]) % r for s, i in zip(a.perm, a.weights))
    return MonomialElement(perm, weights, r)


def inverse(a: MonomialElement) -> MonomialElement:
    n = len(a.perm)
    perm = [0] * n
    weights = [0] * n
    for l, (s, i) in enumerate(zip(a.perm, a.weights)):
        perm[s] = l
        weights[s] = (-i) % a.r
    return MonomialElement(tuple(perm), tuple(weights), a.r)


def _check_cap(spec: GroupSpec, cap: int | None) -> None:
    cap = max_elements() if cap is None else cap
    if spec.order > cap:
        raise CapExceeded(f"{spec.name} has {spec.order} elements, above the enumeration cap {cap}")


def _weight_vectors(spec: GroupSpec) -> Iterator[tuple[int, ...]]:
    r, n = spec.r, spec.points
    if spec.family == "S":
        yield (0,) * n
        return
    for w in product(range(r), repeat=spec.free_weights):
        if spec.family == "GRRN":
            yield w + ((-sum(w)) % r,)
        else:
            yield w


def elements(spec: GroupSpec, cap: int | None = None) -> Iterator[MonomialElement]:
    """All elements in rank order."""
    _check_cap(spec, cap)
    wvecs = list(_weight_vectors(spec))
    for perm in permutations(range(spec.points)):
        for w in wvecs:
            yield MonomialElement(perm, w, spec.r)


def _lehmer(perm) -> int:
    n = len(perm)
    code = 0
    for i in range(n):
        c = sum(1 for j in range(i + 1, n) if perm[j] < perm[i])
        code = code * (n - i) + c
    return code


def rank(spec: GroupSpec, w: MonomialElement) -> int:
    if not spec.contains(w):
        raise ValueError(f"{w} is not an element of {spec.name}")
    code = 0
    for i in w.weights[: spec.free_weights]:
        code = code * spec.r + i
    return _lehmer(w.perm) * spec.r**spec.free_weights + code


def unrank(spec: GroupSpec, idx: int) -> MonomialElement:
    if not 0 <= idx < spec.order:
        raise ValueError(f"rank {idx} out of range for {spec.name}")
    radix = spec.r**spec.free_weights
    pcode, wcode = divmod(idx, radix)
    n = spec.points
    digits = []
    for base in range(1, n + 1):
        pcode, d = divmod(pcode, base)
        digits.append(d)
    digits.reverse()
    pool = list(range(n))
    perm = tuple(pool.pop(d) for d in digits)
    w = []
    for _ in range(spec.free_weights):
        wcode, d = divmod(wcode, spec.r)
        w.append(d)
    w.reverse()
    if spec.family == "GRRN":
        w.append((-sum(w)) % spec.r)
    elif spec.family == "S":
        w = [0] * n
    return MonomialElement(perm, tuple(w), spec.r)


class ElementTable:
    """All elements of a group as parallel numpy arrays, indexed by rank."""

    def __init__(self, spec: GroupSpec, cap: int | None = None):
        _check_cap(spec, cap)
        self.spec = spec
        n = spec.points
        perms = np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)
        wts = np.array(list(_weight_vectors(spec)), dtype=np.int64).reshape(-1, n)
        self.perms = np.repeat(perms, len(wts), axis=0)
        self.weights = np.tile(wts, (len(perms), 1))
        self.size = len(self.perms)
        self._inverse = None
        assert self.size == spec.order

    def rank_arrays(self, perms: np.ndarray, weights: np.ndarray) -> np.ndarray:
        spec = self.spec
        code = kernels.lehmer_rank(perms)
        code = code * spec.r**spec.free_weights
        wc = np.zeros(len(perms), dtype=np.int64)
        for j in range(spec.free_weights):
            wc = wc * spec.r + weights[:, j]
        return code + wc

    def right_multiply(self, x: MonomialElement) -> np.ndarray:
        """Ranks of w * x for every w, in rank order of w."""
        xp = np.array(x.perm, dtype=np.int64)
        xw = np.array(x.weights, dtype=np.int64)
        perms = xp[self.perms]
        weights = (self.weights + xw[self.perms]) % self.spec.r
        return self.rank_arrays(perms, weights)

    def conjugates(self, w: MonomialElement) -> np.ndarray:
        """Ranks of s^-1 w s for every s, in rank order of s."""
        return self.conjugates_many([w])[0]

    def conjugates_many(self, ws, chunk: int = 4_000_000) -> np.ndarray:
        """Array C with C[i, s] = rank(s^-1 ws[i] s)."""
        ws = list(ws)
        if not ws:
            return np.zeros((0, self.size), dtype=np.int64)
        n, r = self.spec.points, self.spec.r
        if self._inverse is None:
            rows = np.arange(self.size)[:, None]
            # s^-1: perm inverse, weights negated at the image positions
            inv_p = np.empty_like(self.perms)
            inv_p[rows, self.perms] = np.arange(n)[None, :]
            inv_w = np.empty_like(self.weights)
            inv_w[rows, self.perms] = (-self.weights) % r
            self._inverse = (inv_p, inv_w)
        inv_p, inv_w = self._inverse
        step = max(1, chunk // max(1, self.size * n))
        out = []
        for start in range(0, len(ws), step):
            batch = ws[start:start + step]
            m = len(batch)
            wp = np.array([w.perm for w in batch], dtype=np.int64).reshape(m, 1, n)
            ww = np.array([w.weights for w in batch], dtype=np.int64).reshape(m, 1, n)
            # (s^-1 w): perm wp[inv_p], weights inv_w + ww[inv_p]
            idx = np.broadcast_to(inv_p[None], (m, self.size, n))
            p1 = np.take_along_axis(np.broadcast_to(wp, (m, self.size, n)), idx, axis=2)
            w1 = (inv_w[None] + np.take_along_axis(np.broadcast_to(ww, (m, self.size, n)), idx, axis=2)) % r
            # (s^-1 w) s
            sp = np.broadcast_to(self.perms[None], (m, self.size, n))
            p2 = np.take_along_axis(sp, p1, axis=2)
            w2 = (w1 + np.take_along_axis(np.broadcast_to(self.weights[None], (m, self.size, n)), p1, axis=2)) % r
            ranks = self.rank_arrays(p2.reshape(-1, n), w2.reshape(-1, n))
            out.append(ranks.reshape(m, self.size))
        return np.concatenate(out, axis=0)

    def element(self, idx: int) -> MonomialElement:
        return MonomialElement(tuple(int(x) for x in self.perms[idx]), tuple(int(x) for x in self.weights[idx]), self.spec.r)


def reflections(spec: GroupSpec) -> list[tuple[MonomialElement, ReflectionClassId]]:
    """All reflections with their class; diagonal classes R_l first, then R0."""
    n, r = spec.points, spec.r
    out = []
    if spec.family in ("GR1N", "C"):
        for ell in range(1, r):
            for pos in range(n):
                w = [0] * n
                w[pos] = ell
                out.append((MonomialElement(tuple(range(n)), tuple(w), r), ReflectionClassId(ell)))
    ks = range(r) if r > 1 else [0]
    for i in range(n):
        for j in range(i + 1, n):
            perm = list(range(n))
            perm[i], perm[j] = j, i
            for k in ks:
                w = [0] * n
                w[i] = (-k) % r
                w[j] = k % r
                out.append((MonomialElement(tuple(perm), tuple(w), r), ReflectionClassId(0)))
    assert len(out) == spec.num_reflections, (spec, len(out))
    return out


def fix_space_dim(w: MonomialElement) -> int:
    """dim ker(1 - w): one dimension per cycle carrying total weight 0 mod r."""
    return sum(1 for cyc in w.cycles() if sum(w.weights[x] for x in cyc) % w.r == 0)


def _rows_proportional(u: list[CycloNum], v: list[CycloNum]) -> bool:
    n = len(u)
    return all(u[a] * v[b] == u[b] * v[a] for a in range(n) for b in range(a + 1, n))


def reflecting_hyperplanes(spec: GroupSpec, refl=None) -> list[list[CycloNum]]:
    """Distinct hyperplanes ker(1 - tau), each represented by a normal row of 1 - tau.

    Two hyperplanes coincide iff their row spans agree projectively.
    """
    refl = reflections(spec) if refl is None else refl
    reps: list[list[CycloNum]] = []
    for tau, _ in refl:
        m = tau.to_matrix()
        n = len(m)
        one = CycloNum.rational(1)
        rows = [[(one if a == b else 0) - m[a][b] for b in range(n)] for a in range(n)]
        row = next(rw for rw in rows if any(not x.is_zero() for x in rw))
        if not any(_rows_proportional(row, other) for other in reps):
            reps.append(row)
    return reps


@lru_cache(maxsize=None)
def _cycle_exponents(k: int, s: Fraction) -> tuple[Fraction, ...]:
    return tuple(((s + j) / k) % 1 for j in range(k))


def eigenvalue_exponents(w: MonomialElement) -> list[UnityExponent]:
    """Eigenvalues exp(2 pi i q) of w as a sorted multiset of exponents q."""
    out = []
    for cyc in w.cycles():
        s = Fraction(sum(w.weights[x] for x in cyc) % w.r, w.r)
        out.extend(UnityExponent(q) for q in _cycle_exponents(len(cyc), s))
    return sorted(out)


def _exponent(spec: GroupSpec, exponent) -> Fraction:
    if exponent is None:
        return Fraction(1, spec.h)
    q = exponent.value if isinstance(exponent, UnityExponent) else Fraction(exponent)
    q %= 1
    if q.denominator != spec.h:
        raise ValueError(f"{q} is not a primitive {spec.h}-th root exponent for {spec.name}")
    return q


def coxeter_exponents(spec: GroupSpec) -> list[Fraction]:
    """a/h for all a coprime to h, i.e. one exponent per primitive h-th root."""
    h = spec.h
    return [Fraction(a, h) for a in range(1, h + 1) if gcd(a, h) == 1]


def is_coxeter(spec: GroupSpec, w: MonomialElement) -> bool:
    return any(e.value.denominator == spec.h for e in eigenvalue_exponents(w))


def coxeter_class(spec: GroupSpec, exponent=None, cap: int | None = None) -> list[MonomialElement]:
    """All elements having exp(2 pi i * exponent) as an eigenvalue."""
    q = UnityExponent(_exponent(spec, exponent))
    return [w for w in elements(spec, cap) if q in eigenvalue_exponents(w)]


def canonical_coxeter(spec: GroupSpec, exponent=None) -> MonomialElement:
    """The standard Coxeter element for the primitive root exp(2 pi i * exponent).

    Default exponent is 1/h.
    """
    q = _exponent(spec, exponent)
    n, r = spec.points, spec.r
    if spec.family == "S":
        return MonomialElement.from_cycles(n, [tuple(range(1, n + 1))])
    # xi = zeta_r ** a in every family, a the numerator of the exponent
    a = q.numerator
    if spec.family in ("GR1N", "C"):
        weights = [0] * (n - 1) + [a]
        return MonomialElement.from_cycles(n, [tuple(range(1, n + 1))], weights, r)
    weights = [0] * (n - 2) + [a, -a]
    cyc = [tuple(range(1, n))] if n > 2 else []
    return MonomialElement.from_cycles(n, cyc, weights, r)
