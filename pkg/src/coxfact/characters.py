"""Irreducible character data for the Frobenius sum.

Two routes are provided:

* :func:`reference_char_Gr1n` evaluates the induced-character formula for
  G(r,1,n) literally, summing over every conjugating element.  It is slow
  and serves as the oracle.
* :func:`nonvanishing_records` lists, in closed form, the characters that
  do not vanish on the inverse of the standard Coxeter element, together
  with their dimension, value at ``c^-1`` and normalized value on the
  reflection class sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial, prod

import numpy as np

from coxfact.cyclotomic import CycloNum, zeta
from coxfact.groups import CapExceeded, GroupSpec, MonomialElement, _exponent, gr1n
from coxfact.partitions import Partition, PartitionVector, hook, mn_char, quasi_hook

__all__ = [
    "SymHook",
    "GHook",
    "GrrTrivialLike",
    "GrrSignLike",
    "GrrQuasiHook",
    "GrrHookBox",
    "CyclicLinear",
    "DihedralLinear",
    "DihedralPlanar",
    "CharRecord",
    "WreathEvaluator",
    "reference_char_Gr1n",
    "reference_char_sum",
    "nonvanishing_records",
    "DEFAULT_REFERENCE_CAP",
]

DEFAULT_REFERENCE_CAP = 5000


# -- labels -------------------------------------------------------------------


@dataclass(frozen=True)
class SymHook:
    n: int
    k: int

    def partition(self) -> Partition:
        return hook(self.n, self.k)


@dataclass(frozen=True)
class GHook:
    """The G(r,1,n) label with hook(n, k) at position q and empty partitions elsewhere."""

    n: int
    k: int
    q: int

    def vector(self, r: int) -> PartitionVector:
        comps = [Partition()] * r
        comps[self.q] = hook(self.n, self.k)
        return PartitionVector(comps)


@dataclass(frozen=True)
class GrrTrivialLike:
    n: int

    def vector(self, r: int) -> PartitionVector:
        return PartitionVector([Partition((self.n,))] + [Partition()] * (r - 1))


@dataclass(frozen=True)
class GrrSignLike:
    n: int

    def vector(self, r: int) -> PartitionVector:
        return PartitionVector([Partition((1,) * self.n)] + [Partition()] * (r - 1))


@dataclass(frozen=True)
class GrrQuasiHook:
    n: int
    k: int

    def vector(self, r: int) -> PartitionVector:
        return PartitionVector([quasi_hook(self.n, self.k)] + [Partition()] * (r - 1))


@dataclass(frozen=True)
class GrrHookBox:
    """hook(n-1, k) at position 0 and [1] at position j."""

    n: int
    k: int
    j: int

    def vector(self, r: int) -> PartitionVector:
        comps = [Partition()] * r
        comps[0] = hook(self.n - 1, self.k)
        comps[self.j] = Partition((1,))
        return PartitionVector(comps)


@dataclass(frozen=True)
class CyclicLinear:
    """zeta_r**m -> zeta_r**(j*m)."""

    j: int


@dataclass(frozen=True)
class DihedralLinear:
    """A linear character of I_2(r): values on (rotation t_1, reflection s_0)."""

    on_rotation: int
    on_reflection: int


@dataclass(frozen=True)
class DihedralPlanar:
    """The 2-dimensional character t_i -> zeta_r**(ij) + zeta_r**(-ij)."""

    j: int


@dataclass(frozen=True)
class CharRecord:
    label: object
    dim: int
    chi_c_inv: CycloNum
    chi_R_normalized: CycloNum

    @property
    def chi_R(self) -> CycloNum:
        return self.chi_R_normalized * self.dim


# -- reference evaluator --------------------------------------------------------


class WreathEvaluator:
    """Literal evaluation of the induced characters of G(r,1,n).

    ``chi(w) = 1/|B| * sum over s in G(r,1,n) with s^-1 w s in B`` of the
    block character, where B is the block-diagonal subgroup.  The block
    character F is tabulated on the whole group (zero off B).  For a list of
    elements ws, ``sum_w chi(w) = 1/|B| sum_x H[x] F[x]`` where H[x] counts
    the pairs (s, w) with s^-1 w s = x; this is the same double sum, just
    gathered by x.
    """

    def __init__(self, r: int, n: int, cap: int = DEFAULT_REFERENCE_CAP):
        self.spec = gr1n(r, n)
        if self.spec.order > cap:
            raise CapExceeded(f"{self.spec.name} has order {self.spec.order} > reference cap {cap}")
        self.r = r
        self.n = n
        self.table = self.spec.table
        # ElementTable lists permutations lexicographically, each with r^n weight vectors
        self.perm_list = list(permutations(range(n)))
        self.perm_of = np.arange(self.table.size) // r**n
        self.perm_cycles = [MonomialElement(p, (0,) * n, r).cycles() for p in self.perm_list]
        self._hist: dict[tuple[MonomialElement, ...], np.ndarray] = {}
        self._block: dict[PartitionVector, tuple[np.ndarray, np.ndarray]] = {}

    def block_values(self, lam: PartitionVector) -> tuple[np.ndarray, np.ndarray]:
        """(value, expo): the block character at x is value[x] * zeta_r**expo[x]."""
        if lam in self._block:
            return self._block[lam]
        r, n = self.r, self.n
        if len(lam) != r or lam.size != n:
            raise ValueError(f"{lam} is not an {r}-tuple of total size {n}")
        block_of = np.repeat(np.arange(r), lam.sizes)
        per_perm = np.zeros(len(self.perm_list), dtype=np.int64)
        for i, (perm, cycles) in enumerate(zip(self.perm_list, self.perm_cycles)):
            if any(block_of[perm[x]] != block_of[x] for x in range(n)):
                continue
            types: list[list[int]] = [[] for _ in range(r)]
            for cyc in cycles:
                types[block_of[cyc[0]]].append(len(cyc))
            per_perm[i] = prod(mn_char(lam[ell], types[ell]) for ell in range(r) if lam[ell])
        value = per_perm[self.perm_of]
        # sum_l l * ||w_l||: each point contributes its weight times its block index
        expo = (self.table.weights * block_of[None, :]).sum(axis=1) % r
        self._block[lam] = (value, expo)
        return value, expo

    def conjugation_histogram(self, ws) -> np.ndarray:
        """H[x] = #{(s, w) : w in ws, s^-1 w s = x}."""
        key = tuple(ws)
        if key not in self._hist:
            conj = self.table.conjugates_many(ws)
            self._hist[key] = np.bincount(conj.ravel(), minlength=self.table.size)
        return self._hist[key]

    def block_order(self, lam: PartitionVector) -> int:
        return prod(factorial(k) * self.r**k for k in lam.sizes)

    def _check(self, w: MonomialElement) -> None:
        if w.r != self.r or w.degree != self.n:
            raise ValueError(f"{w} is not an element of G({self.r},1,{self.n})")

    def sum_over(self, lam, ws) -> CycloNum:
        """sum of chi_lam(w) over the elements ws."""
        for w in ws:
            self._check(w)
        lam = lam if isinstance(lam, PartitionVector) else PartitionVector(lam)
        value, expo = self.block_values(lam)
        hist = self.conjugation_histogram(ws)
        coeffs = np.zeros(self.r, dtype=object)
        weighted = hist * value
        nz = np.flatnonzero(weighted)
        np.add.at(coeffs, expo[nz], weighted[nz].astype(object))
        return CycloNum(self.r, [int(c) for c in coeffs]) / self.block_order(lam)

    def __call__(self, lam, w: MonomialElement) -> CycloNum:
        return self.sum_over(lam, [w])


@lru_cache(maxsize=32)
def _evaluator(r: int, n: int, cap: int) -> WreathEvaluator:
    return WreathEvaluator(r, n, cap)


def reference_char_Gr1n(lam, w: MonomialElement, cap: int = DEFAULT_REFERENCE_CAP) -> CycloNum:
    """chi_lam(w) for G(r,1,n) by the literal induced-character sum."""
    lam = lam if isinstance(lam, PartitionVector) else PartitionVector(lam)
    r, n = len(lam), lam.size
    if w.r != r or w.degree != n:
        raise ValueError(f"label of shape (r={r}, n={n}) does not match element {w}")
    return _evaluator(r, n, cap)(lam, w)


# -- closed-form records --------------------------------------------------------


def _rat(x) -> CycloNum:
    return CycloNum.rational(x)


def _symmetric_records(n: int) -> list[CharRecord]:
    out = []
    for k in range(n):
        tilde = Fraction(comb(n, 2) * (n - 2 * k - 1), n - 1)
        out.append(CharRecord(SymHook(n, k), comb(n - 1, k), _rat((-1) ** k), _rat(tilde)))
    return out


def _root_sum(r: int, step: int) -> CycloNum:
    """sum_{l=1}^{r-1} zeta_r**(step*l), assembled as one coefficient vector."""
    coeffs = [0] * r
    for ell in range(1, r):
        coeffs[step * ell % r] += 1
    return CycloNum(r, coeffs)


def _gr1n_records(r: int, n: int, a: int) -> list[CharRecord]:
    out = []
    for q in range(r):
        diag = _root_sum(r, a * q) * n
        for k in range(n):
            tilde = diag + Fraction(n * r * (n - 2 * k - 1), 2)
            chi_c = zeta(r, -a * q) * (-1) ** k
            out.append(CharRecord(GHook(n, k, q), comb(n - 1, k), chi_c, tilde))
    return out


def _grrn_records(r: int, n: int, a: int) -> list[CharRecord]:
    c2 = comb(n, 2)
    out = [
        CharRecord(GrrTrivialLike(n), 1, _rat(1), _rat(r * c2)),
        CharRecord(GrrSignLike(n), 1, _rat((-1) ** n), _rat(-r * c2)),
    ]
    for k in range(1, n - 2):
        d = Fraction((n - 2 - k) * k * comb(n, k + 1), n - 1)
        assert d.denominator == 1
        out.append(CharRecord(GrrQuasiHook(n, k), int(d), _rat((-1) ** k),
                              _rat(Fraction(r * (n - 1) * (n - 2 - 2 * k), 2))))
    # c^-1 carries weight +a on the fixed point n, which lands in block j: the
    # value is (-1)^k xi^j with xi = zeta_r^a.  Summed over j this agrees with
    # the usual xi^-j presentation.
    for j in range(1, r):
        for k in range(n - 1):
            out.append(CharRecord(GrrHookBox(n, k, j), n * comb(n - 2, k), zeta(r, a * j) * (-1) ** k,
                                  _rat(Fraction(r * (n - 1) * (n - 2 * k - 2), 2))))
    return out


def _cyclic_records(r: int, a: int) -> list[CharRecord]:
    out = []
    for j in range(r):
        chi_R = _root_sum(r, j)
        out.append(CharRecord(CyclicLinear(j), 1, zeta(r, -j * a), chi_R))
    return out


def _dihedral_records(r: int, a: int) -> list[CharRecord]:
    # c = t_a = diag(zeta_r**a, zeta_r**-a); reflections s_i are antidiagonal.
    out = [
        CharRecord(DihedralLinear(1, 1), 1, _rat(1), _rat(r)),
        CharRecord(DihedralLinear(1, -1), 1, _rat(1), _rat(-r)),
    ]
    if r % 2 == 0:
        # t_1 -> -1; s_i -> +-(-1)**i sums to zero over the r reflections
        sign = (-1) ** a
        out.append(CharRecord(DihedralLinear(-1, 1), 1, _rat(sign), _rat(0)))
        out.append(CharRecord(DihedralLinear(-1, -1), 1, _rat(sign), _rat(0)))
    for j in range(1, (r + 1) // 2):
        chi = zeta(r, a * j) + zeta(r, -a * j)
        out.append(CharRecord(DihedralPlanar(j), 2, chi, _rat(0)))
    return out


def nonvanishing_records(spec: GroupSpec, exponent=None) -> list[CharRecord]:
    """Characters with chi(c^-1) != 0 for the canonical Coxeter element of ``exponent``."""
    a = _exponent(spec, exponent).numerator
    if spec.family == "S":
        recs = _symmetric_records(spec.points)
    elif spec.family == "C":
        recs = _cyclic_records(spec.r, a)
    elif spec.family == "GR1N":
        recs = _gr1n_records(spec.r, spec.points, a)
    elif spec.family == "GRRN" and spec.points == 2:
        recs = _dihedral_records(spec.r, a)
    elif spec.family == "GRRN":
        recs = _grrn_records(spec.r, spec.points, a)
    else:
        raise ValueError(f"no character records for {spec.name}")
    return [rec for rec in recs if not rec.chi_c_inv.is_zero()]


def reference_char_sum(lam, ws, cap: int = DEFAULT_REFERENCE_CAP) -> CycloNum:
    """sum of chi_lam(w) over ws, e.g. the value on a class sum."""
    lam = lam if isinstance(lam, PartitionVector) else PartitionVector(lam)
    ws = list(ws)
    if not ws:
        return CycloNum.rational(0)
    return _evaluator(len(lam), lam.size, cap).sum_over(lam, ws)
