"""Three ways to count reflection factorizations of a Coxeter element.

* ``brute``: dynamic programming in the group algebra over all elements.
* ``frobenius``: the character sum over the non-vanishing characters.
* ``closed-form``: the product formula for the exponential generating
  function, expanded binomially.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import numpy as np

from coxfact import kernels
from coxfact.characters import nonvanishing_records
from coxfact.cyclotomic import CycloNum
from coxfact.expoly import ExpPoly
from coxfact.groups import CapExceeded, GroupSpec, MonomialElement, rank, reflections

__all__ = [
    "CountResult",
    "DEFAULT_MAX_LENGTH",
    "DEFAULT_MAX_OPS",
    "max_length",
    "reflection_table",
    "brute_counts",
    "brute_count",
    "frobenius_count",
    "frobenius_egf",
    "closed_form_egf",
    "egf_coefficient",
    "dtz_count",
    "cyclic_count",
    "dihedral_count",
]

DEFAULT_MAX_LENGTH = 12
DEFAULT_MAX_OPS = 10**7


def max_length() -> int:
    return int(os.environ.get("COXFACT_MAX_LENGTH", DEFAULT_MAX_LENGTH))


def max_ops() -> int:
    return int(os.environ.get("COXFACT_MAX_OPS", DEFAULT_MAX_OPS))


@dataclass(frozen=True)
class CountResult:
    length: int
    count: int
    method: str

    def __post_init__(self):
        if self.count < 0:
            raise ValueError(f"negative count {self.count}")


# -- brute force ---------------------------------------------------------------


@lru_cache(maxsize=16)
def reflection_table(spec: GroupSpec) -> np.ndarray:
    """T[w, j] = rank(w * tau_j^-1) for the j-th reflection tau_j."""
    ops = spec.order * spec.num_reflections
    if ops > max_ops():
        raise CapExceeded(f"{spec.name}: |W|*|R| = {ops} exceeds {max_ops()} operations per step")
    table = spec.table
    cols = [table.right_multiply(tau.inverse()) for tau, _ in reflections(spec)]
    return np.ascontiguousarray(np.stack(cols, axis=1))


def brute_counts(spec: GroupSpec, target: MonomialElement, max_len: int) -> list[int]:
    """[f_0(target), ..., f_L(target)] where f_l(w) counts l-tuples of reflections with product w."""
    if max_len < 0:
        raise ValueError("length must be non-negative")
    if max_len > max_length():
        raise CapExceeded(f"length {max_len} exceeds the configured maximum {max_length()}")
    if not spec.contains(target):
        raise ValueError(f"{target} is not an element of {spec.name}")
    t = rank(spec, target)
    f = [0] * spec.order
    f[0] = 1  # rank 0 is the identity
    out = [f[t]]
    if max_len == 0:
        return out
    table = reflection_table(spec)
    rows = None
    for _ in range(max_len):
        if rows is None and max(f) * table.shape[1] >= 2**63:
            rows = table.tolist()
        f = kernels.dp_step(f, table, rows)
        out.append(f[t])
    return out


def brute_count(spec: GroupSpec, target: MonomialElement, length: int) -> CountResult:
    return CountResult(length, brute_counts(spec, target, length)[-1], "brute")


# -- Frobenius -----------------------------------------------------------------


def _integer(value: CycloNum, what: str) -> int:
    q = value.as_rational()
    if q is None or q.denominator != 1 or q < 0:
        raise ValueError(f"{what} = {value!r} is not a non-negative integer")
    return int(q)


def frobenius_count(spec: GroupSpec, length: int, exponent=None) -> CountResult:
    total = CycloNum.rational(0)
    for rec in nonvanishing_records(spec, exponent):
        total = total + rec.chi_R_normalized**length * rec.chi_c_inv * rec.dim
    total = (total / spec.order).canonical()
    return CountResult(length, _integer(total, f"Frobenius sum for {spec.name} at length {length}"), "frobenius")


def frobenius_egf(spec: GroupSpec, exponent=None) -> ExpPoly:
    """(1/|W|) sum dim * chi(c^-1) * exp(t * chi~(R)), grouped by exponent."""
    acc: dict[Fraction, CycloNum] = {}
    for rec in nonvanishing_records(spec, exponent):
        e = rec.chi_R_normalized.as_rational()
        if e is None:
            raise ValueError(f"{spec.name}: irrational exponent {rec.chi_R_normalized!r} for {rec.label}")
        amp = rec.chi_c_inv * rec.dim
        acc[e] = acc[e] + amp if e in acc else amp
    p = ExpPoly(acc) / spec.order
    if not p.is_rational():
        raise ValueError(f"{spec.name}: grouped amplitudes are not rational: {p!r}")
    return p


# -- closed forms --------------------------------------------------------------


def closed_form_egf(group) -> ExpPoly:
    """(1/|W|) (e^{t|R|/n} - e^{-t|R*|/n})^n, expanded.

    ``group`` needs ``rank``, ``order``, ``num_reflections`` and
    ``num_hyperplanes``; both GroupSpec and exceptional types qualify.
    """
    n = group.rank
    R, H = group.num_reflections, group.num_hyperplanes
    terms = {}
    for k in range(n + 1):
        e = Fraction(k * R - (n - k) * H, n)
        terms[e] = Fraction(comb(n, k) * (-1) ** (n - k), group.order)
    return ExpPoly(terms)


def egf_coefficient(p: ExpPoly, length: int) -> CycloNum:
    return p.coefficient(length)


def dtz_count(group) -> int:
    """n! h^n / |W|, the number of minimal reflection factorizations."""
    q, rem = divmod(factorial(group.rank) * group.coxeter_number**group.rank, group.order)
    assert rem == 0, group
    return q


def cyclic_count(r: int, length: int) -> int:
    if r < 2:
        raise ValueError("cyclic_count needs r >= 2")
    q, rem = divmod((r - 1) ** length - (-1) ** length, r)
    assert rem == 0
    return q


def dihedral_count(r: int, length: int) -> int:
    if r < 2:
        raise ValueError("dihedral_count needs r >= 2")
    if length == 0 or length % 2:
        return 0
    return r ** (length - 1)
