"""Exponential polynomials sum_e a_e * exp(e*t) with exact coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from coxfact.cyclotomic import CycloNum

__all__ = ["ExpPoly"]


def _exponent(e) -> Fraction:
    if isinstance(e, CycloNum):
        q = e.as_rational()
        if q is None:
            raise ValueError(f"exponent {e} is not rational")
        return q
    return Fraction(e)


def _amplitude_text(a: CycloNum) -> str:
    q = a.as_rational()
    if q is not None:
        return str(q)
    try:
        return a.to_source()
    except ValueError:
        return repr(a)


class ExpPoly:
    """Finite map exponent -> amplitude; zero amplitudes are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out: dict[Fraction, CycloNum] = {}
        for e, a in (terms or {}).items():
            e = _exponent(e)
            a = CycloNum.coerce(a)
            out[e] = out[e] + a if e in out else a
        self.terms = {e: a.canonical() for e, a in out.items() if not a.is_zero()}

    @classmethod
    def term(cls, exponent, amplitude=1) -> "ExpPoly":
        return cls({exponent: amplitude})

    @classmethod
    def constant(cls, value) -> "ExpPoly":
        return cls({0: value})

    @classmethod
    def _coerce(cls, other) -> "ExpPoly":
        if isinstance(other, ExpPoly):
            return other
        return cls.constant(other)

    # -- algebra ---------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        merged = dict(self.terms)
        for e, a in other.terms.items():
            merged[e] = merged[e] + a if e in merged else a
        return ExpPoly(merged)

    __radd__ = __add__

    def __neg__(self):
        return ExpPoly({e: -a for e, a in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, ExpPoly):
            c = CycloNum.coerce(other)
            return ExpPoly({e: a * c for e, a in self.terms.items()})
        out: dict[Fraction, CycloNum] = {}
        for e1, a1 in self.terms.items():
            for e2, a2 in other.terms.items():
                e = e1 + e2
                out[e] = out[e] + a1 * a2 if e in out else a1 * a2
        return ExpPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return ExpPoly({e: a / other for e, a in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of exponential polynomials are not supported")
        result = ExpPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- queries ---------------------------------------------------------------

    def coefficient(self, ell: int) -> CycloNum:
        """ell! [t^ell], i.e. sum of amplitude * exponent**ell."""
        total = CycloNum.rational(0)
        for e, a in self.terms.items():
            total = total + a * (e**ell)
        return total.canonical()

    def is_rational(self) -> bool:
        return all(a.as_rational() is not None for a in self.terms.values())

    def items(self) -> Iterator[tuple[Fraction, CycloNum]]:
        """Terms by decreasing exponent."""
        return iter(sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True))

    def to_json(self) -> list[dict]:
        return [{"exponent": str(e), "amplitude": _amplitude_text(a)} for e, a in self.items()]

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ExpPoly):
            try:
                other = self._coerce(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "ExpPoly(0)"
        parts = [f"({a!r})*e^({e}t)" for e, a in self.items()]
        return "ExpPoly(" + " + ".join(parts) + ")"
