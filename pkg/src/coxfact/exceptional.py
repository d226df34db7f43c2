"""Character data for the 26 well-generated exceptional types, and their check.

Each ``data/exceptional/<name>.tsv`` file has a ``key=value`` header
(name, order, degrees, codegrees, irreducibles) followed by one row per
irreducible character: ``deg<TAB>occ<TAB>chi_c<TAB>chi_R``, where chi_c is
the value at a Coxeter element for exp(2 pi i/h) and chi_R the value on the
sum of all reflections.  Cyclotomic entries use the grammar of
:func:`parse_cyclotomic`.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod
from pathlib import Path

from coxfact.counting import closed_form_egf
from coxfact.cyclotomic import CycloNum, zeta
from coxfact.expoly import ExpPoly

__all__ = [
    "CycloSyntaxError",
    "parse_cyclotomic",
    "ExceptionalType",
    "CharRow",
    "TYPE_NAMES",
    "ALIASES",
    "resolve_name",
    "data_dir",
    "load_type",
    "sanity_checks",
    "table_egf",
    "VerificationReport",
    "verify_type",
]

TYPE_NAMES = tuple(f"G{k}" for k in (4, 5, 6, 8, 9, 10, 14, 16, 17, 18, 20, 21, 23, 24, 25, 26, 27, 28, 29, 30, 32, 33, 34, 35, 36, 37))
ALIASES = {"H3": "G23", "F4": "G28", "H4": "G30", "E6": "G35", "E7": "G36", "E8": "G37"}

# -- cyclotomic expression grammar -----------------------------------------------


class CycloSyntaxError(ValueError):
    def __init__(self, message: str, src: str, pos: int):
        super().__init__(f"{message} at position {pos} in {src!r}")
        self.src = src
        self.pos = pos


_TOKEN = re.compile(r"(?P<int>\d+)|(?P<op>[-+*^])|(?P<z>z)")


def _tokens(src: str):
    pos = 0
    out = []
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos == len(src):
            break
        m = _TOKEN.match(src, pos)
        if not m:
            raise CycloSyntaxError(f"unexpected character {src[pos]!r}", src, pos)
        out.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(src)))
    return out


def parse_cyclotomic(src: str) -> CycloNum:
    """Parse ``expr := ['-'] term (('+'|'-') term)*``, ``term := INT | [INT '*'] 'z' INT ['^' INT]``."""
    toks = _tokens(src)
    i = 0

    def peek():
        return toks[i]

    def take(kind, value=None):
        nonlocal i
        k, v, p = toks[i]
        if k != kind or (value is not None and v != value):
            want = value or kind
            got = v or "end of input"
            raise CycloSyntaxError(f"expected {want!r}, got {got!r}", src, p)
        i += 1
        return v, p

    def root():
        take("z")
        order_s, p = take("int")
        order = int(order_s)
        if order <= 0:
            raise CycloSyntaxError("root order must be positive", src, p)
        k = 1
        if peek()[:2] == ("op", "^"):
            take("op", "^")
            k = int(take("int")[0])
        return zeta(order, k)

    def term():
        kind, v, p = peek()
        if kind == "z":
            return root()
        if kind == "int":
            c = int(take("int")[0])
            if peek()[:2] == ("op", "*"):
                take("op", "*")
                return root() * c
            return CycloNum.rational(c)
        raise CycloSyntaxError(f"expected a term, got {v or 'end of input'!r}", src, p)

    sign = 1
    if peek()[:2] == ("op", "-"):
        take("op", "-")
        sign = -1
    total = term() * sign
    while peek()[0] != "end":
        kind, v, p = peek()
        if kind != "op" or v not in "+-":
            raise CycloSyntaxError(f"expected '+' or '-', got {v!r}", src, p)
        take("op")
        t = term()
        total = total + t if v == "+" else total - t
    return total


# -- data model ----------------------------------------------------------------


@dataclass(frozen=True)
class ExceptionalType:
    name: str
    order: int
    degrees: tuple[int, ...]
    codegrees: tuple[int, ...]
    irreducibles: int

    def __post_init__(self):
        # degrees ascending, codegrees descending, so that d_i + d*_i = d_n pairs up
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))
        object.__setattr__(self, "codegrees", tuple(sorted(self.codegrees, reverse=True)))
        d, dc = self.degrees, self.codegrees
        if len(d) != len(dc) or not d:
            raise ValueError(f"{self.name}: degrees and codegrees must have the same positive length")
        if prod(d) != self.order:
            raise ValueError(f"{self.name}: product of degrees {prod(d)} != order {self.order}")
        if any(a + b != d[-1] for a, b in zip(d, dc)):
            raise ValueError(f"{self.name}: not well-generated (d_i + d*_i != d_n)")
        if self.num_reflections + self.num_hyperplanes != self.rank * self.coxeter_number:
            raise ValueError(f"{self.name}: |R| + |R*| != n h")

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def coxeter_number(self) -> int:
        return self.degrees[-1]

    h = coxeter_number

    @property
    def num_reflections(self) -> int:
        return sum(d - 1 for d in self.degrees)

    @property
    def num_hyperplanes(self) -> int:
        return sum(d + 1 for d in self.codegrees)

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


@dataclass(frozen=True)
class CharRow:
    deg: int
    occ: int
    chi_c: CycloNum
    chi_R: CycloNum


def resolve_name(name: str) -> str:
    key = name.strip().upper().replace("_", "")
    key = ALIASES.get(key, key)
    if key not in TYPE_NAMES:
        raise KeyError(f"unknown exceptional type {name!r}")
    return key


def data_dir(override: str | os.PathLike | None = None) -> Path:
    if override is not None:
        return Path(override)
    env = os.environ.get("COXFACT_DATA_DIR")
    if env:
        return Path(env)
    return Path(__file__).parent / "data" / "exceptional"


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _parse_file(path: Path) -> tuple[ExceptionalType, list[CharRow]]:
    header: dict[str, str] = {}
    rows: list[CharRow] = []
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        if "=" in line and "\t" not in line:
            k, v = line.split("=", 1)
            header[k.strip()] = v.strip()
            continue
        cols = line.split("\t")
        if len(cols) != 4:
            raise ValueError(f"{path}:{lineno}: expected 4 tab-separated columns, got {len(cols)}")
        try:
            rows.append(CharRow(int(cols[0]), int(cols[1]), parse_cyclotomic(cols[2]), parse_cyclotomic(cols[3])))
        except CycloSyntaxError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from exc
    try:
        ext = ExceptionalType(
            header["name"], int(header["order"]), _ints(header["degrees"]),
            _ints(header["codegrees"]), int(header["irreducibles"]),
        )
    except KeyError as exc:
        raise ValueError(f"{path}: missing header field {exc}") from exc
    if len(rows) != ext.irreducibles:
        raise ValueError(f"{path}: {len(rows)} rows but {ext.irreducibles} irreducibles declared")
    return ext, rows


@lru_cache(maxsize=None)
def _load_cached(path: str) -> tuple[ExceptionalType, tuple[CharRow, ...]]:
    ext, rows = _parse_file(Path(path))
    return ext, tuple(rows)


def load_type(name: str, directory=None) -> tuple[ExceptionalType, list[CharRow]]:
    key = resolve_name(name)
    path = data_dir(directory) / f"{key}.tsv"
    if not path.exists():
        raise FileNotFoundError(f"no data file for {key} in {path.parent}")
    ext, rows = _load_cached(str(path.resolve()))
    return ext, list(rows)


# -- checks --------------------------------------------------------------------


def sanity_checks(name: str, directory=None, rows: list[CharRow] | None = None) -> dict:
    """Sum of squared degrees is |W|; the trivial character takes the value |R| on R."""
    ext, loaded = load_type(name, directory)
    rows = loaded if rows is None else rows
    deg_sq = sum(r.deg**2 for r in rows)
    trivial = [r for r in rows if r.deg == 1 and r.occ == 0]
    trivial_ok = len(trivial) == 1 and trivial[0].chi_R == ext.num_reflections
    return {
        "type": ext.name,
        "order": ext.order,
        "sum_deg_sq": deg_sq,
        "deg_sq_ok": deg_sq == ext.order,
        "trivial_chi_R_ok": trivial_ok,
        "pass": deg_sq == ext.order and trivial_ok,
    }


def table_egf(ext: ExceptionalType, rows: list[CharRow]) -> ExpPoly:
    """(1/|W|) sum deg * chi_c * exp(t chi_R / deg), grouped by exponent."""
    acc: dict[Fraction, CycloNum] = {}
    for idx, row in enumerate(rows):
        e = (row.chi_R / row.deg).as_rational()
        if e is None:
            raise ValueError(f"{ext.name} row {idx}: chi_R {row.chi_R!r} is not rational")
        amp = row.chi_c * row.deg
        acc[e] = acc[e] + amp if e in acc else amp
    p = ExpPoly(acc) / ext.order
    if not p.is_rational():
        bad = [(str(e), repr(a)) for e, a in p.items() if a.as_rational() is None]
        raise ValueError(f"{ext.name}: irrational grouped amplitudes {bad}")
    return p


@dataclass
class VerificationReport:
    type: str
    passed: bool
    n: int
    order: int
    refl: int
    corefl: int
    terms: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)
    error: str | None = None

    def to_json(self) -> dict:
        out = {
            "type": self.type,
            "pass": self.passed,
            "n": self.n,
            "order": self.order,
            "refl": self.refl,
            "corefl": self.corefl,
            "terms": self.terms,
        }
        if self.mismatches:
            out["mismatches"] = self.mismatches
        if self.error:
            out["error"] = self.error
        return out


def verify_type(name: str, directory=None, rows: list[CharRow] | None = None) -> VerificationReport:
    """Compare the character-table EGF with the product formula, exactly.

    The tables give chi(c) rather than chi(c^-1); the sum then counts
    factorizations of c^-1, which are in bijection with those of c
    (reverse the tuple and invert each reflection).
    """
    ext, loaded = load_type(name, directory)
    rows = loaded if rows is None else rows
    report = VerificationReport(ext.name, False, ext.rank, ext.order, ext.num_reflections, ext.num_hyperplanes)
    expected = closed_form_egf(ext)
    report.terms = expected.to_json()
    if len(rows) != ext.irreducibles:
        report.error = f"{len(rows)} rows but {ext.irreducibles} irreducibles"
        return report
    try:
        got = table_egf(ext, rows)
    except ValueError as exc:
        report.error = str(exc)
        return report
    for e in sorted(set(got.terms) | set(expected.terms), reverse=True):
        a = got.terms.get(e, CycloNum.rational(0))
        b = expected.terms.get(e, CycloNum.rational(0))
        if a != b:
            report.mismatches.append({"exponent": str(e), "table": str(a.as_rational()), "formula": str(b.as_rational())})
    report.terms = got.to_json()
    report.passed = not report.mismatches
    return report
