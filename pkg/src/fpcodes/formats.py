"""Text formats for point sets and monomial ideals, plus the bundled examples.

Point-set files::

    q=3 s=4
    1 0 0 0
    1 1 1 0

or a single cartesian line ``cartesian q=3 A2=0,1 A3=0,1,2``.  Ideal files::

    s=3
    0 2 1
    2 0 0

Blank lines and ``#`` comments are ignored.  Over a prime field point
coordinates are read as integers mod p, so ``-1`` may be written.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import codes
from . import monomial as mono
from .errors import InputError
from .ff import Fq, parse_field

_KV = re.compile(r"(\w+)=(\S*)")


def _lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _header(line: str) -> dict[str, str]:
    return dict(_KV.findall(line))


def _element(F: Fq, tok: str) -> int:
    try:
        n = int(tok)
    except ValueError:
        raise InputError(f"bad field element {tok!r}") from None
    if F.k == 1:
        return F.from_int(n)
    if not 0 <= n < F.q:
        raise InputError(f"{n} is not an element index of {F!r}")
    return n


def _int_list(tok: str) -> list[str]:
    tok = tok.strip("{}[]()")
    return [t for t in re.split(r"[,\s]+", tok) if t]


@dataclass(frozen=True)
class CartesianSpec:
    F: Fq
    factors: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(A) for A in self.factors)

    def pointset(self) -> codes.PointSet:
        return codes.cartesian_pointset(self.F, *self.factors)


def parse_cartesian(spec: str, F: Fq | None = None) -> CartesianSpec:
    """Parse ``[cartesian] [q=..] A2=0,1 A3=0,1,2``; ``F`` is used when ``q`` is absent."""
    kv = _header(spec)
    if "q" in kv:
        F = parse_field(kv["q"])
    if F is None:
        raise InputError("cartesian spec needs q=<field> or --field")
    keys = sorted((k for k in kv if re.fullmatch(r"A\d+", k)), key=lambda k: int(k[1:]))
    if not keys:
        raise InputError(f"no factors A2=... in {spec!r}")
    if [int(k[1:]) for k in keys] != list(range(2, len(keys) + 2)):
        raise InputError(f"factors must be A2, A3, ... without gaps: {keys}")
    factors = tuple(tuple(_element(F, t) for t in _int_list(kv[k])) for k in keys)
    return CartesianSpec(F, factors)


def parse_points(text: str, F: Fq | None = None) -> codes.PointSet | CartesianSpec:
    lines = _lines(text)
    if not lines:
        raise InputError("empty point-set file")
    if lines[0].startswith("cartesian"):
        return parse_cartesian(lines[0], F)
    kv = _header(lines[0])
    if "q" in kv:
        F = parse_field(kv["q"])
    if F is None:
        raise InputError("point-set header needs q=<field>")
    if "s" not in kv:
        raise InputError("point-set header needs s=<variables>")
    s = int(kv["s"])
    raws = []
    for line in lines[1:]:
        toks = line.split()
        if len(toks) != s:
            raise InputError(f"point {line!r} has {len(toks)} coordinates, expected {s}")
        raws.append([_element(F, t) for t in toks])
    return codes.point_set(F, raws, s=s)


def parse_ideal(text: str) -> mono.MonomialIdeal:
    lines = _lines(text)
    if not lines:
        raise InputError("empty ideal file")
    kv = _header(lines[0])
    if "s" not in kv:
        raise InputError("ideal header needs s=<variables>")
    s = int(kv["s"])
    gens = []
    for line in lines[1:]:
        try:
            gens.append([int(t) for t in line.split()])
        except ValueError:
            raise InputError(f"bad exponent line {line!r}") from None
    return mono.minimalize(s, gens)


def read_points(path: str | Path, F: Fq | None = None) -> codes.PointSet | CartesianSpec:
    return parse_points(Path(path).read_text(), F)


def read_ideal(path: str | Path) -> mono.MonomialIdeal:
    return parse_ideal(Path(path).read_text())


def format_points(X: codes.PointSet) -> str:
    lines = [f"q={X.F.p}^{X.F.k} s={X.s}" if X.F.k > 1 else f"q={X.F.p} s={X.s}"]
    lines += [" ".join(str(x) for x in P.coords) for P in X]
    return "\n".join(lines) + "\n"


def format_ideal(L: mono.MonomialIdeal) -> str:
    return "\n".join([f"s={L.s}"] + [" ".join(map(str, g)) for g in L.gens]) + "\n"


# -- bundled examples --------------------------------------------------------

EXAMPLES = {
    "nine-points": ("nine_points.txt", "nine_points_ideal.txt"),
    "six-points": ("six_points.txt", "six_points_ideal.txt"),
    "plane-f2": ("plane_f2.txt", "plane_f2_ideal.txt"),
}

# Universal Groebner basis of I(P^2) over GF(2), each binomial as (first term, second term).
PSPACE_F2_BINOMIALS = (
    ((1, 2, 0), (2, 1, 0)),
    ((1, 0, 2), (2, 0, 1)),
    ((0, 1, 2), (0, 2, 1)),
)


def _data(name: str) -> str:
    return resources.files("fpcodes").joinpath("data").joinpath(name).read_text()


def load_example(name: str) -> tuple[codes.PointSet, mono.MonomialIdeal]:
    """Point set and initial ideal of a bundled example."""
    if name not in EXAMPLES:
        raise InputError(f"unknown example {name!r}; choose from {sorted(EXAMPLES)}")
    pts, ideal = EXAMPLES[name]
    X = parse_points(_data(pts))
    return X, parse_ideal(_data(ideal))


# -- output ---------------------------------------------------------------------

def render_records(records: list[dict], fmt: str) -> str:
    """CSV (header plus rows) or a JSON array; key order is preserved, so output is byte-stable."""
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n"
    if fmt != "csv":
        raise InputError(f"unknown format {fmt!r}")
    if not records:
        return ""
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(records[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(records)
    return buf.getvalue()
