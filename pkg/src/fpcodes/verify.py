"""Exhaustive formula-versus-oracle suites.

Every suite compares a closed form against an independent computation
(standard-monomial counting, codeword enumeration, direct evaluation) and
returns a :class:`SuiteResult`.  The CLI ``verify`` command and the test
suite both drive these functions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product
from math import prod
from typing import Callable, Iterator, Sequence

import numpy as np

from . import ci, codes
from . import monomial as mono
from .ff import fq_make, parse_field
from .formats import load_example

MAX_REPORTED = 20


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.checked} checked, {len(self.failures)} failed, {self.seconds:.2f}s"


def _timed(fn):
    def run(*args, **kw) -> SuiteResult:
        t0 = time.perf_counter()
        res = fn(*args, **kw)
        res.seconds = time.perf_counter() - t0
        return res
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


# -- grids -------------------------------------------------------------------

CASE_II_BINOMIALS = ((1, 1), (1, 2), (1, 3), (2, 2))


def case_i_grid(svals: Sequence[int] = (2, 3, 4), maxdeg: int = 4) -> Iterator[ci.CIShape]:
    for s in svals:
        for ds in product(range(1, maxdeg + 1), repeat=s - 1):
            yield ci.CIShape.case_i(ds)


def case_ii_grid(svals: Sequence[int] = (2, 3, 4), maxdeg: int = 4) -> Iterator[ci.CIShape]:
    for s in svals:
        for p in range(1, s):
            for c in CASE_II_BINOMIALS:
                if sum(c) > maxdeg:
                    continue
                for pure in product(range(1, maxdeg + 1), repeat=s - 2):
                    yield ci.CIShape.case_ii(p, c, pure)


def ci_grid(**kw) -> Iterator[ci.CIShape]:
    yield from case_i_grid(**kw)
    yield from case_ii_grid(**kw)


def _zero_divisors_upto(shape: ci.CIShape, extra: int = 2) -> Iterator[tuple[int, mono.ExpVec]]:
    L = shape.normal_ideal()
    reg = sum(x - 1 for x in shape.degrees)
    for d in range(1, reg + extra + 1):
        for a in mono.zero_divisor_monomials(L, d):
            yield d, a


# -- degree formulas -----------------------------------------------------------

def _record(res: SuiteResult, msg: str) -> None:
    if len(res.failures) < MAX_REPORTED:
        res.fail(msg)
    else:
        res.failures.append("...")


@_timed
def suite_degree_i(shapes: Sequence[ci.CIShape] | None = None) -> SuiteResult:
    """Case I degree formula against the counting oracle."""
    res = SuiteResult("degree-i")
    for shape in shapes if shapes is not None else case_i_grid():
        L = shape.normal_ideal()
        for d, a in _zero_divisors_upto(shape):
            res.checked += 1
            want = mono.degree_with_monomial(L, a)
            got = ci.degree_case_i(shape.degrees, a)
            if got != want:
                _record(res, f"ds={shape.degrees} a={a}: formula {got}, oracle {want}")
    return res


@_timed
def suite_degree_ii(shapes: Sequence[ci.CIShape] | None = None) -> SuiteResult:
    """Case II degree formula against the counting oracle."""
    res = SuiteResult("degree-ii")
    for shape in shapes if shapes is not None else case_ii_grid():
        L = shape.normal_ideal()
        for d, a in _zero_divisors_upto(shape):
            res.checked += 1
            want = mono.degree_with_monomial(L, a)
            got = ci.degree_case_ii(shape, a)
            if got != want:
                _record(res, f"p={shape.p} c={shape.c} ds={shape.degrees} a={a}: formula {got}, oracle {want}")
    return res


FpFunction = Callable[[Sequence[int], int], int]


@_timed
def suite_footprint(shapes: Sequence[ci.CIShape] | None = None,
                    fp: FpFunction = ci.fp_closed_form) -> SuiteResult:
    """Closed-form footprint against the definition, for 1 <= d <= reg + 2.

    ``fp`` may be replaced to test that a wrong formula is caught; each
    failure names ``(ds, d, a)`` with ``a`` a zero-divisor attaining the true value.
    """
    res = SuiteResult("footprint")
    for shape in shapes if shapes is not None else ci_grid():
        L = shape.normal_ideal()
        ds = shape.sorted_degrees
        reg = sum(x - 1 for x in ds)
        for d in range(1, reg + 3):
            res.checked += 1
            want, a = ci.fp_argmax(L, d)
            got = fp(ds, d)
            if got != want or want < 1:
                _record(res, f"ds={ds} d={d} a={a}: closed form {got}, brute force {want}")
            kl = ci.kl_decompose(ds, d)
            if kl.beyond_reg or not shape.is_sorted:
                continue
            # the explicit witness must attain the bound
            res.checked += 1
            if shape.variant == ci.CASE_I:
                b = ci.case_i_witness(ds, kl.k, kl.ell)
            else:
                b = ci.case_ii_witness(shape, kl.k, kl.ell)
            ok = (sum(b) == d and b not in L and mono.is_zero_divisor(L, b)
                  and mono.degree_with_monomial(L, b) == prod(ds) - want)
            if not ok:
                _record(res, f"ds={ds} d={d}: witness {b} does not attain fp={want}")
    return res


# -- the product/sum inequality --------------------------------------------------

def aug28_grid(max_m: int = 4, max_e: int = 5, max_b0: int = 3):
    for m in range(1, max_m + 1):
        for e in combinations_with_replacement(range(1, max_e + 1), m):
            for b in product(*(range(ei) for ei in e)):
                for b0 in range(1, max_b0 + 1):
                    for k in range(m):
                        yield e, b, b0, k


@_timed
def suite_aug28(**grid) -> SuiteResult:
    res = SuiteResult("aug28")
    for e, b, b0, k in aug28_grid(**grid):
        res.checked += 1
        r = ci.aug28_inequality(e, b, b0, k)
        if not r.holds:
            _record(res, f"e={e} b={b} b0={b0} k={k}: lhs {r.lhs} < rhs {r.rhs}")
    return res


# -- codes -------------------------------------------------------------------------

def cartesian_grid(qs: Sequence[int] = (2, 3, 4), max_size: int = 12,
                   max_factors: int = 3) -> Iterator[tuple[int, tuple[tuple[int, ...], ...]]]:
    """All tuples of nonempty subsets ``A_2, ..., A_s`` with ``prod |A_i| <= max_size``."""
    for q in qs:
        subsets = [A for r in range(1, q + 1) for A in combinations(range(q), r)]
        for m in range(1, max_factors + 1):
            for factors in product(subsets, repeat=m):
                if prod(len(A) for A in factors) <= max_size:
                    yield q, factors


def _field(q: int):
    return parse_field(str(q))


def standard_codewords(X: codes.PointSet, ds: Sequence[int], d: int):
    """Yield (leading exponent, zero count) for every nonzero standard polynomial of degree d.

    Standard monomials of the cartesian initial ideal are those with
    ``a_i < d_i`` for ``i >= 2``; they are linearly independent on ``X``.
    """
    F = X.F
    std = [a for a in mono.monomials_of_degree(X.s, d) if all(x < y for x, y in zip(a[1:], ds))]
    rows = codes.evaluation_rows(F, X.array, d, std)
    order = sorted(range(len(std)), key=lambda i: tuple(-std[i][v] for v in [0] + list(range(X.s - 1, 0, -1))),
                   reverse=True)
    for coeffs in product(range(F.q), repeat=len(std)):
        if not any(coeffs):
            continue
        lead = next(std[i] for i in order if coeffs[i])
        acc = np.zeros(len(X), dtype=np.int64)
        for c, r in zip(coeffs, rows):
            if c:
                acc = F.add_table[acc, F.mul_table[c, r]]
        yield lead, int(np.count_nonzero(acc == 0))


@_timed
def suite_cartesian(grid=None, zero_bound_limit: int = 256) -> SuiteResult:
    """Cartesian codes: enumerated distance, closed form, and footprint brute force agree."""
    res = SuiteResult("cartesian")
    brute: dict = {}  # the footprint depends on the factor sizes only
    for q, factors in grid if grid is not None else cartesian_grid():
        F = _field(q)
        X = codes.cartesian_pointset(F, *factors)
        sizes = tuple(len(A) for A in factors)
        ds = tuple(sorted(sizes))
        L = codes.cartesian_initial_ideal(sizes)
        reg = codes.reg_X(X)
        for d in range(1, reg + 2):
            res.checked += 1
            closed = codes.cartesian_min_distance(ds, d)
            fpv = ci.fp_closed_form(ds, d)
            key = (sizes, d)
            if key not in brute:
                brute[key] = ci.fp_bruteforce(L, d)
            vals = {"closed": closed, "fp": fpv, "fp_brute": brute[key]}
            if len(X) >= 2:
                vals["enum"] = codes.min_distance_enum(X, d)
            if len(set(vals.values())) != 1:
                _record(res, f"q={q} A={factors} d={d}: {vals}")
            k = codes.hilbert_X(X, d)
            if F.q**k <= zero_bound_limit:
                for lead, z in standard_codewords(X, sizes, d):
                    res.checked += 1
                    bound = len(X) - prod(n - a for n, a in zip(sizes, lead[1:]))
                    if z > bound:
                        _record(res, f"q={q} A={factors} d={d} lead={lead}: {z} zeros > {bound}")
    return res


def torus_formula(q: int, s: int, d: int) -> int:
    """The torus zero-count expression ``(q-1)^{s-1} - (q-1)^{s-(k+2)} (q-1-l)``."""
    ds = (q - 1,) * (s - 1)
    kl = ci.kl_decompose(ds, d)
    return (q - 1) ** (s - 1) - (q - 1) ** (s - (kl.k + 2)) * (q - 1 - kl.ell)


TORUS_CASES = ((3, 3), (4, 2))


@_timed
def suite_torus(cases=TORUS_CASES, extra: int = 2) -> SuiteResult:
    """On the torus, |T| - delta(d) is the zero-count expression below the regularity, and delta = 1 after."""
    res = SuiteResult("torus")
    for q, s in cases:
        T = codes.torus_pointset(_field(q), s)
        reg = (q - 2) * (s - 1)
        for d in range(1, reg + extra + 1):
            res.checked += 1
            delta = codes.min_distance_enum(T, d)
            want = len(T) - torus_formula(q, s, d) if d <= reg - 1 else 1
            if delta != want:
                _record(res, f"q={q} s={s} d={d}: delta {delta}, expected {want}")
    return res


GOLDEN = {
    "nine-points": {"H": (3, 6, 8, 9), "delta": (6, 3, 2, 1), "fp": (6, 3, 2, 1), "degree": 9, "reg": 4},
    "six-points": {"H": (3, 5, 6), "delta": (3, 2, 1), "fp": (3, 2, 1), "degree": 6, "reg": 3},
    "plane-f2": {"H": (3, 6, 7), "delta": (4, 2, 1), "fp": (4, 1, 1), "degree": 7, "reg": 3},
}


def example_table(name: str) -> dict:
    X, L = load_example(name)
    reg = codes.reg_X(X)
    ds = range(1, reg + 1)
    return {
        "H": tuple(codes.hilbert_X(X, d) for d in ds),
        "delta": tuple(codes.min_distance_enum(X, d) for d in ds),
        "fp": tuple(ci.fp_bruteforce(L, d) for d in ds),
        "degree": mono.hilbert_oracle(L).degree,
        "reg": reg,
        "size": len(X),
    }


@_timed
def suite_golden() -> SuiteResult:
    res = SuiteResult("golden")
    for name, want in GOLDEN.items():
        got = example_table(name)
        for key, val in want.items():
            res.checked += 1
            if got[key] != val:
                _record(res, f"{name} {key}: got {got[key]}, expected {val}")
        res.checked += 1
        if got["size"] != want["degree"]:
            _record(res, f"{name}: |X|={got['size']} differs from deg S/in(I(X))={want['degree']}")
    return res


@_timed
def suite_cover(small_cartesian: bool = True) -> SuiteResult:
    """Covering X - {P} by hyperplanes missing P needs at least reg_X hyperplanes."""
    res = SuiteResult("cover")
    targets = []
    for name, dmax in (("nine-points", 4), ("six-points", 4)):
        X, _ = load_example(name)
        targets.append((name, X, GOLDEN[name]["reg"], dmax))
    if small_cartesian:
        for q, factors in cartesian_grid(qs=(3,), max_size=9, max_factors=2):
            X = codes.cartesian_pointset(_field(q), *factors)
            reg = codes.reg_X(X)
            targets.append((f"q={q} A={factors}", X, reg, reg + 1))
    for label, X, reg, dmax in targets:
        for P in X:
            res.checked += 1
            r = codes.min_hyperplane_cover(X, P, dmax)
            got = r.lower_bound if isinstance(r, codes.NotFoundWithin) else r
            if got < reg:
                _record(res, f"{label} P={P.coords}: cover of size {got} < reg {reg}")
    return res


def random_point_set(rng: np.random.Generator, F, s: int, n: int, unit_bias: float = 0.5) -> codes.PointSet:
    raws = []
    for _ in range(n):
        if rng.random() < unit_bias:
            v = [0] * s
            v[int(rng.integers(s))] = int(rng.integers(1, F.q))
        else:
            v = [int(x) for x in rng.integers(0, F.q, size=s)]
            if not any(v):
                v[0] = 1
        raws.append(v)
    return codes.point_set(F, raws, s=s)


@_timed
def suite_structural(n_sets: int = 100, n_scalings: int = 1000, seed: int = 0) -> SuiteResult:
    """Singleton bound, delta = 1 past regularity, monomial vanishing ideals, representative independence."""
    res = SuiteResult("structural")
    rng = np.random.default_rng(seed)
    fields = [fq_make(2), fq_make(3), fq_make(2, 2)]
    built = [load_example(n)[0] for n in GOLDEN]
    built += [codes.torus_pointset(fq_make(3), 3), codes.projective_space_pointset(fq_make(3), 2)]
    for _ in range(n_sets):
        F = fields[int(rng.integers(len(fields)))]
        s = int(rng.integers(2, 4))
        X = random_point_set(rng, F, s, int(rng.integers(1, 6)))
        res.checked += 1
        if codes.is_monomial_vanishing(X) != codes.vanishing_ideal_is_monomial(X):
            _record(res, f"{F!r} {[P.coords for P in X]}: unit-point criterion disagrees with linear algebra")
        if len(X) >= 2:
            built.append(X)
    for X in built:
        reg = codes.reg_X(X)
        for d in range(1, reg + 2):
            res.checked += 1
            delta = codes.min_distance_enum(X, d)
            h = codes.hilbert_X(X, d)
            if not 1 <= delta <= len(X) - h + 1:
                _record(res, f"{[P.coords for P in X]} d={d}: delta={delta} breaks Singleton with H={h}")
            if d >= reg and delta != 1:
                _record(res, f"{[P.coords for P in X]} d={d}: delta={delta} != 1 past reg {reg}")
    for _ in range(n_scalings):
        F = fields[int(rng.integers(len(fields)))]
        s = int(rng.integers(2, 5))
        raw = [int(x) for x in rng.integers(0, F.q, size=s)]
        if not any(raw):
            raw[int(rng.integers(s))] = 1
        lam = int(rng.integers(1, F.q))
        scaled = [F.mul(lam, x) for x in raw]
        res.checked += 1
        P, Q = codes.normalize_point(F, raw), codes.normalize_point(F, scaled)
        d = int(rng.integers(1, 4))
        mons = list(mono.monomials_of_degree(s, d))
        G1 = codes.evaluation_rows(F, np.array([raw]), d, mons)
        G2 = codes.evaluation_rows(F, np.array([scaled]), d, mons)
        if P != Q or not np.array_equal(G1, G2):
            _record(res, f"{F!r} raw={raw} lambda={lam}: representative dependence")
    return res


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "degree-i": suite_degree_i,
    "degree-ii": suite_degree_ii,
    "footprint": suite_footprint,
    "aug28": suite_aug28,
    "cartesian": suite_cartesian,
    "torus": suite_torus,
    "golden": suite_golden,
    "cover": suite_cover,
    "structural": suite_structural,
}


def run_suites(names: Sequence[str] | None = None) -> list[SuiteResult]:
    names = list(names) if names else list(SUITES)
    return [SUITES[n]() for n in names]
