"""Acceptance criteria, each run at its stated scale and time limit.

Every test records one PASS/FAIL line, printed in the terminal summary.
"""

import time
from itertools import product

import pytest

from conftest import ACCEPTANCE_LINES
from fpcodes import ci, codes, verify
from fpcodes import monomial as mono
from fpcodes.ff import parse_field
from fpcodes.formats import PSPACE_F2_BINOMIALS, load_example

pytestmark = pytest.mark.acceptance


class Criterion:
    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit

    def __enter__(self):
        self.t0 = time.perf_counter()
        self.detail = ""
        return self

    def __exit__(self, exc_type, exc, tb):
        dt = time.perf_counter() - self.t0
        ok = exc_type is None and dt < self.limit
        status = "PASS" if ok else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        ACCEPTANCE_LINES.append(f"{status} [{self.number}] {self.title}: {dt:.2f}s / {self.limit}s{extra}")
        print(ACCEPTANCE_LINES[-1])
        if exc_type is None:
            assert dt < self.limit, f"criterion {self.number} took {dt:.2f}s, limit {self.limit}s"
        return False


def golden(name):
    t = verify.example_table(name)
    return t["H"], t["delta"], t["fp"], t["degree"], t["reg"]


def test_1_golden_nine_points():
    with Criterion(1, "golden table, 9 points in P^3(F_3)", 1):
        assert golden("nine-points") == ((3, 6, 8, 9), (6, 3, 2, 1), (6, 3, 2, 1), 9, 4)


def test_2_golden_six_points():
    with Criterion(2, "golden table, 6 points in P^2(F_3)", 1):
        X, L = load_example("six-points")
        assert set(L.gens) == {(0, 2, 1), (2, 0, 0)}
        assert golden("six-points") == ((3, 5, 6), (3, 2, 1), (3, 2, 1), 6, 3)


def lead_term_selections():
    """Leading-term choices for the three binomials that some monomial order realizes.

    Choosing u over v in u - v with u/v = t_i/t_j forces t_i > t_j; a choice is
    realizable iff these comparisons are acyclic.
    """
    out = []
    for pick in product((0, 1), repeat=3):
        edges = []
        for (u, v), c in zip(PSPACE_F2_BINOMIALS, pick):
            lead, other = (u, v) if c == 0 else (v, u)
            big = next(i for i in range(3) if lead[i] > other[i])
            small = next(i for i in range(3) if lead[i] < other[i])
            edges.append((big, small))
        cyclic = any(all(any(e == (a, b) for e in edges) for a, b in zip(cyc, cyc[1:] + cyc[:1]))
                     for cyc in ([0, 1, 2], [0, 2, 1]))
        if not cyclic:
            leads = [(u, v)[c] for (u, v), c in zip(PSPACE_F2_BINOMIALS, pick)]
            out.append(mono.minimalize(3, leads))
    return out


def test_3_golden_plane_f2():
    with Criterion(3, "golden table, P^2(F_2), six leading-term selections", 5) as c:
        X, L = load_example("plane-f2")
        assert len(X) == 7
        assert golden("plane-f2") == ((3, 6, 7), (4, 2, 1), (4, 1, 1), 7, 3)
        sels = lead_term_selections()
        assert len(sels) == 6
        assert len({tuple(sorted(S.gens)) for S in sels}) == 6
        delta2 = codes.min_distance_enum(X, 2)
        for S in sels:
            assert mono.hilbert_oracle(S).degree == 7
            assert ci.fp_bruteforce(S, 2) != delta2
        c.detail = f"fp(2) per selection {[ci.fp_bruteforce(S, 2) for S in sels]} vs delta(2)={delta2}"


def test_4_degree_formulas():
    with Criterion(4, "degree formulas against the counting oracle", 60) as c:
        r1, r2 = verify.suite_degree_i(), verify.suite_degree_ii()
        c.detail = f"case I {r1.checked}, case II {r2.checked} monomials"
        assert r1.ok, r1.failures
        assert r2.ok, r2.failures


def test_5_footprint():
    with Criterion(5, "closed-form footprint against brute force", 120) as c:
        r = verify.suite_footprint()
        c.detail = f"{r.checked} checks"
        assert r.ok, r.failures


def test_6_cartesian():
    with Criterion(6, "cartesian codes: enumeration = closed form = footprint", 60) as c:
        r = verify.suite_cartesian()
        c.detail = f"{sum(1 for _ in verify.cartesian_grid())} point sets, {r.checked} checks"
        assert r.ok, r.failures


def _torus_literal():
    bad = []
    for q, s in verify.TORUS_CASES:
        T = codes.torus_pointset(parse_field(str(q)), s)
        reg = (q - 2) * (s - 1)
        for d in range(1, reg + 3):
            delta = codes.min_distance_enum(T, d)
            want = verify.torus_formula(q, s, d) if d <= reg - 1 else 1
            if delta != want:
                bad.append((q, s, d, delta, want))
    return bad


@pytest.mark.xfail(strict=True, reason="the stated expression is the zero count |T| - delta, not delta")
def test_7_torus_as_stated():
    with Criterion(7, "torus: delta equals the stated expression", 10) as c:
        bad = _torus_literal()
        c.detail = f"mismatches (q, s, d, delta, expression): {bad}" if bad else ""
        assert not bad


def test_7_torus_zero_count():
    with Criterion("7'", "torus: |T| - delta equals the stated expression, delta = 1 after", 10) as c:
        r = verify.suite_torus()
        c.detail = f"{r.checked} degrees"
        assert r.ok, r.failures


def test_8_aug28():
    with Criterion(8, "product/sum inequality fuzz", 30) as c:
        r = verify.suite_aug28()
        wide = verify.suite_aug28(max_m=4, max_e=6, max_b0=3)
        c.detail = f"stated grid {r.checked} cases, widened to e_i <= 6: {wide.checked} cases"
        assert r.ok and wide.ok, r.failures + wide.failures
        assert r.checked == 93747
        assert wide.checked >= 10**5


def test_9_cover():
    with Criterion(9, "hyperplane covers need at least reg_X hyperplanes", 60) as c:
        found = {}
        for name, bound in (("nine-points", 4), ("six-points", 3)):
            X, _ = load_example(name)
            vals = []
            for P in X:
                res = codes.min_hyperplane_cover(X, P, 4)
                vals.append(res.lower_bound if isinstance(res, codes.NotFoundWithin) else res)
            found[name] = vals
            assert min(vals) >= bound
        r = verify.suite_cover()
        c.detail = f"{found}; cover suite {r.checked} points"
        assert r.ok, r.failures


def test_10_structural():
    with Criterion(10, "Singleton, tail, monomial vanishing ideals, representatives", 10) as c:
        r = verify.suite_structural(n_sets=100, n_scalings=1000)
        c.detail = f"{r.checked} checks"
        assert r.ok, r.failures
