import re

from fpcodes import ci, verify


def small_shapes():
    return list(verify.ci_grid(svals=(2, 3), maxdeg=3))


def test_footprint_fault_injection_reports_witness():
    def off_by_one(ds, d):
        return ci.fp_closed_form(ds, d) + (1 if d == 1 else 0)

    res = verify.suite_footprint(small_shapes(), fp=off_by_one)
    assert not res.ok
    hits = [re.match(r"ds=\((.*?)\) d=(\d+) a=\((.*?)\)", msg) for msg in res.failures]
    hits = [m for m in hits if m]
    assert hits, res.failures
    m = hits[0]
    assert m.group(2) == "1"
    # the reported a is a genuine zero-divisor of degree 1
    assert sum(int(x) for x in m.group(3).split(",") if x.strip()) == 1


def test_footprint_small_grid_passes():
    res = verify.suite_footprint(small_shapes())
    assert res.ok and res.checked > 50


def test_degree_suites_small():
    assert verify.suite_degree_i(list(verify.case_i_grid(svals=(2, 3)))).ok
    assert verify.suite_degree_ii(list(verify.case_ii_grid(svals=(2, 3)))).ok


def test_aug28_grid_count():
    # ascending e of length m with entries <= 5, every admissible b, b0 in 1..3, k in 0..m-1
    from itertools import combinations_with_replacement
    from math import prod
    n = sum(prod(e) * 3 * m for m in range(1, 5) for e in combinations_with_replacement(range(1, 6), m))
    assert n == 93747
    assert sum(1 for _ in verify.aug28_grid()) == n


def test_aug28_small():
    res = verify.suite_aug28(max_m=3, max_e=4)
    assert res.ok and res.checked > 0


def test_cartesian_small():
    res = verify.suite_cartesian(verify.cartesian_grid(qs=(2, 3), max_size=6, max_factors=2))
    assert res.ok


def test_torus_and_golden():
    assert verify.suite_torus().ok
    assert verify.suite_golden().ok


def test_structural_small():
    res = verify.suite_structural(n_sets=20, n_scalings=100)
    assert res.ok


def test_suite_result_line():
    r = verify.SuiteResult("x", checked=3)
    assert r.line().startswith("PASS x: 3 checked")
    r.fail("boom")
    assert r.line().startswith("FAIL x")


def test_cartesian_grid_covers_all_subsets():
    shapes = list(verify.cartesian_grid(qs=(2,), max_size=12, max_factors=1))
    assert len(shapes) == 3  # {0}, {1}, {0,1}


def test_torus_formula():
    assert verify.torus_formula(3, 3, 1) == 2
    assert verify.torus_formula(4, 2, 1) == 1
