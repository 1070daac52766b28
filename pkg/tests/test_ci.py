from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fpcodes import ci
from fpcodes import monomial as mono
from fpcodes.ci import BEYOND_REG, CIShape, KLDecomp
from fpcodes.errors import NotCompleteIntersection, NotDimOne, NotInIdealViolated, PreconditionViolated
from fpcodes.monomial import minimalize


def ideal(s, *gens):
    return minimalize(s, gens)


# -- classification ------------------------------------------------------------------

def test_classify_case_i():
    shape = ci.classify_ci_dim1(ideal(3, (0, 2, 0), (0, 0, 3)))
    assert shape.variant == ci.CASE_I
    assert shape.degrees == (2, 3)
    assert shape.perm == (0, 1, 2)


def test_classify_case_ii_binomial_first():
    L = ideal(3, (2, 1, 0), (0, 0, 2))
    shape = ci.classify_ci_dim1(L)
    assert shape.variant == ci.CASE_II
    assert sorted(shape.sorted_degrees) == [2, 3]
    assert shape.c == (1, 2)
    # the normal-form ideal is the permuted input
    assert mono.same_ideal(shape.normal_ideal(), minimalize(3, [shape.to_normal(g) for g in L.gens]))


def test_classify_not_dim_one():
    with pytest.raises(NotDimOne):
        ci.classify_ci_dim1(ideal(3, (0, 2, 0), (0, 1, 1)))


def test_classify_dim_zero():
    with pytest.raises(NotDimOne):
        ci.classify_ci_dim1(ideal(2, (1, 0), (0, 1)))


def test_classify_overlapping_supports():
    # dimension one but not a complete intersection
    with pytest.raises(NotCompleteIntersection):
        ci.classify_ci_dim1(ideal(3, (1, 1, 0), (0, 1, 1), (1, 0, 1), (0, 0, 2)))


def test_classify_roundtrip_perm():
    L = ideal(4, (0, 0, 3, 0), (2, 0, 0, 0), (0, 1, 0, 1))
    shape = ci.classify_ci_dim1(L)
    for g in L.gens:
        assert shape.from_normal(shape.to_normal(g)) == g
    assert mono.same_ideal(shape.normal_ideal(), minimalize(4, [shape.to_normal(g) for g in L.gens]))


# -- k / l --------------------------------------------------------------------------

@pytest.mark.parametrize("ds,d,want", [
    ((1, 3, 3), 1, KLDecomp(1, 1)),
    ((2, 2), 1, KLDecomp(0, 1)),
    ((3, 3), 4, BEYOND_REG),
    ((1, 1, 4), 2, KLDecomp(2, 2)),
])
def test_kl_decompose(ds, d, want):
    assert ci.kl_decompose(ds, d) == want


def test_kl_rejects_unsorted():
    with pytest.raises(PreconditionViolated):
        ci.kl_decompose((3, 2), 1)
    with pytest.raises(PreconditionViolated):
        ci.kl_decompose((2, 3), 0)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(1, 6), min_size=1, max_size=5).map(sorted), st.integers(1, 30))
def test_kl_identity(ds, d):
    kl = ci.kl_decompose(ds, d)
    if d >= sum(x - 1 for x in ds):
        assert kl.beyond_reg
        return
    assert 0 <= kl.k <= len(ds) - 1
    assert 1 <= kl.ell <= ds[kl.k] - 1
    assert sum(x - 1 for x in ds[: kl.k]) + kl.ell == d


# -- closed forms ---------------------------------------------------------------

@pytest.mark.parametrize("ds,d,want", [
    ((1, 3, 3), 1, 6), ((1, 3, 3), 2, 3), ((1, 3, 3), 3, 2), ((1, 3, 3), 4, 1),
    ((2, 2), 1, 2), ((2, 2), 2, 1), ((2, 2), 5, 1),
    ((6,), 3, 3),
])
def test_fp_closed_form(ds, d, want):
    assert ci.fp_closed_form(ds, d) == want


@pytest.mark.parametrize("n,d", [(n, d) for n in range(2, 8) for d in range(1, n - 1)])
def test_fp_points_on_a_line(n, d):
    # n points of P^1: |X| - d below the regularity
    assert ci.fp_closed_form((n,), d) == n - d


@pytest.mark.parametrize("ds,want", [((1, 3, 3), (9, 4)), ((2, 3), (6, 3)), ((1, 1, 1), (1, 0))])
def test_ci_degree_reg(ds, want):
    assert ci.ci_degree_reg(ds) == want


@pytest.mark.parametrize("ds,a,want", [((2, 3), (0, 1, 0), 3), ((3,), (0, 2), 2), ((2, 3), (7, 1, 2), 5)])
def test_degree_case_i(ds, a, want):
    assert ci.degree_case_i(ds, a) == want


@pytest.mark.parametrize("ds,a", [((2, 3), (3, 0, 0)), ((2, 3), (0, 2, 0)), ((2, 3), (0, 1)), ((2, 3), (0, -1, 1))])
def test_degree_case_i_preconditions(ds, a):
    with pytest.raises(PreconditionViolated):
        ci.degree_case_i(ds, a)


def test_degree_case_i_names_failing_index():
    with pytest.raises(PreconditionViolated, match="a_3"):
        ci.degree_case_i((2, 3), (0, 1, 3))


SHAPE_P1 = CIShape.case_ii(1, (1, 2), (2,))  # (t1 t2^2, t3^2)


def test_case_ii_shape_frame():
    assert SHAPE_P1.degrees == (3, 2)
    assert set(SHAPE_P1.generators()) == {(1, 2, 0), (0, 0, 2)}


@pytest.mark.parametrize("a,want", [((1, 0, 0), 2), ((0, 1, 0), 2), ((0, 2, 1), 5)])
def test_degree_case_ii(a, want):
    assert ci.degree_case_ii(SHAPE_P1, a) == want
    assert mono.degree_with_monomial(SHAPE_P1.normal_ideal(), a) == want


def test_degree_case_ii_in_ideal():
    with pytest.raises(NotInIdealViolated):
        ci.degree_case_ii(SHAPE_P1, (1, 2, 0))
    with pytest.raises(PreconditionViolated):
        ci.degree_case_ii(SHAPE_P1, (0, 0, 0))


def test_case_ii_witness_examples():
    assert ci.case_ii_witness(SHAPE_P1, 0, 1) == (1, 0, 0)
    shape = CIShape.case_ii(2, (1, 2), (2, 3))
    assert shape.degrees == (2, 3, 3)
    assert ci.case_ii_witness(shape, 0, 1) == (1, 0, 0, 0)
    with pytest.raises(PreconditionViolated):
        ci.case_ii_witness(shape, 0, 0)


@pytest.mark.parametrize("L,d,want", [
    (ideal(4, (0, 1, 0, 0), (0, 0, 3, 0), (0, 0, 0, 3)), 1, 6),
    (ideal(4, (0, 1, 0, 0), (0, 0, 3, 0), (0, 0, 0, 3)), 2, 3),
    (ideal(4, (0, 1, 0, 0), (0, 0, 3, 0), (0, 0, 0, 3)), 3, 2),
    (ideal(4, (0, 1, 0, 0), (0, 0, 3, 0), (0, 0, 0, 3)), 4, 1),
    (ideal(3, (1, 2, 0), (1, 0, 2), (0, 1, 2)), 1, 4),
    (ideal(2, (0, 2)), 1, 1),
])
def test_fp_bruteforce(L, d, want):
    assert ci.fp_bruteforce(L, d) == want


def test_fp_without_zero_divisors_is_degree():
    # every degree-1 standard monomial of (t1, t2) in K[t1,t2,t3] is regular
    L = ideal(3, (1, 0, 0), (0, 1, 0))
    assert mono.zero_divisor_monomials(L, 1) == []
    assert ci.fp_bruteforce(L, 1) == 1


def test_fp_bruteforce_needs_dim_one():
    with pytest.raises(NotDimOne):
        ci.fp_bruteforce(ideal(3, (0, 1, 0)), 1)
    with pytest.raises(NotDimOne):
        ci.fp_argmax(ideal(2, (1, 0), (0, 1)), 1)


def test_fp_argmax_witness():
    L = ideal(3, (0, 2, 0), (0, 0, 3))
    fp, a = ci.fp_argmax(L, 1)
    assert fp == 3 and a == (0, 1, 0)
    assert mono.degree_with_monomial(L, a) == 6 - fp


@pytest.mark.parametrize("e,b,b0,k,want", [
    ((2, 3), (1, 1), 1, 0, (2, 0, True)),
    ((2, 3), (1, 1), 1, 1, (2, 2, True)),
    ((5,), (0,), 1, 0, (5, 5, True)),
])
def test_aug28_examples(e, b, b0, k, want):
    assert tuple(ci.aug28_inequality(e, b, b0, k)) == want


@pytest.mark.parametrize("args", [
    ((3, 2), (0, 0), 1, 0), ((2, 3), (2, 0), 1, 0), ((2, 3), (0, 0), 0, 0), ((2, 3), (0, 0), 1, 2),
    ((), (), 1, 0),
])
def test_aug28_preconditions(args):
    with pytest.raises(PreconditionViolated):
        ci.aug28_inequality(*args)


# -- properties over random shapes ----------------------------------------------------------

@st.composite
def case_ii_shapes(draw):
    s = draw(st.integers(2, 5))
    p = draw(st.integers(1, s - 1))
    cp = draw(st.integers(1, 3))
    cq = draw(st.integers(cp, 3))
    pure = draw(st.lists(st.integers(1, 4), min_size=s - 2, max_size=s - 2))
    return CIShape.case_ii(p, (cp, cq), pure)


@settings(max_examples=80, deadline=None)
@given(case_ii_shapes(), st.data())
def test_case_ii_formula_matches_oracle(shape, data):
    L = shape.normal_ideal()
    d = data.draw(st.integers(1, sum(x - 1 for x in shape.degrees) + 2))
    zd = mono.zero_divisor_monomials(L, d)
    if zd:
        a = data.draw(st.sampled_from(zd))
        assert ci.degree_case_ii(shape, a) == mono.degree_with_monomial(L, a)


@settings(max_examples=80, deadline=None)
@given(case_ii_shapes(), st.data())
def test_classification_recovers_shape(shape, data):
    # scramble variables, classify, and compare invariants
    perm = data.draw(st.permutations(range(shape.s)))
    gens = [tuple(g[perm[i]] for i in range(shape.s)) for g in shape.generators()]
    got = ci.classify_ci_dim1(minimalize(shape.s, gens))
    assert got.variant == ci.CASE_II
    assert sorted(got.sorted_degrees) == sorted(shape.degrees)
    assert got.c == shape.c
    assert prod(got.degrees) == mono.hilbert_oracle(minimalize(shape.s, gens)).degree


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=1, max_size=4), st.data())
def test_case_i_fp_positive_and_witnessed(ds, data):
    shape = CIShape.case_i(ds)
    srt = shape.sorted_degrees
    d = data.draw(st.integers(1, sum(srt) + 1))
    fp = ci.fp_closed_form(srt, d)
    assert 1 <= fp <= prod(srt)
    kl = ci.kl_decompose(srt, d)
    if not kl.beyond_reg:
        b = ci.case_i_witness(srt, kl.k, kl.ell)
        assert sum(b) == d
        assert ci.degree_case_i(srt, b) == prod(srt) - fp
