import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fpcodes.errors import DivisionByZero, InputError, NotPrime, ReducibleModulus, UnsupportedOrder
from fpcodes.ff import BUILTIN_MODULI, fq_arith, fq_make, is_irreducible, parse_field

SMALL = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)]


def test_gf3_arithmetic():
    F = fq_make(3)
    assert F.add(2, 2) == 1
    assert F.mul(2, 2) == 1


def test_gf4_x_squared():
    F = fq_make(2, 2, (1, 1, 1))
    x = 2  # digits (0, 1)
    assert F.mul(x, x) == 3  # x + 1


def test_composite_characteristic():
    with pytest.raises(NotPrime):
        fq_make(4)


def test_reducible_modulus():
    with pytest.raises(ReducibleModulus):
        fq_make(2, 2, (1, 0, 1))  # (x+1)^2


def test_large_order_needs_modulus():
    with pytest.raises(UnsupportedOrder):
        fq_make(2, 7)
    F = fq_make(2, 7, (1, 1, 0, 0, 0, 0, 0, 1))
    assert F.q == 128


def test_modulus_must_be_monic():
    with pytest.raises(InputError):
        fq_make(3, 2, (2, 2, 2))


@pytest.mark.parametrize("F_args,op,args,want", [
    ((3,), "inv", (2,), 2),
    ((2,), "add", (1, 1), 0),
    ((5,), "pow", (2, 4), 1),
    ((5,), "sub", (1, 3), 3),
    ((7,), "mul", (3, 5), 1),
])
def test_fq_arith(F_args, op, args, want):
    assert fq_arith(fq_make(*F_args), op, *args) == want


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        fq_make(5).inv(0)
    with pytest.raises(DivisionByZero):
        fq_make(2, 2).div(1, 0)


def test_unknown_operation():
    with pytest.raises(InputError):
        fq_arith(fq_make(2), "sqrt", 1)


def test_out_of_range_element():
    with pytest.raises(InputError):
        fq_make(3).add(3, 0)


@pytest.mark.parametrize("p,k", SMALL + [(2, 4)])
def test_field_axioms_exhaustive(p, k):
    F = fq_make(p, k)
    q = F.q
    assert len(set(F.elements())) == q
    A, M = F.add_table, F.mul_table
    idx = np.arange(q)
    assert (A == A.T).all() and (M == M.T).all()
    # associativity and distributivity over all triples
    a, b, c = np.meshgrid(idx, idx, idx, indexing="ij")
    assert (A[A[a, b], c] == A[a, A[b, c]]).all()
    assert (M[M[a, b], c] == M[a, M[b, c]]).all()
    assert (M[a, A[b, c]] == A[M[a, b], M[a, c]]).all()
    assert (A[idx, 0] == idx).all() and (M[idx, 1] == idx).all()
    assert (A[idx, F.neg_table] == 0).all()
    for x in F.nonzero():
        assert F.mul(x, F.inv(x)) == 1
        assert F.pow(x, q - 1) == 1


@pytest.mark.parametrize("pk", sorted(BUILTIN_MODULI))
def test_builtin_moduli(pk):
    p, k = pk
    assert is_irreducible(BUILTIN_MODULI[pk], p)
    F = fq_make(p, k)
    assert len(set(int(F.pow(F.generator, i)) for i in range(F.q - 1))) == F.q - 1


def test_prime_power_orders_up_to_64_build():
    orders = [n for n in range(2, 65) if _prime_power(n)]
    for n in orders:
        F = parse_field(str(n))
        assert F.q == n


def _prime_power(n):
    for p in range(2, n + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
    return False


@pytest.mark.parametrize("spec,q", [("3", 3), ("2^2", 4), ("4", 4), ("3^2", 9), (" 5 ", 5)])
def test_parse_field(spec, q):
    assert parse_field(spec).q == q


@pytest.mark.parametrize("spec", ["6", "x", "2^", "", "1"])
def test_parse_field_rejects(spec):
    with pytest.raises(InputError):
        parse_field(spec)


def test_fields_are_shared():
    assert fq_make(3, 2) is fq_make(3, 2)


def test_from_int_reduces():
    F = fq_make(3)
    assert F.from_int(-1) == 2
    assert F.from_int(7) == 1


def _naive_rank(F, M):
    # Gaussian elimination one scalar at a time
    M = [list(r) for r in M]
    rank, cols = 0, len(M[0]) if M else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = F.inv(M[rank][c])
        M[rank] = [F.mul(inv, x) for x in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][c]:
                f = M[r][c]
                M[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)]), st.integers(1, 5), st.integers(1, 6), st.data())
def test_rank_matches_naive_elimination(pk, rows, cols, data):
    F = fq_make(*pk)
    M = data.draw(st.lists(st.lists(st.integers(0, F.q - 1), min_size=cols, max_size=cols),
                           min_size=rows, max_size=rows))
    M = np.array(M)
    r = F.rank(M)
    assert r == _naive_rank(F, M.tolist())
    assert r == F.rank(M.T)
    R, piv = F.rref(M)
    assert len(piv) == r
    assert all(R[i, c] == 1 for i, c in enumerate(piv))


def test_dot():
    F = fq_make(3)
    V = np.array([[1, 1, 1], [2, 0, 1]])
    assert F.dot(np.array([1, 2, 0]), V).tolist() == [0, 2]


def test_pickle_roundtrip():
    import pickle
    F = fq_make(2, 3)
    assert pickle.loads(pickle.dumps(F)) is F


def test_all_pairs_gf2_2_match_polynomial_product():
    # multiply in GF(2)[x]/(x^2+x+1) by hand
    F = fq_make(2, 2)
    for a, b in itertools.product(range(4), repeat=2):
        a0, a1, b0, b1 = a & 1, a >> 1, b & 1, b >> 1
        c0 = (a0 * b0 + a1 * b1) % 2
        c1 = (a0 * b1 + a1 * b0 + a1 * b1) % 2
        assert F.mul(a, b) == c0 + 2 * c1
