"""Dimension-one complete-intersection monomial ideals and their footprint.

Indexing follows the usual conventions for these ideals: variables are
``t_1, ..., t_s`` (tuple positions ``0 .. s-1``) and a degree list
``ds = (d_2, ..., d_s)`` is stored with ``ds[0] == d_2``.  In the case II
normal form

    (t_1^{d_2}, ..., t_{p-1}^{d_p}, t_p^{c_p} t_{p+1}^{c_{p+1}}, t_{p+2}^{d_{p+2}}, ..., t_s^{d_s})

the integer ``p`` is 1-based, exactly as written, and ``d_{p+1} = c_p + c_{p+1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import NamedTuple, Sequence

from . import monomial as mono
from .errors import (DimensionTooHigh, NotCompleteIntersection, NotDimOne, NotInIdealViolated,
                     PreconditionViolated)
from .monomial import ExpVec, MonomialIdeal

CASE_I = "I"
CASE_II = "II"


@dataclass(frozen=True)
class CIShape:
    """Normal form of a dimension-one monomial complete intersection.

    ``perm[j]`` is the input variable (0-based) that plays the role of
    ``t_{j+1}`` in the normal form.  ``degrees`` is ``(d_2, ..., d_s)`` in
    normal-form order; for case II it includes ``d_{p+1} = c_p + c_{p+1}``.
    """

    variant: str
    s: int
    perm: tuple[int, ...]
    degrees: tuple[int, ...]
    p: int | None = None
    c: tuple[int, int] | None = None

    @classmethod
    def case_i(cls, ds: Sequence[int]) -> CIShape:
        ds = tuple(int(x) for x in ds)
        if not ds or any(x < 1 for x in ds):
            raise PreconditionViolated(f"case I degrees must be >= 1: {ds}")
        s = len(ds) + 1
        return cls(CASE_I, s, tuple(range(s)), ds)

    @classmethod
    def case_ii(cls, p: int, c: tuple[int, int], pure: Sequence[int]) -> CIShape:
        """Case II shape from ``p``, ``(c_p, c_{p+1})`` and the ``s-2`` pure-power degrees.

        ``pure`` lists ``d_2, ..., d_p, d_{p+2}, ..., d_s``; the degrees need
        not be sorted, which is all the degree formula requires.
        """
        pure = tuple(int(x) for x in pure)
        s = len(pure) + 2
        cp, cq = int(c[0]), int(c[1])
        if not 1 <= p <= s - 1:
            raise PreconditionViolated(f"p must lie in [1, {s - 1}], got {p}")
        if not 1 <= cp <= cq:
            raise PreconditionViolated(f"need 1 <= c_p <= c_(p+1), got {(cp, cq)}")
        if any(x < 1 for x in pure):
            raise PreconditionViolated(f"pure-power degrees must be >= 1: {pure}")
        degrees = pure[: p - 1] + (cp + cq,) + pure[p - 1:]
        return cls(CASE_II, s, tuple(range(s)), degrees, p, (cp, cq))

    @property
    def sorted_degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees))

    @property
    def is_sorted(self) -> bool:
        return list(self.degrees) == sorted(self.degrees)

    def generators(self) -> tuple[ExpVec, ...]:
        """Generators in the normal-form frame."""
        s = self.s
        gens = []
        if self.variant == CASE_I:
            for j, dj in enumerate(self.degrees, start=1):
                gens.append(tuple(dj if v == j else 0 for v in range(s)))
            return tuple(gens)
        p = self.p
        for v in range(s):
            if v < p - 1:
                gens.append(_pure(s, v, self.degrees[v]))
            elif v == p - 1:
                e = [0] * s
                e[p - 1], e[p] = self.c
                gens.append(tuple(e))
            elif v > p:
                gens.append(_pure(s, v, self.degrees[v - 1]))
        return tuple(gens)

    def normal_ideal(self) -> MonomialIdeal:
        return mono.minimalize(self.s, self.generators())

    def to_normal(self, a: Sequence[int]) -> ExpVec:
        """Re-index an exponent vector from the input frame to the normal frame."""
        return tuple(int(a[self.perm[j]]) for j in range(self.s))

    def from_normal(self, b: Sequence[int]) -> ExpVec:
        out = [0] * self.s
        for j, v in enumerate(self.perm):
            out[v] = int(b[j])
        return tuple(out)


def _pure(s: int, v: int, e: int) -> ExpVec:
    return tuple(e if i == v else 0 for i in range(s))


def _support(g: Sequence[int]) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(g) if x)


def classify_ci_dim1(L: MonomialIdeal) -> CIShape:
    """Recognize a dimension-one monomial complete intersection and normalize it.

    The returned shape has ascending ``degrees``; ties keep the input order of
    the variables.
    """
    try:
        prof = mono.hilbert_oracle(L)
    except DimensionTooHigh as exc:
        raise NotDimOne(f"S/{L} has dimension >= 2") from exc
    if prof.dim != 1:
        raise NotDimOne(f"S/{L} has dimension {prof.dim}")
    s = L.s
    gens = list(L.gens)
    if len(gens) != s - 1:
        raise NotCompleteIntersection(f"{L} has {len(gens)} minimal generators, need {s - 1}")
    supports = [_support(g) for g in gens]
    seen: set[int] = set()
    for sup in supports:
        if seen & set(sup):
            raise NotCompleteIntersection(f"generator supports of {L} overlap")
        seen |= set(sup)
    order = sorted(range(len(gens)), key=lambda i: (sum(gens[i]), supports[i]))

    if len(seen) == s - 1:
        free = next(v for v in range(s) if v not in seen)
        perm = (free,) + tuple(supports[i][0] for i in order)
        return CIShape(CASE_I, s, perm, tuple(sum(gens[i]) for i in order))

    binom = next(i for i, sup in enumerate(supports) if len(sup) == 2)
    u, w = supports[binom]
    if gens[binom][u] > gens[binom][w]:
        u, w = w, u
    pos = order.index(binom)
    p = pos + 1
    perm = [supports[i][0] for i in order[:pos]] + [u, w] + [supports[i][0] for i in order[pos + 1:]]
    degrees = tuple(sum(gens[i]) for i in order)
    c = (gens[binom][u], gens[binom][w])
    return CIShape(CASE_II, s, tuple(perm), degrees, p, c)


class KLDecomp(NamedTuple):
    """``d = sum_{i=2}^{k+1} (d_i - 1) + ell`` with ``1 <= ell <= d_{k+2} - 1``.

    ``beyond_reg`` is set (and ``k``, ``ell`` are None) when ``d`` reaches the
    regularity ``sum (d_i - 1)``.
    """

    k: int | None
    ell: int | None
    beyond_reg: bool = False


BEYOND_REG = KLDecomp(None, None, True)


def _check_ascending(ds: Sequence[int]) -> tuple[int, ...]:
    ds = tuple(int(x) for x in ds)
    if not ds or any(x < 1 for x in ds):
        raise PreconditionViolated(f"degrees must be >= 1: {ds}")
    if any(x > y for x, y in zip(ds, ds[1:])):
        raise PreconditionViolated(f"degrees must be ascending: {ds}")
    return ds


def kl_decompose(ds: Sequence[int], d: int) -> KLDecomp:
    ds = _check_ascending(ds)
    if d < 1:
        raise PreconditionViolated(f"degree must be >= 1, got {d}")
    if d >= sum(x - 1 for x in ds):
        return BEYOND_REG
    k, partial = 0, 0
    # largest k with sum_{i=2}^{k+1} (d_i - 1) < d; blocks with d_i = 1 add nothing
    for j in range(1, len(ds)):
        nxt = partial + ds[j - 1] - 1
        if nxt >= d:
            break
        k, partial = j, nxt
    return KLDecomp(k, d - partial)


def ci_degree_reg(ds: Sequence[int]) -> tuple[int, int]:
    ds = tuple(int(x) for x in ds)
    if any(x < 1 for x in ds):
        raise PreconditionViolated(f"degrees must be >= 1: {ds}")
    return prod(ds), sum(x - 1 for x in ds)


def fp_closed_form(ds: Sequence[int], d: int) -> int:
    """Footprint function of a CI initial ideal with ascending degrees ``ds``."""
    kl = kl_decompose(ds, d)
    if kl.beyond_reg:
        return 1
    ds = tuple(ds)
    return (ds[kl.k] - kl.ell) * prod(ds[kl.k + 1:])


def degree_case_i(ds: Sequence[int], a: Sequence[int]) -> int:
    """``deg S/(L, t^a)`` for ``L = (t_2^{d_2}, ..., t_s^{d_s})`` and a zero-divisor ``t^a``.

    ``a_1`` is arbitrary; it does not affect the degree.
    """
    ds = tuple(int(x) for x in ds)
    a = tuple(int(x) for x in a)
    if len(a) != len(ds) + 1:
        raise PreconditionViolated(f"exponent vector needs {len(ds) + 1} entries, got {len(a)}")
    if any(x < 0 for x in a):
        raise PreconditionViolated(f"negative exponent in {a}")
    tail = a[1:]
    if not any(tail):
        raise PreconditionViolated(f"t^a = {mono.format_monomial(a)} is regular on S/L (a_i = 0 for i >= 2)")
    for i, (ai, di) in enumerate(zip(tail, ds), start=2):
        if ai > di - 1:
            raise PreconditionViolated(f"a_{i} = {ai} > d_{i} - 1 = {di - 1}: t^a lies in L")
    return prod(ds) - prod(di - ai for ai, di in zip(tail, ds))


def _case_ii_parts(shape: CIShape) -> tuple[int, int, int]:
    if shape.variant != CASE_II:
        raise PreconditionViolated("shape is not case II")
    return shape.p, shape.c[0], shape.c[1]


def degree_case_ii(shape: CIShape, a: Sequence[int]) -> int:
    """``deg S/(L, t^a)`` for a case II normal-form ``L`` and ``t^a`` outside ``L``.

    ``a`` is given in the normal-form frame of ``shape``.
    """
    p, cp, cq = _case_ii_parts(shape)
    s, ds = shape.s, shape.degrees
    a = tuple(int(x) for x in a)
    if len(a) != s:
        raise PreconditionViolated(f"exponent vector needs {s} entries, got {len(a)}")
    if any(x < 0 for x in a):
        raise PreconditionViolated(f"negative exponent in {a}")
    if not any(a):
        raise PreconditionViolated("t^a = 1 is not a zero-divisor")
    if a in shape.normal_ideal():
        raise NotInIdealViolated(f"t^a = {mono.format_monomial(a)} lies in L")
    # 1-based: i < p pairs with d_{i+1}, i > p+1 pairs with d_i
    outer = prod(ds[i - 1] - a[i - 1] for i in range(1, p)) * prod(ds[i - 2] - a[i - 1] for i in range(p + 2, s + 1))
    ap, aq = a[p - 1], a[p]
    if ap >= cp:
        middle = cq - aq
    elif aq >= cq:
        middle = cp - ap
    else:
        middle = cp + cq - ap - aq
    return prod(ds) - middle * outer


def case_ii_witness(shape: CIShape, k: int, ell: int) -> ExpVec:
    """Standard zero-divisor ``t^b`` of degree ``d`` attaining the footprint bound.

    ``(k, ell)`` is the decomposition of ``d`` against ``shape.degrees``.
    """
    p, cp, cq = _case_ii_parts(shape)
    s, ds = shape.s, shape.degrees
    if not 0 <= k <= s - 2:
        raise PreconditionViolated(f"k must lie in [0, {s - 2}], got {k}")
    if not 1 <= ell <= ds[k] - 1:
        raise PreconditionViolated(f"ell must lie in [1, d_{k + 2} - 1 = {ds[k] - 1}], got {ell}")
    b = [0] * s

    def d_(i: int) -> int:
        return ds[i - 2]

    if k >= p:
        for i in range(1, p):
            b[i - 1] = d_(i + 1) - 1
        b[p - 1], b[p] = cp, cq - 1
        for i in range(p + 2, k + 2):
            b[i - 1] = d_(i) - 1
        b[k + 1] += ell
    elif k <= p - 2:
        for i in range(1, k + 1):
            b[i - 1] = d_(i + 1) - 1
        b[k] = ell
    else:
        for i in range(1, p):
            b[i - 1] = d_(i + 1) - 1
        if ell >= cp:
            b[p - 1], b[p] = cp, ell - cp
        else:
            b[p - 1] = ell
    return tuple(b)


def case_i_witness(ds: Sequence[int], k: int, ell: int) -> ExpVec:
    """``t_2^{d_2-1} ... t_{k+1}^{d_{k+1}-1} t_{k+2}^ell`` for case I."""
    ds = tuple(ds)
    b = [0] * (len(ds) + 1)
    for i in range(2, k + 2):
        b[i - 1] = ds[i - 2] - 1
    b[k + 1] = ell
    return tuple(b)


def fp_bruteforce(L: MonomialIdeal, d: int) -> int:
    """Footprint function from its definition, for any dimension-one monomial ideal."""
    if d < 1:
        raise PreconditionViolated(f"degree must be >= 1, got {d}")
    return _fp_search(L, d, _dim_one_degree(L))[0]


def _dim_one_degree(L: MonomialIdeal) -> int:
    try:
        prof = mono.hilbert_oracle(L)
    except DimensionTooHigh as exc:
        raise NotDimOne(f"S/{L} has dimension >= 2") from exc
    if prof.dim != 1:
        raise NotDimOne(f"S/{L} has dimension {prof.dim}")
    return prof.degree


def _fp_search(L: MonomialIdeal, d: int, degree: int) -> tuple[int, ExpVec | None]:
    best, arg = None, None
    for a in mono.zero_divisor_monomials(L, d):
        v = mono.degree_with_monomial(L, a)
        if best is None or v > best:
            best, arg = v, a
    if best is None:
        return degree, None
    return degree - best, arg


def fp_argmax(L: MonomialIdeal, d: int) -> tuple[int, ExpVec | None]:
    """``fp_L(d)`` and the first zero-divisor (lex order) attaining it, or None if there is none."""
    if d < 1:
        raise PreconditionViolated(f"degree must be >= 1, got {d}")
    return _fp_search(L, d, _dim_one_degree(L))


class Aug28(NamedTuple):
    lhs: int
    rhs: int
    holds: bool


def aug28_inequality(e: Sequence[int], b: Sequence[int], b0: int, k: int) -> Aug28:
    """Both sides of the product/sum inequality used to bound the footprint.

    ``lhs = prod (e_i - b_i)`` and
    ``rhs = (sum_{i<=k+1} (e_i - b_i) - (k - 1) - b0 - sum_{i>=k+2} b_i) * e_{k+2} ... e_m``.
    """
    e = tuple(int(x) for x in e)
    b = tuple(int(x) for x in b)
    m = len(e)
    if m == 0 or len(b) != m:
        raise PreconditionViolated("e and b must be nonempty and of equal length")
    if any(x < 1 for x in e) or any(x > y for x, y in zip(e, e[1:])):
        raise PreconditionViolated(f"e must be ascending and >= 1: {e}")
    if any(not 0 <= bi <= ei - 1 for bi, ei in zip(b, e)):
        raise PreconditionViolated(f"need 0 <= b_i <= e_i - 1: e={e}, b={b}")
    if b0 < 1:
        raise PreconditionViolated(f"b0 must be >= 1, got {b0}")
    if not 0 <= k <= m - 1:
        raise PreconditionViolated(f"k must lie in [0, {m - 1}], got {k}")
    lhs = prod(ei - bi for ei, bi in zip(e, b))
    head = sum(e[i] - b[i] for i in range(k + 1))
    rhs = (head - (k - 1) - b0 - sum(b[k + 1:])) * prod(e[k + 1:])
    return Aug28(lhs, rhs, lhs >= rhs)
