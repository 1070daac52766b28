"""Projective Reed-Muller-type codes over finite point sets.

A point set ``X`` in ``P^{s-1}`` over ``GF(q)`` stores normalized
representatives (first nonzero coordinate equal to 1).  The degree-``d``
code ``C_X(d)`` is the row space of the evaluation matrix whose rows are
the degree-``d`` monomials and whose column ``j`` holds ``f(P_j) / f_j(P_j)``
with ``f_j = t_k^d`` for the pivot ``k`` of ``P_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, product
from math import comb, prod
from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from . import ci
from . import monomial as mono
from .errors import (EmptyFactor, FieldTooSmall, InputError, PointNotInSet, TooManyCodewords,
                     TrivialSet, ZeroPolynomial, ZeroVector)
from .ff import Fq
from .monomial import ExpVec, MonomialIdeal

DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[int, ...]

    @property
    def pivot(self) -> int:
        return next(i for i, x in enumerate(self.coords) if x)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)


def normalize_point(F: Fq, raw: Sequence[int]) -> ProjPoint:
    """Scale ``raw`` so that its first nonzero coordinate is 1."""
    raw = tuple(F._check(int(x)) for x in raw)
    nz = [x for x in raw if x]
    if not nz:
        raise ZeroVector("the zero vector is not a projective point")
    c = F.inv(nz[0])
    return ProjPoint(tuple(F.mul(c, x) for x in raw))


@dataclass(frozen=True, eq=False)
class PointSet:
    """A nonempty finite subset of ``P^{s-1}(GF(q))`` in a fixed order."""

    F: Fq
    s: int
    points: tuple[ProjPoint, ...]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, P: ProjPoint) -> bool:
        return P in self._index

    @cached_property
    def _index(self) -> dict[ProjPoint, int]:
        return {P: i for i, P in enumerate(self.points)}

    def index(self, P: ProjPoint) -> int:
        if P not in self._index:
            raise PointNotInSet(f"{P.coords} is not in X")
        return self._index[P]

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array([P.coords for P in self.points], dtype=np.int64).reshape(len(self.points), self.s)
        a.setflags(write=False)
        return a

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(P.pivot for P in self.points)


def point_set(F: Fq, raws: Iterable[Sequence[int]], s: int | None = None) -> PointSet:
    """Normalize ``raws`` and drop duplicates, keeping first occurrences."""
    pts: list[ProjPoint] = []
    seen: set[ProjPoint] = set()
    for raw in raws:
        P = normalize_point(F, raw)
        if s is None:
            s = len(P)
        if len(P) != s:
            raise InputError(f"point {raw} has {len(P)} coordinates, expected {s}")
        if P not in seen:
            seen.add(P)
            pts.append(P)
    if not pts:
        raise InputError("a point set needs at least one point")
    return PointSet(F, s, tuple(pts))


def cartesian_pointset(F: Fq, *factors: Iterable[int]) -> PointSet:
    """``[1 x A_2 x ... x A_s]`` for subsets ``A_i`` of the field."""
    sets = []
    for i, A in enumerate(factors, start=2):
        A = list(dict.fromkeys(F._check(int(x)) for x in A))
        if not A:
            raise EmptyFactor(f"A_{i} is empty")
        sets.append(A)
    if not sets:
        raise InputError("need at least one factor A_2")
    return point_set(F, ((1,) + xs for xs in product(*sets)), s=len(sets) + 1)


def torus_pointset(F: Fq, s: int) -> PointSet:
    if F.q < 3:
        raise FieldTooSmall("the projective torus needs q >= 3")
    if s < 2:
        raise InputError("the projective torus needs s >= 2")
    return cartesian_pointset(F, *([list(F.nonzero())] * (s - 1)))


def projective_space_pointset(F: Fq, s: int) -> PointSet:
    if s < 2:
        raise InputError("P^{s-1} needs s >= 2")
    pts = []
    for piv in range(s):
        for tail in product(range(F.q), repeat=s - piv - 1):
            pts.append((0,) * piv + (1,) + tail)
    return point_set(F, pts, s=s)


# -- evaluation --------------------------------------------------------------

@lru_cache(maxsize=256)
def _power_table(F: Fq, d: int) -> np.ndarray:
    pw = np.array([[F.pow(x, e) for e in range(d + 1)] for x in range(F.q)], dtype=np.int64)
    pw.setflags(write=False)
    return pw


def evaluation_rows(F: Fq, reps: np.ndarray, d: int, monomials: Sequence[ExpVec]) -> np.ndarray:
    """Rows ``f(P_j) / t_k(P_j)^d`` for arbitrary nonzero representatives ``reps``."""
    reps = np.asarray(reps, dtype=np.int64)
    n = reps.shape[0]
    pw = _power_table(F, d)
    G = np.empty((len(monomials), n), dtype=np.int64)
    for r, a in enumerate(monomials):
        acc = np.ones(n, dtype=np.int64)
        for i, e in enumerate(a):
            if e:
                acc = F.mul_table[acc, pw[reps[:, i], e]]
        G[r] = acc
    pivot_vals = reps[np.arange(n), np.argmax(reps != 0, axis=1)]
    scale = F.inv_table[pw[pivot_vals, d]]
    return F.mul_table[G, scale[None, :]]


@dataclass(frozen=True, eq=False)
class EvalCode:
    X: PointSet
    d: int
    monomials: tuple[ExpVec, ...]
    G: np.ndarray = field(repr=False)

    @cached_property
    def dim(self) -> int:
        return self.X.F.rank(self.G)

    @property
    def length(self) -> int:
        return len(self.X)


def evaluate_matrix(X: PointSet, d: int) -> EvalCode:
    if d < 1:
        raise InputError(f"evaluation codes are taken in degree d >= 1, got {d}")
    mons = tuple(mono.monomials_of_degree(X.s, d))
    G = evaluation_rows(X.F, X.array, d, mons)
    G.setflags(write=False)
    return EvalCode(X, d, mons, G)


def hilbert_X(X: PointSet, d: int) -> int:
    """``H_X(d)``, the dimension of ``C_X(d)``."""
    if d < 0:
        raise InputError("degree must be nonnegative")
    if d == 0:
        return 1
    return evaluate_matrix(X, d).dim


def reg_X(X: PointSet) -> int:
    """Least ``d >= 0`` with ``H_X(d) = |X|``."""
    d = 0
    while hilbert_X(X, d) < len(X):
        d += 1
    return d


class ZeroCount(NamedTuple):
    zeros: int
    identically_zero: bool


def _coefficients(f, s: int, d: int | None) -> tuple[int, list[ExpVec], list[int]]:
    if isinstance(f, Mapping):
        terms = {tuple(int(x) for x in a): int(c) for a, c in f.items() if c}
        degs = {sum(a) for a in terms}
        if not terms:
            raise ZeroPolynomial("f is the zero polynomial")
        if len(degs) != 1:
            raise InputError("f must be homogeneous")
        deg = degs.pop()
        if d is not None and d != deg:
            raise InputError(f"f has degree {deg}, expected {d}")
        return deg, list(terms), list(terms.values())
    coeffs = [int(c) for c in f]
    if d is None:
        d = 0
        while mono.count_monomials(s, d) < len(coeffs):
            d += 1
    mons = list(mono.monomials_of_degree(s, d))
    if len(mons) != len(coeffs):
        raise InputError(f"need {len(mons)} coefficients for degree {d} in {s} variables")
    if not any(coeffs):
        raise ZeroPolynomial("f is the zero polynomial")
    return d, mons, coeffs


def evaluate_polynomial(X: PointSet, f, d: int | None = None) -> np.ndarray:
    """Values of the homogeneous ``f`` at the normalized points of ``X``."""
    F = X.F
    d, mons, coeffs = _coefficients(f, X.s, d)
    coeffs = [F._check(c) for c in coeffs]
    if not any(coeffs):
        raise ZeroPolynomial("f is the zero polynomial")
    rows = evaluation_rows(F, X.array, d, mons)
    acc = np.zeros(len(X), dtype=np.int64)
    for c, row in zip(coeffs, rows):
        acc = F.add_table[acc, F.mul_table[c, row]]
    return acc


def count_zeros(X: PointSet, f, d: int | None = None) -> ZeroCount:
    """``|V_X(f)|`` for a homogeneous ``f``.

    ``f`` is either a mapping from exponent tuples to coefficients or a
    coefficient sequence aligned with :func:`monomial.monomials_of_degree`.
    """
    vals = evaluate_polynomial(X, f, d)
    z = int(np.count_nonzero(vals == 0))
    return ZeroCount(z, z == len(X))


def _all_combinations(F: Fq, rows: np.ndarray) -> np.ndarray:
    n = rows.shape[1]
    W = np.zeros((1, n), dtype=np.int64)
    for r in rows:
        # block c holds W + c*r
        W = F.add_table[F.mul_table[:, r][:, None, :], W[None, :, :]].reshape(-1, n)
    return W


def _min_weight_codewords(F: Fq, R: np.ndarray) -> int:
    k, n = R.shape
    low = k
    while low > 0 and F.q**low > 1 << 16:
        low -= 1
    W = _all_combinations(F, R[k - low:])
    high_rows = R[: k - low]
    best = n
    for coeffs in product(range(F.q), repeat=k - low):
        h = np.zeros(n, dtype=np.int64)
        for c, r in zip(coeffs, high_rows):
            if c:
                h = F.add_table[h, F.mul_table[c, r]]
        wt = np.count_nonzero(F.add_table[W, h[None, :]], axis=1)
        if not any(coeffs):
            wt = wt[1:]
        if wt.size:
            best = min(best, int(wt.min()))
    return best


def _min_weight_supports(F: Fq, R: np.ndarray) -> int:
    # a nonzero codeword supported inside W exists iff the columns outside W have rank < k
    k, n = R.shape
    cols = np.arange(n)
    for w in range(1, n - k + 2):
        for W in combinations(range(n), w):
            Z = np.delete(cols, W)
            if F.rank(R[:, Z]) < k:
                return w
    raise AssertionError("Singleton bound violated")  # pragma: no cover


def _support_cost(n: int, k: int) -> int:
    return sum(comb(n, w) for w in range(1, n - k + 2))


def min_distance_enum(X: PointSet, d: int, cap: int = DEFAULT_CAP, force: bool = False,
                      method: str = "auto") -> int:
    """Exact minimum distance of ``C_X(d)``.

    ``method="codewords"`` enumerates all ``q^k - 1`` nonzero codewords of a
    row-reduced generator matrix.  ``method="supports"`` finds the smallest
    coordinate set ``W`` carrying a nonzero codeword, i.e. ``|X|`` minus the
    largest zero set.  ``"auto"`` takes whichever needs fewer candidates.
    """
    if len(X) < 2:
        raise TrivialSet("minimum distance needs |X| >= 2")
    code = evaluate_matrix(X, d)
    R, _ = X.F.rref(code.G)
    k, n = R.shape
    n_codewords = X.F.q**k - 1
    n_supports = _support_cost(n, k)
    if method == "auto":
        method = "codewords" if n_codewords <= 1000 * n_supports else "supports"
    if method == "codewords":
        need, run = n_codewords, _min_weight_codewords
    elif method == "supports":
        need, run = n_supports, _min_weight_supports
    else:
        raise InputError(f"unknown method {method!r}")
    if need > cap and not force:
        raise TooManyCodewords(need, cap)
    return run(X.F, R)


# -- cartesian sets and the footprint bound ------------------------------------

def cartesian_min_distance(ds: Sequence[int], d: int) -> int:
    """Minimum distance of the cartesian code with ascending factor sizes ``ds``."""
    return ci.fp_closed_form(ds, d)


def cartesian_initial_ideal(ds: Sequence[int]) -> MonomialIdeal:
    """``(t_2^{d_2}, ..., t_s^{d_s})``, the initial ideal of ``I([1 x A_2 x ... x A_s])``."""
    ds = tuple(int(x) for x in ds)
    if any(x < 1 for x in ds):
        raise InputError(f"factor sizes must be >= 1: {ds}")
    s = len(ds) + 1
    return mono.minimalize(s, [tuple(di if v == i else 0 for v in range(s)) for i, di in enumerate(ds, 1)])


def cartesian_leading_exponent(exps: Iterable[Sequence[int]]) -> ExpVec:
    """Leading exponent among equal-degree monomials for revlex with ``t_2 > ... > t_s > t_1``."""
    exps = [tuple(a) for a in exps]
    if not exps:
        raise ZeroPolynomial("no monomials")
    s = len(exps[0])
    rank_order = [0] + list(range(s - 1, 0, -1))  # smallest variable first
    return max(exps, key=lambda a: tuple(-a[v] for v in rank_order))


def uniform_zero_bound(ds: Sequence[int], d: int, sizeX: int) -> int:
    """Upper bound on ``|V_X(f)|`` when ``in(I(X))`` is a CI with ascending degrees ``ds``."""
    return sizeX - ci.fp_closed_form(ds, d)


def is_monomial_vanishing(X: PointSet) -> bool:
    """True iff every point is a coordinate point ``[e_i]``."""
    return all(sum(1 for x in P.coords if x) == 1 for P in X.points)


# -- hyperplane coverings ----------------------------------------------------

@dataclass(frozen=True)
class NotFoundWithin:
    """No covering with at most ``dmax`` hyperplanes exists."""

    dmax: int

    @property
    def lower_bound(self) -> int:
        return self.dmax + 1


def hyperplane_incidence(X: PointSet) -> tuple[PointSet, np.ndarray]:
    """All hyperplanes as dual points and the boolean matrix ``[H contains P]``."""
    H = projective_space_pointset(X.F, X.s)
    F = X.F
    inc = np.empty((len(H), len(X)), dtype=bool)
    for i, h in enumerate(H.array):
        inc[i] = F.dot(h, X.array) == 0
    return H, inc


def min_hyperplane_cover(X: PointSet, P: ProjPoint, dmax: int) -> int | NotFoundWithin:
    """Fewest hyperplanes missing ``P`` whose union contains ``X - {P}``."""
    if not isinstance(P, ProjPoint):
        P = normalize_point(X.F, P)
    ip = X.index(P)
    _, inc = hyperplane_incidence(X)
    others = [j for j in range(len(X)) if j != ip]
    if not others:
        return 0
    masks = set()
    for row in inc:
        if row[ip]:
            continue
        m = sum(1 << b for b, j in enumerate(others) if row[j])
        if m:
            masks.add(m)
    masks = sorted(masks, key=lambda m: -bin(m).count("1"))
    by_point = [[m for m in masks if m >> b & 1] for b in range(len(others))]
    widest = bin(masks[0]).count("1") if masks else 0
    target = (1 << len(others)) - 1
    memo: dict[tuple[int, int], bool] = {}

    def coverable(left: int, depth: int) -> bool:
        if not left:
            return True
        if depth == 0 or bin(left).count("1") > depth * widest:
            return False
        key = (left, depth)
        if key not in memo:
            b = (left & -left).bit_length() - 1
            memo[key] = any(coverable(left & ~m, depth - 1) for m in by_point[b])
        return memo[key]

    for d in range(1, dmax + 1):
        if coverable(target, d):
            return d
    return NotFoundWithin(dmax)


def vanishing_ideal_is_monomial(X: PointSet) -> bool:
    """Decide whether ``I(X)`` is a monomial ideal by linear algebra alone.

    ``I(X)_d`` is spanned by monomials iff the nonzero rows of the degree-``d``
    evaluation matrix are linearly independent.  ``I(X)`` is generated in
    degrees up to ``reg_X + 1``, so those degrees suffice.
    """
    for d in range(1, reg_X(X) + 2):
        G = evaluate_matrix(X, d).G
        nz = G[np.any(G != 0, axis=1)]
        if X.F.rank(nz) != nz.shape[0]:
            return False
    return True
