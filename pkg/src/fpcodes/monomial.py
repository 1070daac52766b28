"""Monomial ideals in ``K[t_1, ..., t_s]`` and a counting Hilbert-function oracle.

Monomials are exponent tuples; ``(1, 0, 2)`` is ``t_1 t_3^2``.  Variable
``t_i`` sits at position ``i - 1``.  Every Hilbert-function value computed
here is obtained by counting standard monomials degree by degree, so the
functions below serve as the independent oracle for the closed-form degree
formulas in :mod:`fpcodes.ci`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DimensionTooHigh, InIdeal, InputError, UnitIdeal

ExpVec = tuple[int, ...]


class DimensionDropWarning(UserWarning):
    """(L, t^a) was formed with a regular monomial, so the quotient has dimension 0."""


def _expvec(a: Iterable[int], s: int | None = None) -> ExpVec:
    t = tuple(int(x) for x in a)
    if any(x < 0 for x in t):
        raise InputError(f"exponents must be nonnegative: {t}")
    if s is not None and len(t) != s:
        raise InputError(f"expected {s} exponents, got {len(t)}: {t}")
    return t


def divides(g: Sequence[int], a: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(g, a))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Build through :func:`minimalize`.  The unit ideal only arises as the
    result of :func:`ideal_colon` and is reported by :attr:`is_unit`.
    """

    s: int
    gens: tuple[ExpVec, ...]

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def __contains__(self, a: Sequence[int]) -> bool:
        return any(divides(g, a) for g in self.gens)

    def __str__(self) -> str:
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def format_monomial(a: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(a, start=1):
        if e == 1:
            parts.append(f"t{i}")
        elif e > 1:
            parts.append(f"t{i}^{e}")
    return "*".join(parts) or "1"


def _minimal(gens: Iterable[ExpVec]) -> tuple[ExpVec, ...]:
    uniq = sorted(set(gens), key=lambda g: (sum(g), g))
    kept: list[ExpVec] = []
    for g in uniq:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


def minimalize(s: int, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Return the ideal generated by ``gens`` with its unique minimal generating set."""
    if s < 1:
        raise InputError("need at least one variable")
    vecs = [_expvec(g, s) for g in gens]
    if not vecs:
        raise InputError("a monomial ideal needs at least one generator")
    if any(not any(g) for g in vecs):
        raise UnitIdeal("the constant monomial generates the unit ideal")
    return MonomialIdeal(s, _minimal(vecs))


def ideal_contains(L: MonomialIdeal, a: Sequence[int]) -> bool:
    return _expvec(a, L.s) in L


def ideal_colon(L: MonomialIdeal, a: Sequence[int]) -> MonomialIdeal:
    """``(L : t^a)``, generated by ``t^max(g - a, 0)``; may be the unit ideal."""
    a = _expvec(a, L.s)
    return MonomialIdeal(L.s, _minimal(tuple(max(x - y, 0) for x, y in zip(g, a)) for g in L.gens))


def same_ideal(A: MonomialIdeal, B: MonomialIdeal) -> bool:
    return all(g in B for g in A.gens) and all(g in A for g in B.gens)


def is_zero_divisor(L: MonomialIdeal, a: Sequence[int]) -> bool:
    """True iff ``t^a`` is a zero-divisor of ``S/L``; ``t^a`` must be standard."""
    a = _expvec(a, L.s)
    if a in L:
        raise InIdeal(f"{format_monomial(a)} lies in {L}")
    return not same_ideal(ideal_colon(L, a), L)


def monomials_of_degree(s: int, d: int) -> Iterator[ExpVec]:
    """Degree-``d`` exponent vectors in lexicographic order, ``t_1^d`` first."""
    if d < 0:
        return
    if s == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(s - 1, d - first):
            yield (first,) + rest


@lru_cache(maxsize=256)
def _monomial_array(s: int, D: int) -> tuple[np.ndarray, np.ndarray]:
    """All exponent vectors of degree <= D, grouped by degree, and their degrees."""
    rows = [m for d in range(D + 1) for m in monomials_of_degree(s, d)]
    E = np.array(rows, dtype=np.int64).reshape(-1, s)
    E.setflags(write=False)
    deg = E.sum(axis=1)
    deg.setflags(write=False)
    return E, deg


def _in_ideal_mask(E: np.ndarray, gens: Sequence[ExpVec]) -> np.ndarray:
    mask = np.zeros(E.shape[0], dtype=bool)
    for g in gens:
        mask |= np.all(E >= np.asarray(g), axis=1)
    return mask


class _StandardTable:
    """Standard monomials of L of degree <= D, grown on demand."""

    def __init__(self, L: MonomialIdeal):
        self.L = L
        self.D = -1
        self.E = np.zeros((0, L.s), dtype=np.int64)
        self.deg = np.zeros(0, dtype=np.int64)

    def upto(self, D: int) -> tuple[np.ndarray, np.ndarray]:
        if D > self.D:
            D = max(D, 2 * self.D)
            E, deg = _monomial_array(self.L.s, D)
            keep = ~_in_ideal_mask(E, self.L.gens)
            self.E, self.deg, self.D = E[keep], deg[keep], D
        cut = np.searchsorted(self.deg, D, side="right")
        return self.E[:cut], self.deg[:cut]


@lru_cache(maxsize=4096)
def _table(L: MonomialIdeal) -> _StandardTable:
    return _StandardTable(L)


def standard_monomials(L: MonomialIdeal, d: int) -> list[ExpVec]:
    """Degree-``d`` monomials outside ``L``, in lexicographic order."""
    if d < 0:
        raise InputError("degree must be nonnegative")
    if L.is_unit:
        return []
    E, deg = _table(L).upto(d)
    return [tuple(int(x) for x in row) for row in E[deg == d]]


def zero_divisor_monomials(L: MonomialIdeal, d: int) -> list[ExpVec]:
    """Standard monomials of degree ``d`` that are zero-divisors of ``S/L``."""
    if d < 1:
        raise InputError("zero-divisor monomials are taken in degree d >= 1")
    return [a for a in standard_monomials(L, d) if not same_ideal(ideal_colon(L, a), L)]


@dataclass(frozen=True)
class HilbertProfile:
    values: tuple[int, ...]
    degree: int
    regularity: int
    dim: int

    def __getitem__(self, d: int) -> int:
        if d < len(self.values):
            return self.values[d]
        return self.values[-1]


def _window(s: int) -> int:
    return max(3, s)


def _bound(gens: Sequence[ExpVec]) -> int:
    return sum(sum(g) for g in gens)


def _profile(values: Sequence[int], bound: int) -> HilbertProfile:
    values = tuple(int(v) for v in values)
    tail = values[bound:]
    if any(v != tail[0] for v in tail):
        raise DimensionTooHigh(
            f"Hilbert function still changing past degree {bound}: {tail}; dim(S/L) >= 2")
    stable = tail[0]
    r = bound
    while r > 0 and values[r - 1] == stable:
        r -= 1
    if stable == 0:
        return HilbertProfile(values, sum(values), r, 0)
    return HilbertProfile(values, stable, r, 1)


def hilbert_oracle(L: MonomialIdeal) -> HilbertProfile:
    """Hilbert function of ``S/L`` by direct counting, for ``dim(S/L) <= 1``.

    Values are counted up to ``sum(deg g) + max(3, s)``; past the generator
    degree sum the function of a monomial quotient is polynomial, so a
    constant tail certifies dimension at most one.
    """
    if L.is_unit:
        raise UnitIdeal("S/(1) is the zero ring")
    bound = _bound(L.gens)
    D = bound + _window(L.s)
    _, deg = _table(L).upto(D)
    return _profile(np.bincount(deg, minlength=D + 1)[: D + 1], bound)


def add_generator(L: MonomialIdeal, a: Sequence[int]) -> MonomialIdeal:
    return minimalize(L.s, L.gens + (_expvec(a, L.s),))


def degree_with_monomial(L: MonomialIdeal, a: Sequence[int]) -> int:
    """``deg(S/(L, t^a))`` counted from standard monomials.

    If ``t^a`` is regular on ``S/L`` the quotient drops to dimension 0; its
    length is returned and a :class:`DimensionDropWarning` is emitted.
    """
    a = _expvec(a, L.s)
    if a in L:
        raise InIdeal(f"{format_monomial(a)} lies in {L}")
    J = add_generator(L, a)
    bound = _bound(J.gens)
    D = bound + _window(L.s)
    # standard monomials of (L, t^a) are those of L not divisible by t^a
    E, deg = _table(L).upto(D)
    keep = ~np.all(E >= np.asarray(a), axis=1)
    prof = _profile(np.bincount(deg[keep], minlength=D + 1)[: D + 1], bound)
    if prof.dim == 0:
        warnings.warn(f"{format_monomial(a)} is regular on S/{L}; returning the length of a "
                      "dimension-0 quotient", DimensionDropWarning, stacklevel=2)
    return prof.degree


def count_monomials(s: int, d: int) -> int:
    return comb(d + s - 1, s - 1)
