"""Finite fields GF(p^k) with table arithmetic.

Elements are integer indices in ``range(q)``.  For ``k > 1`` the index of an
element is the integer whose base-``p`` digits are its coefficients in the
polynomial basis ``1, x, ..., x^(k-1)`` modulo the field's modulus, so index
0 is the additive identity and index 1 the multiplicative identity in every
field.  All operations go through precomputed ``q x q`` tables, which also
makes vectorized numpy arithmetic a matter of fancy indexing.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import DivisionByZero, InputError, NotPrime, ReducibleModulus, UnsupportedOrder

MAX_BUILTIN_ORDER = 64

# Irreducible (in fact primitive) moduli, coefficients low degree first.
BUILTIN_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
    (7, 2): (3, 6, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _poly_mod(num: list[int], den: Sequence[int], p: int) -> list[int]:
    """Remainder of ``num`` by monic ``den`` over GF(p), low degree first."""
    num = list(num)
    dd = len(den) - 1
    for top in range(len(num) - 1, dd - 1, -1):
        c = num[top] % p
        if c:
            for j in range(dd + 1):
                num[top - dd + j] = (num[top - dd + j] - c * den[j]) % p
    return [c % p for c in num[:dd]]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive search for a monic factor of degree <= deg/2."""
    k = len(modulus) - 1
    for deg in range(1, k // 2 + 1):
        for low in range(p**deg):
            g = [(low // p**i) % p for i in range(deg)] + [1]
            if not any(_poly_mod(list(modulus), g, p)):
                return False
    return True


class Fq:
    """The finite field with ``q = p**k`` elements.

    Build instances with :func:`fq_make`; they are immutable and may be shared.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        q = self.q

        if k == 1:
            idx = np.arange(q)
            add = (idx[:, None] + idx[None, :]) % p
            mul = (idx[:, None] * idx[None, :]) % p
        else:
            digits = np.array([[(x // p**i) % p for i in range(k)] for x in range(q)])
            weights = p ** np.arange(k)
            add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
            prod = [[0] * q for _ in range(q)]
            for a in range(q):
                for b in range(a, q):
                    raw = [0] * (2 * k - 1)
                    for i in range(k):
                        if digits[a, i]:
                            for j in range(k):
                                raw[i + j] += int(digits[a, i] * digits[b, j])
                    rem = _poly_mod(raw, modulus, p)
                    prod[a][b] = prod[b][a] = sum(c * p**i for i, c in enumerate(rem))
            mul = np.array(prod)

        self.add_table = add.astype(np.int64)
        self.mul_table = mul.astype(np.int64)
        self.neg_table = np.argmin(self.add_table, axis=1)  # a + (-a) = 0 is the unique zero in row a
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.nonzero(self.mul_table[a] == 1)[0][0])
        self.inv_table = inv

        self.generator = self._find_generator()
        self.exp_table = np.zeros(q - 1, dtype=np.int64)
        self.log_table = np.full(q, -1, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            self.exp_table[i] = x
            self.log_table[x] = i
            x = int(self.mul_table[x, self.generator])
        for t in (self.add_table, self.mul_table, self.neg_table, self.inv_table,
                  self.exp_table, self.log_table):
            t.setflags(write=False)

    def _find_generator(self) -> int:
        for g in range(1, self.q):
            x, order = g, 1
            while x != 1:
                x = int(self.mul_table[x, g])
                order += 1
            if order == self.q - 1:
                return g
        raise ReducibleModulus(f"no primitive element in GF({self.q}); modulus is not irreducible")

    def __repr__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"

    def __reduce__(self):
        return (fq_make, (self.p, self.k, self.modulus or None))

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise InputError(f"{a} is not an element index of {self!r}")
        return a

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[self._check(a), self._check(b)])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[self._check(a), self.neg_table[self._check(b)]])

    def neg(self, a: int) -> int:
        return int(self.neg_table[self._check(a)])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[self._check(a), self._check(b)])

    def inv(self, a: int) -> int:
        if self._check(a) == 0:
            raise DivisionByZero(f"0 has no inverse in {self!r}")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        self._check(a)
        if a == 0:
            if n < 0:
                raise DivisionByZero(f"0 has no inverse in {self!r}")
            return 1 if n == 0 else 0
        return int(self.exp_table[(int(self.log_table[a]) * n) % (self.q - 1)])

    def from_int(self, n: int) -> int:
        """Element index of the integer ``n`` (its image under Z -> GF(p))."""
        return n % self.p

    # -- linear algebra -----------------------------------------------------

    def rref(self, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form of ``M``; returns the nonzero rows and pivot columns."""
        R = np.array(M, dtype=np.int64, copy=True)
        if R.ndim != 2:
            raise InputError("rref expects a 2-d matrix")
        nrows, ncols = R.shape
        pivots: list[int] = []
        row = 0
        for col in range(ncols):
            if row == nrows:
                break
            nz = np.nonzero(R[row:, col])[0]
            if nz.size == 0:
                continue
            piv = row + int(nz[0])
            if piv != row:
                R[[row, piv]] = R[[piv, row]]
            R[row] = self.mul_table[self.inv_table[R[row, col]], R[row]]
            factors = R[:, col].copy()
            factors[row] = 0
            R = self.add_table[R, self.neg_table[self.mul_table[factors[:, None], R[row][None, :]]]]
            pivots.append(col)
            row += 1
        return R[:row], pivots

    def rank(self, M: np.ndarray) -> int:
        M = np.asarray(M)
        if M.size == 0:
            return 0
        return len(self.rref(M)[1])

    def dot(self, u: np.ndarray, V: np.ndarray) -> np.ndarray:
        """Field inner products of the vector ``u`` with each row of ``V``."""
        acc = np.zeros(V.shape[0], dtype=np.int64)
        for i in range(V.shape[1]):
            acc = self.add_table[acc, self.mul_table[u[i], V[:, i]]]
        return acc


@lru_cache(maxsize=None)
def _build(p: int, k: int, modulus: tuple[int, ...]) -> Fq:
    if k > 1 and not is_irreducible(modulus, p):
        raise ReducibleModulus(f"{modulus} is reducible over GF({p})")
    return Fq(p, k, modulus)


def fq_make(p: int, k: int = 1, modulus: Sequence[int] | None = None) -> Fq:
    """Return GF(p^k).

    ``modulus`` lists the coefficients of a monic irreducible polynomial of
    degree ``k``, constant term first.  It may be omitted for ``k = 1`` and
    for every prime power up to 64.  Equal arguments return the same object.
    """
    p, k = int(p), int(k)
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise InputError(f"extension degree must be >= 1, got {k}")
    if k == 1:
        return _build(p, 1, ())
    if modulus is None:
        if (p, k) not in BUILTIN_MODULI:
            raise UnsupportedOrder(
                f"no built-in modulus for GF({p}^{k}); orders up to {MAX_BUILTIN_ORDER} are shipped, "
                "pass an explicit modulus")
        modulus = BUILTIN_MODULI[(p, k)]
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != k + 1 or modulus[-1] != 1:
        raise InputError(f"modulus must be a monic polynomial of degree {k} (low degree first)")
    return _build(p, k, modulus)


def fq_arith(F: Fq, op: str, *args: int) -> int:
    """Dispatch ``add``, ``sub``, ``mul``, ``inv`` and ``pow`` by name."""
    ops = {"add": F.add, "sub": F.sub, "mul": F.mul, "inv": F.inv, "pow": F.pow}
    if op not in ops:
        raise InputError(f"unknown field operation {op!r}")
    return ops[op](*args)


_SPEC_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_field(spec: str) -> Fq:
    """Parse ``"p"``, ``"p^k"`` or a bare prime power such as ``"4"``."""
    m = _SPEC_RE.match(str(spec))
    if not m:
        raise InputError(f"bad field spec {spec!r}; expected 'p' or 'p^k'")
    base, exp = int(m.group(1)), int(m.group(2) or 1)
    if exp == 1 and not is_prime(base):
        for p in range(2, base + 1):
            if base % p == 0:
                k, n = 0, base
                while n % p == 0:
                    n //= p
                    k += 1
                if n == 1:
                    return fq_make(p, k)
                break
    return fq_make(base, exp)
