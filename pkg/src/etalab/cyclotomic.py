"""Exact arithmetic in rings of cyclotomic integers.

A value of conductor e lives in Z[zeta_e] and is stored as an integer
coefficient vector over the power basis 1, zeta_e, ..., zeta_e^(phi(e)-1),
reduced modulo the e-th cyclotomic polynomial.  Reduction is canonical, so two
values with the same conductor are equal exactly when their coefficient
vectors are equal.  Everything runs on Python integers; there is no floating
point and no precision loss anywhere.

Conductors mix by rebasing to the least common multiple.  Rebasing up is a
substitution zeta_f = zeta_e^(e/f) writ backwards; rebasing down solves a small
exact linear system and fails loudly if the value does not lie in the smaller
ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

import numpy as np

from .errors import CyclotomicError

__all__ = [
    "CycValue",
    "cyc_conjugate",
    "cyclotomic_polynomial",
    "euler_phi",
]


def euler_phi(n: int) -> int:
    if n < 1:
        raise CyclotomicError(f"conductor must be positive, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod_monic(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den must be monic; exact arithmetic over Z.
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dd]
        if c:
            out[k] = c
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    return out, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Monic coefficients, ascending degree, of the e-th cyclotomic polynomial."""
    if e < 1:
        raise CyclotomicError(f"conductor must be positive, got {e}")
    num = [-1] + [0] * (e - 1) + [1]
    den = [1]
    for d in range(1, e):
        if e % d == 0:
            den = _poly_mul(den, list(cyclotomic_polynomial(d)))
    quo, rem = _poly_divmod_monic(num, den)
    if any(rem):
        raise CyclotomicError("cyclotomic polynomial division left a remainder")
    return tuple(quo)


@lru_cache(maxsize=None)
def _basis_data(e: int) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """phi(e), plus rows giving zeta^k over the power basis for all needed k.

    Rows cover k < max(e, 2*phi-1): enough for both full-period powers
    (conjugation, rebasing) and products of two reduced values.
    """
    poly = cyclotomic_polynomial(e)
    phi = len(poly) - 1
    nrows = max(e, 2 * phi - 1)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(nrows):
        rows.append(tuple(cur))
        top = cur[phi - 1]
        nxt = [0] * phi
        for i in range(phi - 1):
            nxt[i + 1] = cur[i]
        if top:
            for i in range(phi):
                nxt[i] -= top * poly[i]
        cur = nxt
    return phi, tuple(rows)


def reduced_degree(e: int) -> int:
    return _basis_data(e)[0]


@lru_cache(maxsize=None)
def power_basis_matrix(e: int) -> np.ndarray:
    """(e, phi) int64 matrix whose row k is zeta_e^k over the power basis."""
    phi, rows = _basis_data(e)
    return np.array([rows[k] for k in range(e)], dtype=np.int64)


@lru_cache(maxsize=None)
def reduction_tensor(e: int) -> np.ndarray:
    """(phi, phi, phi) int64 tensor with basis_i * basis_j = sum_m T[i,j,m] basis_m."""
    phi, rows = _basis_data(e)
    t = np.zeros((phi, phi, phi), dtype=np.int64)
    for i in range(phi):
        for j in range(phi):
            t[i, j] = rows[i + j]
    return t


@lru_cache(maxsize=None)
def conjugation_matrix(e: int) -> np.ndarray:
    """(phi, phi) int64 matrix of complex conjugation: row j is the image of basis_j."""
    phi, rows = _basis_data(e)
    m = np.zeros((phi, phi), dtype=np.int64)
    for j in range(phi):
        m[j] = rows[(e - j) % e]
    return m


def mul_coeffs(e: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Product of two reduced coefficient vectors, reduced again."""
    phi, rows = _basis_data(e)
    out = [0] * phi
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    c = ai * bj
                    row = rows[i + j]
                    for m in range(phi):
                        out[m] += c * row[m]
    return tuple(out)


def conj_coeffs(e: int, a: tuple[int, ...]) -> tuple[int, ...]:
    phi, rows = _basis_data(e)
    out = [0] * phi
    for j, c in enumerate(a):
        if c:
            row = rows[(e - j) % e]
            for m in range(phi):
                out[m] += c * row[m]
    return tuple(out)


@lru_cache(maxsize=None)
def _down_solver(e: int, f: int):
    """Exact solver expressing conductor-e vectors over the conductor-f basis.

    Returns (A, P): A the integer matrix whose columns are the zeta_f powers in
    the e-basis, P a rational left inverse of A.  A value v is in Z[zeta_f] iff
    x = P @ v is integral and A @ x == v.
    """
    phi_e, rows_e = _basis_data(e)
    phi_f = reduced_degree(f)
    k = e // f
    cols = []
    for j in range(phi_f):
        cols.append(rows_e[(j * k) % e])
    # A has shape (phi_e, phi_f)
    a = [[cols[j][i] for j in range(phi_f)] for i in range(phi_e)]
    # Gram = A^T A, then P = Gram^-1 A^T over Q.
    gram = [
        [Fraction(sum(a[i][r] * a[i][c] for i in range(phi_e))) for c in range(phi_f)]
        for r in range(phi_f)
    ]
    aug = [row[:] + [Fraction(1 if i == j else 0) for j in range(phi_f)] for i, row in enumerate(gram)]
    n = phi_f
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1, 1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    gram_inv = [row[n:] for row in aug]
    p = [
        [sum(gram_inv[r][m] * a[i][m] for m in range(phi_f)) for i in range(phi_e)]
        for r in range(phi_f)
    ]
    return a, p


@dataclass(frozen=True, eq=False)
class CycValue:
    """A cyclotomic integer: conductor plus reduced coefficient vector."""

    e: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != reduced_degree(self.e):
            raise CyclotomicError(
                f"coefficient vector has length {len(self.coeffs)}, "
                f"expected {reduced_degree(self.e)} for conductor {self.e}"
            )

    @classmethod
    def integer(cls, e: int, n: int) -> "CycValue":
        coeffs = [0] * reduced_degree(e)
        coeffs[0] = int(n)
        return cls(e, tuple(coeffs))

    @classmethod
    def zero(cls, e: int) -> "CycValue":
        return cls.integer(e, 0)

    @classmethod
    def one(cls, e: int) -> "CycValue":
        return cls.integer(e, 1)

    @classmethod
    def root_of_unity(cls, e: int, k: int = 1) -> "CycValue":
        _, rows = _basis_data(e)
        return cls(e, rows[k % e])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def as_int(self) -> int:
        if not self.is_rational_integer():
            raise CyclotomicError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def conjugate(self) -> "CycValue":
        return CycValue(self.e, conj_coeffs(self.e, self.coeffs))

    def rebase(self, f: int) -> "CycValue":
        if f == self.e:
            return self
        big = lcm(self.e, f)
        v = self if big == self.e else self._up(big)
        if big == f:
            return v
        return v._down(f)

    def _up(self, f: int) -> "CycValue":
        k = f // self.e
        phi_f, rows = _basis_data(f)
        out = [0] * phi_f
        for j, c in enumerate(self.coeffs):
            if c:
                row = rows[(j * k) % f]
                for m in range(phi_f):
                    out[m] += c * row[m]
        return CycValue(f, tuple(out))

    def _down(self, f: int) -> "CycValue":
        a, p = _down_solver(self.e, f)
        v = self.coeffs
        xs = []
        for row in p:
            x = sum(row[i] * v[i] for i in range(len(v)))
            if x.denominator != 1:
                raise CyclotomicError(f"{self} does not lie in conductor {f}")
            xs.append(int(x))
        for i in range(len(v)):
            if sum(a[i][j] * xs[j] for j in range(len(xs))) != v[i]:
                raise CyclotomicError(f"{self} does not lie in conductor {f}")
        return CycValue(f, tuple(xs))

    def _coerce(self, other):
        if isinstance(other, int):
            other = CycValue.integer(self.e, other)
        elif not isinstance(other, CycValue):
            return None, None
        if self.e == other.e:
            return self, other
        big = lcm(self.e, other.e)
        return self.rebase(big), other.rebase(big)

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return CycValue(a.e, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycValue(self.e, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return CycValue(a.e, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return CycValue(a.e, mul_coeffs(a.e, a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise CyclotomicError("negative powers are not defined in Z[zeta]")
        out = CycValue.one(self.e)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    __hash__ = None

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                term = str(abs(c))
            else:
                sym = f"z{self.e}" if j == 1 else f"z{self.e}^{j}"
                term = sym if abs(c) == 1 else f"{abs(c)}*{sym}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"CycValue({self.e}, {self.coeffs!r})"


def cyc_conjugate(value: CycValue) -> CycValue:
    """Complex conjugation, i.e. the ring map zeta -> zeta^(e-1)."""
    return value.conjugate()
