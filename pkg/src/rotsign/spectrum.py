"""Exact characteristic polynomials and the exact spectrum-rotation test.

``sp(B) = a * sp(A)`` with ``a = exp(i*pi*k/p)`` is decided on coefficients:
the j-th coefficient of det(xI - M) is (-1)^j e_j(eigenvalues), and
e_j(a * lam) = a^j e_j(lam). Both polynomials are real, so wherever
c_j(A) != 0 the power a^j must be +1 or -1 and c_j(B) = a^j c_j(A); wherever
c_j(A) == 0 we need c_j(B) == 0.

Floating-point spectra are only a cross-check here.
"""

from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass

import mpmath
import numpy as np
from scipy.optimize import linear_sum_assignment

from rotsign.errors import OrderMismatch, SolverError
from rotsign.matrix_core import as_rows

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class CharPoly:
    """Coefficients ``(c_0 = 1, c_1, ..., c_n)`` of det(xI - M) = sum c_j x^(n-j)."""

    coeffs: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        terms = []
        n = self.n
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = n - j
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            mag = abs(c)
            body = (str(mag) if mag != 1 or not mono else "") + mono
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {b}" for s, b in terms[1:])


@dataclass(frozen=True)
class RotationFactor:
    """The unit ``exp(i*pi*k/p)``, kept exact as the pair ``(k, p)``."""

    k: int
    p: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"p must be positive, got {self.p}")
        if not 0 <= self.k <= 2 * self.p - 1:
            raise ValueError(f"k must lie in 0..{2 * self.p - 1}, got {self.k}")

    @classmethod
    def of(cls, k: int, p: int) -> RotationFactor:
        """Reduce any integer ``k`` modulo ``2p``."""
        return cls(k % (2 * p), p)

    @property
    def value(self) -> complex:
        return cmath.exp(1j * math.pi * self.k / self.p)

    def power_sign(self, j: int) -> int:
        """``alpha**j`` as +1 / -1, or 0 when it is not real."""
        r = (self.k * j) % (2 * self.p)
        if r == 0:
            return 1
        if r == self.p:
            return -1
        return 0

    def __str__(self) -> str:
        return f"e^(i*pi*{self.k}/{self.p})"


@dataclass(frozen=True)
class NumericSpectrum:
    eigenvalues: tuple[complex, ...]

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def rotated(self, alpha) -> NumericSpectrum:
        a = alpha.value if isinstance(alpha, RotationFactor) else complex(alpha)
        return NumericSpectrum(tuple(a * z for z in self.eigenvalues))


def char_poly(m) -> CharPoly:
    """Faddeev-LeVerrier in exact integer arithmetic.

    M_k = A M_{k-1} + c_{k-1} I,  c_k = -tr(A M_k) / k; the division is exact.
    """
    a = as_rows(m)
    n = len(a)
    coeffs = [1]
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[-1]
        for i in range(n):
            mk[i][i] += c_prev
        cols = list(zip(*mk))
        amk = [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]
        tr = sum(amk[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact over the integers"
        coeffs.append(q)
        mk = amk
    return CharPoly(tuple(coeffs))


def rotation_check(pa: CharPoly, pb: CharPoly, alpha: RotationFactor) -> bool:
    """Exact test of ``sp(B) == alpha * sp(A)`` as multisets."""
    if pa.n != pb.n:
        raise OrderMismatch(f"degree mismatch: {pa.n} vs {pb.n}")
    for j, (ca, cb) in enumerate(zip(pa.coeffs, pb.coeffs)):
        if ca == 0:
            if cb != 0:
                return False
            continue
        sign = alpha.power_sign(j)
        if sign == 0 or cb != sign * ca:
            return False
    return True


# --- batched variants used by the brute-force oracle ----------------------


def _int64_safe(n: int, max_abs: int) -> bool:
    # entries of every Faddeev iterate are bounded by 2^n r^n with r = n * max|a_ij|
    r = max(1, n * max_abs)
    return n * n * (2**n) * r ** (n + 1) < 2**62


def char_poly_batch(mats: np.ndarray) -> np.ndarray:
    """Char-poly coefficients of a stack ``(N, n, n)`` of integer matrices.

    Uses int64 when the entry bound makes that exact, Python ints otherwise.
    """
    mats = np.asarray(mats)
    count, n, _ = mats.shape
    max_abs = int(np.abs(mats).max()) if mats.size else 0
    dtype = np.int64 if _int64_safe(n, max_abs) else object
    a = mats.astype(dtype)
    coeffs = np.zeros((count, n + 1), dtype=dtype)
    coeffs[:, 0] = 1
    mk = np.zeros((count, n, n), dtype=dtype)
    idx = np.arange(n)
    for k in range(1, n + 1):
        mk[:, idx, idx] += coeffs[:, k - 1][:, None]
        mk = a @ mk
        tr = mk[:, idx, idx].sum(axis=1)
        coeffs[:, k] = -tr // k
    return coeffs


def rotation_mask(pa: CharPoly, pbs: np.ndarray, alpha: RotationFactor) -> np.ndarray:
    """Vectorised ``rotation_check`` of one ``pa`` against rows of ``pbs``."""
    pbs = np.asarray(pbs)
    if pbs.shape[1] != pa.n + 1:
        raise OrderMismatch(f"degree mismatch: {pa.n} vs {pbs.shape[1] - 1}")
    target = []
    for j, ca in enumerate(pa.coeffs):
        sign = alpha.power_sign(j) if ca else 1
        if ca and sign == 0:
            return np.zeros(len(pbs), dtype=bool)
        target.append(sign * ca)
    return np.all(pbs == np.array(target, dtype=pbs.dtype), axis=1)


# --- numeric oracle --------------------------------------------------------

_EIG_LOCK = threading.Lock()


def numeric_spectrum(m, *, dps: int | None = None) -> NumericSpectrum:
    """Eigenvalues of ``m`` by dense nonsymmetric QR (no ordering).

    By default LAPACK in double precision. A defective eigenvalue with a
    Jordan block of size s is then only good to about eps**(1/s), so ``dps``
    switches to mpmath's QR at that many decimal digits before rounding.
    """
    rows = as_rows(m)
    try:
        # mpmath precision is global state, so both routes are serialised
        with _EIG_LOCK:
            if len(rows) == 1:
                vals = np.array([complex(rows[0][0])])
            elif dps is None:
                vals = np.linalg.eigvals(np.array(rows, dtype=float).reshape(len(rows), len(rows)))
            else:
                with mpmath.workdps(dps):
                    ev = mpmath.eig(mpmath.matrix([list(r) for r in rows]), left=False, right=False)
                vals = np.array([complex(z) for z in ev], dtype=complex)
    except (np.linalg.LinAlgError, ZeroDivisionError, ValueError) as exc:
        raise SolverError(f"eigensolver failed: {exc}") from exc
    if not np.all(np.isfinite(vals)):
        raise SolverError("eigensolver returned non-finite values")
    return NumericSpectrum(tuple(complex(z) for z in vals))


def multiset_match(s1: NumericSpectrum, s2: NumericSpectrum, tol: float = DEFAULT_TOL) -> bool:
    """Is there a bijection pairing values of ``s1`` and ``s2`` within ``tol``?"""
    if len(s1) != len(s2):
        raise OrderMismatch(f"size mismatch: {len(s1)} vs {len(s2)}")
    a = np.array(s1.eigenvalues, dtype=complex)
    b = np.array(s2.eigenvalues, dtype=complex)
    if a.size == 0:
        return True
    dist = np.abs(a[:, None] - b[None, :])
    used = np.zeros(len(b), dtype=bool)
    greedy_ok = True
    for i in range(len(a)):
        row = np.where(used, np.inf, dist[i])
        j = int(np.argmin(row))
        if row[j] > tol:
            greedy_ok = False
            break
        used[j] = True
    if greedy_ok:
        return True
    # greedy can pick a wrong partner inside a cluster; decide exactly instead
    cost = (dist > tol).astype(float)
    rows, cols = linear_sum_assignment(cost)
    return bool(cost[rows, cols].sum() == 0)
