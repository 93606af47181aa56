"""Batch kernels over exponent arrays.

Rows of an exponent array are the tuples (e_2, ..., e_n) of exponents of
lambda_2..lambda_n at modulus P = p^(N+n). Each kernel has a numba version
and a vectorized numpy version; set MAXCLASS_DISABLE_NUMBA=1 to force numpy.
The object-level functions in standard_form are the reference these are
tested against.
"""
from __future__ import annotations

import os

import numpy as np

from .errors import ConsistencyError, UndersizedModulus

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

__all__ = [
    'USE_NUMBA', 'backend', 'check_int64_range',
    'enumerate_exponents', 'period_exponents', 'orbit_minimal',
]

USE_NUMBA = numba is not None and os.environ.get('MAXCLASS_DISABLE_NUMBA', '') not in ('1', 'true', 'yes')

_INT64_LIMIT = 2 ** 62


def backend() -> str:
    return 'numba' if USE_NUMBA else 'numpy'


def check_int64_range(n: int, modulus: int) -> None:
    # sums of (n-1) products of two residues must stay below 2^62
    if n * modulus * modulus >= _INT64_LIMIT:
        raise OverflowError(f'modulus {modulus} too large for int64 kernels at n={n}')


# numpy path

def _enumerate_numpy(n, p, N, T, lead_lo, lead_hi):
    q = p ** N
    P = p ** (N + n)
    step = P // q
    m = n - 1
    inner = q ** (m - 1)
    count = (lead_hi - lead_lo) * inner
    E = np.zeros((count, m), dtype=np.int64)
    idx = np.arange(count, dtype=np.int64)
    E[:, m - 1] = (lead_lo + idx // inner) * step
    for i in range(n - 1, 1, -1):
        col = i - 2
        rhs = np.zeros(count, dtype=np.int64)
        for k in range(i + 1, n + 1):
            rhs = (rhs + T[k - i + 1, q - 1] * E[:, k - 2]) % P
        rhs = (-rhs) % P
        if np.any(rhs % q):
            raise UndersizedModulus(f'closure condition at i={i} unsolvable at modulus {P}')
        digit = (idx // q ** (i - 2)) % q
        E[:, col] = (rhs // q) % step + digit * step
    return E


def _periods_numpy(E, n, p, N, T):
    P = p ** (N + n)
    count = E.shape[0]
    mpe1 = np.full(count, -1, dtype=np.int64)
    mpe2 = np.full(count, -1, dtype=np.int64)
    for j in range(N + 1):
        pj = p ** j
        ok1 = np.ones(count, dtype=bool)
        ok2 = np.ones(count, dtype=bool)
        for i in range(1, n):
            r = np.zeros(count, dtype=np.int64)
            for k in range(i + 1, n + 1):
                r = (r + T[k - i, pj] * E[:, k - 2]) % P
            zero = r == 0
            ok1 &= zero
            if i >= 2:
                ok2 &= zero
        mpe1[(mpe1 < 0) & ok1] = j
        mpe2[(mpe2 < 0) & ok2] = j
    if np.any(mpe1 < 0):
        raise ConsistencyError('some rows have no period dividing p^N')
    return mpe1, mpe2


def _shifted_numpy(E, n, P, T, s):
    # row of lambda_{i, s+1}: sum_{k >= i} T_{k-i}(s) e_k
    out = np.zeros_like(E)
    for i in range(2, n + 1):
        acc = np.zeros(E.shape[0], dtype=np.int64)
        for k in range(i, n + 1):
            acc = (acc + T[k - i, s] * E[:, k - 2]) % P
        out[:, i - 2] = acc
    return out


def _orbit_minimal_numpy(E, n, p, N, T):
    P = p ** (N + n)
    count, m = E.shape
    minimal = np.ones(count, dtype=bool)
    for s in range(1, p ** N):
        S = _shifted_numpy(E, n, P, T, s)
        # lexicographic S < E, first column most significant
        less = np.zeros(count, dtype=bool)
        undecided = np.ones(count, dtype=bool)
        for c in range(m):
            less |= undecided & (S[:, c] < E[:, c])
            undecided &= S[:, c] == E[:, c]
        minimal &= ~less
    return minimal


# numba path

if numba is not None:
    @numba.njit(cache=True)
    def _enumerate_numba(n, p, N, T, lead_lo, lead_hi):
        q = p ** N
        P = p ** (N + n)
        step = P // q
        m = n - 1
        inner = q ** (m - 1)
        count = (lead_hi - lead_lo) * inner
        E = np.zeros((count, m), dtype=np.int64)
        bad = False
        for row in range(count):
            E[row, m - 1] = (lead_lo + row // inner) * step
            rest = row % inner
            for i in range(n - 1, 1, -1):
                rhs = 0
                for k in range(i + 1, n + 1):
                    rhs = (rhs + T[k - i + 1, q - 1] * E[row, k - 2]) % P
                rhs = (P - rhs) % P
                if rhs % q != 0:
                    bad = True
                digit = (rest // q ** (i - 2)) % q
                E[row, i - 2] = (rhs // q) % step + digit * step
        return E, bad

    @numba.njit(cache=True)
    def _periods_numba(E, n, p, N, T):
        P = p ** (N + n)
        count = E.shape[0]
        mpe1 = np.full(count, -1, dtype=np.int64)
        mpe2 = np.full(count, -1, dtype=np.int64)
        for row in range(count):
            pj = 1
            for j in range(N + 1):
                ok1 = True
                ok2 = True
                for i in range(n - 1, 0, -1):
                    r = 0
                    for k in range(i + 1, n + 1):
                        r = (r + T[k - i, pj] * E[row, k - 2]) % P
                    if r != 0:
                        ok1 = False
                        if i >= 2:
                            ok2 = False
                        break
                if ok2 and mpe2[row] < 0:
                    mpe2[row] = j
                if ok1:
                    mpe1[row] = j
                    break
                pj *= p
        return mpe1, mpe2

    @numba.njit(cache=True)
    def _orbit_minimal_numba(E, n, p, N, T):
        P = p ** (N + n)
        count, m = E.shape
        minimal = np.ones(count, dtype=np.bool_)
        shifted = np.zeros(m, dtype=np.int64)
        for row in range(count):
            for s in range(1, p ** N):
                for i in range(2, n + 1):
                    acc = 0
                    for k in range(i, n + 1):
                        acc = (acc + T[k - i, s] * E[row, k - 2]) % P
                    shifted[i - 2] = acc
                cmp = 0
                for c in range(m):
                    if shifted[c] != E[row, c]:
                        cmp = -1 if shifted[c] < E[row, c] else 1
                        break
                if cmp < 0:
                    minimal[row] = False
                    break
        return minimal


def enumerate_exponents(n: int, p: int, N: int, T: np.ndarray,
                        lead_lo: int = 0, lead_hi: int | None = None) -> np.ndarray:
    """All well-defined tuples whose lambda_n exponent is c * p^n for lead_lo <= c < lead_hi.

    T must be t_table(n, p^N, p^(N+n)). Rows come out in lexicographic order
    of (e_n, e_{n-1}, ..., e_2).
    """
    q = p ** N
    if lead_hi is None:
        lead_hi = q
    check_int64_range(n, p ** (N + n))
    if USE_NUMBA:
        E, bad = _enumerate_numba(n, p, N, T, lead_lo, lead_hi)
        if bad:
            raise UndersizedModulus(f'closure condition unsolvable at modulus {p}^{N + n}')
        return E
    return _enumerate_numpy(n, p, N, T, lead_lo, lead_hi)


def period_exponents(E: np.ndarray, n: int, p: int, N: int, T: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    ''' per row: minimal period exponents over indices >= 1 and >= 2 '''
    check_int64_range(n, p ** (N + n))
    E = np.ascontiguousarray(E, dtype=np.int64)
    if USE_NUMBA:
        mpe1, mpe2 = _periods_numba(E, n, p, N, T)
        if np.any(mpe1 < 0):
            raise ConsistencyError('some rows have no period dividing p^N')
        return mpe1, mpe2
    return _periods_numpy(E, n, p, N, T)


def orbit_minimal(E: np.ndarray, n: int, p: int, N: int, T: np.ndarray) -> np.ndarray:
    """Per row: is it the lexicographic minimum (lambda_2 first) of its shout orbit."""
    check_int64_range(n, p ** (N + n))
    E = np.ascontiguousarray(E, dtype=np.int64)
    if USE_NUMBA:
        return _orbit_minimal_numba(E, n, p, N, T)
    return _orbit_minimal_numpy(E, n, p, N, T)
