"""The iterated-sum numbers T_k(j) and their residues.

T_0(j) = 1, T_k(0) = 0 for k >= 1, and T_k(j) = T_k(j-1) + T_{k-1}(j).
Closed form: T_k(j) = binomial(j + k - 1, k).
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

import numpy as np

__all__ = ['t_number', 't_number_mod', 'gamma', 't_table', 'p_valuation']


def _check_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f'{p} is not prime')


@lru_cache(maxsize=1 << 16)
def t_number(k: int, j: int) -> int:
    if k < 0 or j < 0:
        raise ValueError('k and j must be non-negative')
    if k == 0:
        return 1
    return comb(j + k - 1, k)


def t_number_mod(k: int, j: int, p: int, M: int) -> int:
    ''' T_k(j) mod p^M, reduced from the exact integer (k! need not be invertible) '''
    _check_prime(p)
    if M < 1:
        raise ValueError('modulus exponent must be >= 1')
    return t_number(k, j) % p ** M


def gamma(k: int, j: int, alpha: int, m: int, p: int, M: int) -> int:
    ''' alpha * p^m * T_k(j - 1) mod p^M '''
    _check_prime(p)
    if alpha % p == 0:
        raise ValueError(f'alpha={alpha} must be coprime to p={p}')
    if not 1 <= m <= M:
        raise ValueError('need 1 <= m <= M')
    if j < 1:
        raise ValueError('need j >= 1')
    return alpha * p ** m * t_number(k, j - 1) % p ** M


def p_valuation(x: int, p: int) -> int:
    if x == 0:
        raise ValueError('valuation of 0 is infinite')
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def t_table(kmax: int, jmax: int, modulus: int) -> np.ndarray:
    ''' int64 array with [k, j] = T_k(j) mod modulus for 0 <= k <= kmax, 0 <= j <= jmax '''
    out = np.empty((kmax + 1, jmax + 1), dtype=np.int64)
    for k in range(kmax + 1):
        for j in range(jmax + 1):
            out[k, j] = t_number(k, j) % modulus
    return out
