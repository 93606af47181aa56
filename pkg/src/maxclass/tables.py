"""Closed-form orbit counts per case for M_4 at p = 2 and M_{p+1} at p.

Values are exact Fractions so a formula that fails to be integral shows up
as such instead of being rounded.
"""
from __future__ import annotations

from fractions import Fraction

__all__ = [
    'm4_case_count', 'm4_case6_count', 'm4_case7_count', 'm4_case6_4_printed',
    'mp1_case1_count', 'mp1_case21_count', 'm4_series_term',
]

_H = Fraction(1, 2)  # (1 - 2^-1), left unsimplified so the formulas read as products


def m4_case6_count(label: str, N: int) -> Fraction:
    ''' subcases of case 6; ``label`` 'C6' gives the case total '''
    if N < 2:
        raise ValueError('case tables start at N = 2')
    if N == 2:
        sub = {'C6.1': 0, 'C6.2': 0, 'C6.3': 0, 'C6.4': Fraction(2)}
    elif N == 3:
        sub = {'C6.1': 0, 'C6.2': _H ** 2 * 2 ** 3, 'C6.3': 0, 'C6.4': _H * 2 ** 3 * (1 + _H)}
    else:
        sub = {
            'C6.1': _H * 2 ** N * ((Fraction(2) ** (N - 4) - 1) - _H * (N - 4)),
            'C6.2': _H * 2 ** N * (Fraction(2) ** (N - 3) - _H),
            'C6.3': _H ** 2 * 2 ** N * (Fraction(2) ** (N - 2) - 2),
            # the variant with an extra factor (1 - 2^-1) is m4_case6_4_printed
            'C6.4': _H * 2 ** N * (1 + _H * (N - 2)),
        }
    if label == 'C6':
        return sum((Fraction(v) for v in sub.values()), Fraction(0))
    return Fraction(sub[label])


def m4_case6_4_printed(N: int) -> Fraction:
    ''' case 6.4 for N >= 4 with an extra factor (1 - 2^-1); half the enumerated count '''
    return _H ** 2 * 2 ** N * (1 + _H * (N - 2))


def m4_case7_count(label: str, N: int) -> Fraction:
    if N < 2:
        raise ValueError('case tables start at N = 2')
    if N == 2:
        # a single orbit; no subcase split at this level
        if label in ('C7', 'C7.2'):
            return Fraction(1)
        return Fraction(0)
    sub = {'C7.1': _H * 2 ** (2 * N - 4), 'C7.2': _H ** 2 * 2 ** (2 * N - 2)}
    if label == 'C7':
        return sub['C7.1'] + sub['C7.2']
    return sub[label]


def m4_case_count(label: str, N: int) -> Fraction:
    ''' count column of the M_4 case table, N >= 2 '''
    if N < 2:
        raise ValueError('case tables start at N = 2')
    if label.startswith('C6'):
        return m4_case6_count(label, N)
    if label.startswith('C7'):
        return m4_case7_count(label, N)
    return {
        'C1': _H ** 4 * 2 ** (2 * N + 3),
        'C2': _H ** 3 * 2 ** (2 * N),
        'C3': _H * 2 ** (2 * N - 2),
        'C4': _H ** 2 * 2 ** (2 * N - 1),
        'C5': Fraction(0),
        'C8': Fraction(0),
    }[label]


def m4_series_term(N: int) -> Fraction:
    ''' coefficient of 2^-Ns in the summed 2-local series for N >= 4 '''
    return (_H ** 4 * 2 ** (2 * N + 3) + _H ** 3 * 2 ** (2 * N)
            + _H * 2 ** (2 * N - 2) + _H ** 2 * 2 ** (2 * N - 1)
            + _H * 2 ** N * (Fraction(2) ** (N - 2) + Fraction(2) ** (N - 4) - _H)
            + _H * 2 ** (2 * N - 4) * (1 + 2 ** 2 * _H))


def mp1_case1_count(p: int, N: int) -> Fraction:
    ''' M_{p+1}, s(lambda_{p+1}) = N: (1 - 1/p) p^((p-1)N) '''
    return (1 - Fraction(1, p)) * Fraction(p) ** ((p - 1) * N)


def mp1_case21_count(p: int, N: int) -> Fraction:
    ''' M_{p+1}, some middle lambda of depth N: (1 - p^-(p-2)) p^((p-1)N - 1) '''
    return (1 - Fraction(1, p ** (p - 2))) * Fraction(p) ** ((p - 1) * N - 1)
