"""Enumerating standard-form tuples and counting twist isoclasses.

Twist isoclasses of irreducible p^N-dimensional representations correspond
to orbits of irreducible well-defined tuples under the shout action
lambda_i -> lambda_{i, s+1} of Z/p^N. The orbit of t has size
p^minimal_period_exponent(t, 2), so r_{p^N} is the sum of 1/orbit size over
irreducible tuples.
"""
from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import _accel, combinatorics
from .cyclotomic import RootOfUnity, roots_of_power
from .errors import ConsistencyError, UndersizedModulus
from .standard_form import (
    GroupSpec, LambdaTuple, minimal_period_exponent, is_irreducible, profile,
)

__all__ = [
    'enumerate_tuples', 'exponent_array', 'shout_shift', 'ShoutOrbit', 'orbit_of',
    'orbit_size_fast', 'count_twist_isoclasses', 'CaseLabel', 'case_family',
    'classify_case', 'classify_depths', 'case_labels', 'case_counts', 'wilson_predicate',
    'analyze', 'Analysis', 'default_jobs',
]

log = logging.getLogger(__name__)


def default_jobs() -> int:
    return max(1, int(os.environ.get('MAXCLASS_JOBS', '1')))


# tuple streams

def enumerate_tuples(spec: GroupSpec) -> Iterator[LambdaTuple]:
    """Every well-defined tuple once, by backward chaining through the closure conditions.

    lambda_n runs over the p^N roots of depth <= N; then for i = n-1 .. 2,
    lambda_i runs over the p^N-th roots of the inverse tail product.
    """
    if spec.N < 1:
        raise ValueError('enumeration needs N >= 1')
    p, W, q = spec.p, spec.W, spec.dim
    one = RootOfUnity.one(p, W)
    tail_powers = {(i, k): combinatorics.t_number(k - i + 1, q - 1)
                   for i in range(2, spec.n) for k in range(i + 1, spec.n + 1)}

    def chain(i: int, chosen: dict[int, RootOfUnity]) -> Iterator[LambdaTuple]:
        if i < 2:
            yield LambdaTuple(spec, tuple(chosen[k] for k in range(2, spec.n + 1)))
            return
        tail = one
        for k in range(i + 1, spec.n + 1):
            tail = tail * chosen[k] ** tail_powers[i, k]
        roots = roots_of_power(tail ** -1, spec.N)
        if not roots:
            raise UndersizedModulus(f'no p^N-th root for lambda_{i} at W={W}; working modulus too small')
        for lam in roots:
            yield from chain(i - 1, {**chosen, i: lam})

    for lam_n in roots_of_power(one, spec.N):
        yield from chain(spec.n - 1, {spec.n: lam_n})


@lru_cache(maxsize=64)
def _table(n: int, p: int, N: int) -> np.ndarray:
    return combinatorics.t_table(n, p ** N, p ** (N + n))


def exponent_array(spec: GroupSpec, lead_lo: int = 0, lead_hi: int | None = None) -> np.ndarray:
    ''' all well-defined tuples as an int64 array of exponents (batch counterpart of enumerate_tuples) '''
    if spec.N < 1:
        raise ValueError('enumeration needs N >= 1')
    return _accel.enumerate_exponents(spec.n, spec.p, spec.N, _table(spec.n, spec.p, spec.N), lead_lo, lead_hi)


# shout action

def shout_shift(t: LambdaTuple, shift: int) -> LambdaTuple:
    ''' conjugate by y^shift: lambda_i -> lambda_{i, shift + 1} '''
    return LambdaTuple(t.spec, profile(t, shift + 1))


@dataclass(frozen=True)
class ShoutOrbit:
    representative: LambdaTuple
    size: int
    members: tuple[LambdaTuple, ...]

    def __contains__(self, t: LambdaTuple) -> bool:
        return t in self.members


def orbit_of(t: LambdaTuple) -> ShoutOrbit:
    ''' brute-force orbit: iterate single shifts until the tuple comes back '''
    members = [t]
    cur = shout_shift(t, 1)
    while cur != t:
        members.append(cur)
        if len(members) > t.spec.dim:
            raise ConsistencyError(f'shout orbit of {t} exceeds p^N; tuple not well defined?')
        cur = shout_shift(cur, 1)
    return ShoutOrbit(min(members), len(members), tuple(members))


def orbit_size_fast(t: LambdaTuple) -> int:
    """p^m with V_{p^m} the minimal stable subspace of the restriction to <b, a_2..a_n>.

    For p >= n-1 this is also p^max(depth(lambda_3..lambda_n)); the two are
    compared and a mismatch raises.
    """
    s = t.spec
    size = s.p ** minimal_period_exponent(t, 2)
    if s.p >= s.n - 1 and is_irreducible(t):
        by_depth = s.p ** max(t.depths()[1:], default=0)
        if by_depth != size:
            raise ConsistencyError(f'orbit size {size} != depth prediction {by_depth} for {t}')
    return size


# counting

@dataclass
class Analysis:
    """Batch results for one (n, p, N), rows aligned with ``exponents``."""
    spec: GroupSpec
    exponents: np.ndarray
    mpe1: np.ndarray
    mpe2: np.ndarray

    @property
    def irreducible(self) -> np.ndarray:
        return self.mpe1 == self.spec.N

    def weight(self, mask: np.ndarray | None = None) -> Fraction:
        ''' sum of 1/orbit size over irreducible rows (optionally restricted) '''
        sel = self.irreducible if mask is None else self.irreducible & mask
        hist = np.bincount(self.mpe2[sel], minlength=self.spec.N + 1)
        return sum((Fraction(int(c), self.spec.p ** j) for j, c in enumerate(hist)), Fraction(0))

    def depths(self) -> np.ndarray:
        return depth_array(self.exponents, self.spec.p, self.spec.W)


def depth_array(E: np.ndarray, p: int, W: int) -> np.ndarray:
    out = np.where(E == 0, 0, W).astype(np.int64)
    x = E.copy()
    live = x != 0
    while live.any():
        div = live & (x % p == 0)
        if not div.any():
            break
        out[div] -= 1
        x[div] //= p
        live = div
    return out


def analyze(spec: GroupSpec, lead_lo: int = 0, lead_hi: int | None = None) -> Analysis:
    E = exponent_array(spec, lead_lo, lead_hi)
    mpe1, mpe2 = _accel.period_exponents(E, spec.n, spec.p, spec.N, _table(spec.n, spec.p, spec.N))
    return Analysis(spec, E, mpe1, mpe2)


def _partial(args) -> tuple[Fraction, int, int]:
    spec, lo, hi, method = args
    a = analyze(spec, lo, hi)
    irr = a.irreducible
    if method == 'representatives':
        minimal = _accel.orbit_minimal(a.exponents[irr], spec.n, spec.p, spec.N, _table(spec.n, spec.p, spec.N))
        part = Fraction(int(minimal.sum()))
    else:
        part = a.weight()
    return part, len(a.exponents), int(irr.sum())


def _partitions(q: int, jobs: int) -> list[tuple[int, int]]:
    jobs = max(1, min(jobs, q))
    bounds = [q * i // jobs for i in range(jobs + 1)]
    return [(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]


def count_twist_isoclasses(spec: GroupSpec, method: str = 'weights', jobs: int | None = None) -> int:
    """r_{p^N}(M_n) by exhaustive enumeration.

    ``method='weights'`` sums 1/orbit size; ``'representatives'`` counts
    orbit-minimal irreducible tuples and must give the same answer when the
    whole lambda_n range is covered. ``'both'`` runs both and compares.
    """
    if spec.N == 0:
        return 1
    if method == 'both':
        a = count_twist_isoclasses(spec, 'weights', jobs)
        b = count_twist_isoclasses(spec, 'representatives', jobs)
        if a != b:
            raise ConsistencyError(f'{spec}: weight count {a} != representative count {b}')
        return a
    if method not in ('weights', 'representatives'):
        raise ValueError(f'unknown counting method {method!r}')
    jobs = default_jobs() if jobs is None else jobs
    # the shift fixes lambda_n, so lambda_n partitions are unions of orbits
    tasks = [(spec, lo, hi, method) for lo, hi in _partitions(spec.dim, jobs)]
    if len(tasks) > 1:
        with ProcessPoolExecutor(len(tasks)) as ex:
            parts = list(ex.map(_partial, tasks))
    else:
        parts = [_partial(tasks[0])]
    total = sum((pt[0] for pt in parts), Fraction(0))
    log.debug('%s: %d tuples, %d irreducible, r=%s', spec, sum(pt[1] for pt in parts), sum(pt[2] for pt in parts), total)
    if total.denominator != 1:
        raise ConsistencyError(f'{spec}: orbit aggregate {total} is not an integer')
    return int(total)


# case classification

@dataclass(frozen=True, order=True)
class CaseLabel:
    family: str
    label: str

    @property
    def top(self) -> str:
        ''' C6.4 -> C6; M_{p+1} labels are already top level '''
        if self.family == M4_AT_2:
            return self.label.split('.')[0]
        return self.label

    def __str__(self):
        return self.label


M4_AT_2 = 'M4@2'
MP1 = 'M_{p+1}'

_M4_TOP = ('C1', 'C2', 'C3', 'C4', 'C5', 'C6', 'C7', 'C8')
_M4_SUB = ('C6.1', 'C6.2', 'C6.3', 'C6.4', 'C7.1', 'C7.2')
_MP1_LABELS = ('C1', 'C2.1', 'C2.2')


def case_family(spec: GroupSpec) -> str:
    if spec.n == 4 and spec.p == 2:
        if spec.N < 2:
            raise ValueError('the M_4 case tables start at N = 2')
        return M4_AT_2
    if spec.n == spec.p + 1:
        if spec.N < 1:
            raise ValueError('case analysis needs N >= 1')
        return MP1
    raise ValueError(f'no case analysis for {spec}')


def case_labels(spec: GroupSpec) -> tuple[str, ...]:
    return _M4_TOP + _M4_SUB if case_family(spec) == M4_AT_2 else _MP1_LABELS


def classify_depths(family: str, N: int, depths: tuple[int, ...]) -> str:
    ''' label from (s(lambda_2), ..., s(lambda_n)) '''
    if family == M4_AT_2:
        s2, s3, s4 = depths
        if s4 == N:
            return 'C1'
        if s4 == N - 1:
            return 'C2' if s3 == N else 'C3'
        if s3 == N:
            return 'C4'
        if s3 == N - 1:
            if s2 == N:
                return 'C5'
            return 'C7.1' if s4 <= N - 3 else 'C7.2'
        if s2 != N:
            return 'C8'
        if s4 == 0:
            return 'C6.4'
        if s3 > s4 + 1:
            return 'C6.1'
        if s3 < s4 + 1:
            return 'C6.2'
        return 'C6.3'
    if depths[-1] == N:
        return 'C1'
    if any(d == N for d in depths[1:-1]):
        return 'C2.1'
    return 'C2.2'


def classify_case(t: LambdaTuple) -> CaseLabel:
    family = case_family(t.spec)
    return CaseLabel(family, classify_depths(family, t.spec.N, t.depths()))


def case_counts(spec: GroupSpec, analysis: Analysis | None = None) -> dict[str, int]:
    """Orbit counts of irreducible tuples per case label.

    For M_4 at p = 2 the keys are C1..C8 followed by the subcases of C6 and
    C7, so C6 = C6.1 + ... + C6.4 and C7 = C7.1 + C7.2.
    """
    family = case_family(spec)
    a = analysis if analysis is not None else analyze(spec)
    D = a.depths()
    labels = np.array([classify_depths(family, spec.N, tuple(int(x) for x in row)) for row in D])
    out = {}
    for lab in case_labels(spec):
        mask = labels == lab
        if family == M4_AT_2 and lab in _M4_TOP:
            mask = np.char.startswith(labels, lab + '.') | mask
        w = a.weight(mask)
        if w.denominator != 1:
            raise ConsistencyError(f'{spec}: case {lab} aggregate {w} is not an integer')
        out[lab] = int(w)
    total = sum(out[lab] for lab in (_M4_TOP if family == M4_AT_2 else _MP1_LABELS))
    if total != int(a.weight()):
        raise ConsistencyError(f'{spec}: case totals {total} != {a.weight()}')
    return out


def wilson_predicate(t: LambdaTuple) -> bool:
    """Irreducibility rule for M_{p+1} tuples in case C2.2 with s(lambda_{p+1}) >= 1.

    Write lambda_i = lambda_*^(alpha_i p^m_i) for a primitive p^N-th root
    lambda_*. Irreducible iff m_{p+1} = 1 or m_2 = 0, except when both hold
    and alpha_2 = -alpha_{p+1} mod p.
    """
    s = t.spec
    if s.n != s.p + 1:
        raise ValueError('only defined for M_{p+1}')
    if classify_case(t).label != 'C2.2' or t[s.n].depth < 1:
        raise ValueError(f'{t} is not a C2.2 tuple with s(lambda_{s.n}) >= 1')
    shift = s.p ** (s.W - s.N)

    def split(lam: RootOfUnity) -> tuple[int, int]:
        f = lam.e // shift
        if f == 0:
            return 1, s.N
        m = combinatorics.p_valuation(f, s.p)
        return f // s.p ** m % s.p, m

    a2, m2 = split(t[2])
    a_top, m_top = split(t[s.n])
    if m_top == 1 and m2 == 0:
        return (a2 + a_top) % s.p != 0
    return m_top == 1 or m2 == 0
