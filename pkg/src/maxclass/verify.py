"""The batch of published claims checked by ``maxclass verify``.

Each group is a generator of (claim, ok, detail) triples so partial results
are still printed when a later check blows up.
"""
from __future__ import annotations

import sys
import time
from typing import Callable, Iterator, TextIO

import numpy as np

from . import combinatorics, enumeration, tables, zeta
from .enumeration import GroupSpec
from .errors import ConsistencyError
from .matrix_oracle import build_rep, check_relations, commutant_spectrum, DEFAULT_TOLERANCE
from .standard_form import LambdaTuple, is_irreducible

Result = tuple[str, bool, str]

M4_SMALL = {1: 4, 2: 17, 3: 70}
SERIES_GRID = {
    'm4-series': [(4, 2, N) for N in (4, 5)],
    'mp1-series': [(3, 2, N) for N in range(1, 7)] + [(4, 3, N) for N in range(1, 4)],
    'uniform': [(3, 5, N) for N in range(1, 4)] + [(4, 5, N) for N in range(1, 3)],
}


def _m4_small() -> Iterator[Result]:
    for N, want in M4_SMALL.items():
        got = enumeration.count_twist_isoclasses(GroupSpec(4, 2, N), 'both')
        yield f'r_{2 ** N}(M_4) = {want}', got == want, f'got {got}'


def _series(key: str) -> Callable[[], Iterator[Result]]:
    def run() -> Iterator[Result]:
        for n, p, N in SERIES_GRID[key]:
            want = zeta.expand(zeta.local_closed_form(n, p), N)[N]
            got = enumeration.count_twist_isoclasses(GroupSpec(n, p, N))
            yield f'M_{n}, p={p}, N={N}: brute force = series coefficient {want}', got == want, f'got {got}'
    return run


def _m4_cases() -> Iterator[Result]:
    for N in range(2, 6):
        counts = enumeration.case_counts(GroupSpec(4, 2, N))
        for lab, got in counts.items():
            want = tables.m4_case_count(lab, N)
            yield f'M_4 at 2, N={N}, {lab} = {want}', got == want, f'got {got}'


def _mp1_cases() -> Iterator[Result]:
    p = 3
    for N in range(1, 4):
        counts = enumeration.case_counts(GroupSpec(p + 1, p, N))
        for lab, formula in (('C1', tables.mp1_case1_count), ('C2.1', tables.mp1_case21_count)):
            want = formula(p, N)
            yield f'M_{p + 1} at {p}, N={N}, {lab} = {want}', counts[lab] == want, f'got {counts[lab]}'


def _orbits() -> Iterator[Result]:
    for key in ('m4-series', 'mp1-series', 'uniform'):
        grid = SERIES_GRID[key] + ([(4, 2, N) for N in (1, 2, 3)] if key == 'm4-series' else [])
        for n, p, N in grid:
            spec = GroupSpec(n, p, N)
            a = enumeration.analyze(spec)
            bad = 0
            for row in a.exponents[a.irreducible]:
                t = LambdaTuple.from_exponents(spec, row.tolist())
                if enumeration.orbit_size_fast(t) != enumeration.orbit_of(t).size:
                    bad += 1
            yield f'M_{n}, p={p}, N={N}: fast orbit size = brute-force orbit size', bad == 0, f'{bad} disagreements'


def _matrix() -> Iterator[Result]:
    for n in (2, 3, 4):
        for p, N in ((2, 1), (2, 2), (2, 3), (3, 1), (3, 2)):
            spec = GroupSpec(n, p, N)
            relations = disagree = borderline = 0
            for t in enumeration.enumerate_tuples(spec):
                gens = build_rep(t)
                relations += not check_relations(gens)
                sv = commutant_spectrum(gens)
                thr = DEFAULT_TOLERANCE * sv[0]
                borderline += int(np.any((sv > thr / 10) & (sv < thr * 10)))
                disagree += (int(np.sum(sv < thr)) == 1) != is_irreducible(t)
            ok = relations == disagree == borderline == 0
            yield (f'M_{n}, p={p}, N={N}: relations hold, commutant agrees with irreducibility', ok,
                   f'{relations} relation failures, {disagree} disagreements, {borderline} borderline')


def _identities() -> Iterator[Result]:
    for p in (2, 3, 5):
        for N in range(1, 6):
            v = combinatorics.p_valuation(combinatorics.t_number(p, p ** N - 1), p)
            yield f'v_{p}(T_{p}({p}^{N} - 1)) = {N - 1}', v == N - 1, f'got {v}'
    bad = [(k, j) for k in range(1, 7) for j in range(1, 2001)
           if combinatorics.t_number(k, j) != combinatorics.t_number(k, j - 1) + combinatorics.t_number(k - 1, j)]
    yield 'T_k(j) = T_k(j-1) + T_{k-1}(j), k <= 6, j <= 2000', not bad, f'{len(bad)} failures'
    bad = 0
    for p in (3, 5, 7):
        for k in range(1, p):
            for b in range(1, 5):
                for alpha in range(1, p):
                    for j in range(0, p ** b + 1, max(1, p ** b // 50)):
                        bad += (combinatorics.t_number_mod(k, alpha * p ** b + j, p, b)
                                != combinatorics.t_number_mod(k, j, p, b))
    yield 'T_k(alpha p^b + j) = T_k(j) mod p^b for p > k', bad == 0, f'{bad} failures'


def _global() -> Iterator[Result]:
    for n in (2, 3, 4):
        try:
            zeta.global_coefficients(n, 200)
            yield f'M_{n}: Euler product = Dirichlet convolution for m <= 200', True, ''
        except ConsistencyError as exc:
            yield f'M_{n}: Euler product = Dirichlet convolution for m <= 200', False, str(exc)
    g = zeta.global_coefficients(4, 200)
    yield 'r_2(M_4) = 4', g[2] == 4, f'got {g[2]}'
    yield 'r_6(M_4) = 40', g[6] == 40, f'got {g[6]}'


GROUPS: dict[str, Callable[[], Iterator[Result]]] = {
    'm4-small': _m4_small,
    'm4-series': _series('m4-series'),
    'mp1-series': _series('mp1-series'),
    'uniform': _series('uniform'),
    'm4-cases': _m4_cases,
    'mp1-cases': _mp1_cases,
    'orbits': _orbits,
    'matrix': _matrix,
    'identities': _identities,
    'global': _global,
}


def run_verify(only: list[str] | None = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    """Run the claim groups and print one line per claim.

    Returns 0 if everything passed, 1 on a mismatch, 3 on an internal
    consistency failure.
    """
    names = list(GROUPS) if not only else only
    unknown = [g for g in names if g not in GROUPS]
    if unknown:
        raise ValueError(f'unknown claim groups {unknown}; choose from {list(GROUPS)}')
    status = 0
    for name in names:
        start = time.perf_counter()
        try:
            for claim, ok, detail in GROUPS[name]():
                print(f'{"PASS" if ok else "FAIL"}  [{name}] {claim}' + ('' if ok else f'  ({detail})'), file=out)
                if not ok:
                    status = max(status, 1)
        except ConsistencyError as exc:
            print(f'FAIL  [{name}] internal consistency: {exc}', file=out)
            status = 3
        print(f'{name}: {time.perf_counter() - start:.2f}s', file=err)
    return status
