"""Acceptance criteria 1-10, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` or ``-v``; the verdict lines
are written around pytest's capture so they always appear.
"""
import time
from fractions import Fraction

import numpy as np
import pytest

from maxclass import combinatorics, tables, zeta
from maxclass.enumeration import analyze, case_counts, count_twist_isoclasses, enumerate_tuples, orbit_of, orbit_size_fast
from maxclass.matrix_oracle import DEFAULT_TOLERANCE, build_rep, check_relations, commutant_spectrum
from maxclass.standard_form import GroupSpec, LambdaTuple, is_irreducible

GRID_1 = [(4, 2, N) for N in (1, 2, 3)]
GRID_2 = [(4, 2, N) for N in (4, 5)]
GRID_3 = [(3, 2, N) for N in range(1, 7)] + [(4, 3, N) for N in range(1, 4)]
GRID_4 = [(3, 5, N) for N in range(1, 4)] + [(4, 5, N) for N in range(1, 3)]


@pytest.fixture
def verdict(capsys):
    def emit(number, ok, what, detail=''):
        with capsys.disabled():
            print(f'\n[acceptance {number:2d}] {"PASS" if ok else "FAIL"}  {what}' + (f'  ({detail})' if detail else ''))
        assert ok, f'criterion {number}: {what} {detail}'
    return emit


def series_mismatches(grid):
    bad = []
    for n, p, N in grid:
        want = zeta.expand(zeta.local_closed_form(n, p), N)[N]
        got = count_twist_isoclasses(GroupSpec(n, p, N))
        if got != want:
            bad.append(f'{(n, p, N)}: {got} != {want}')
    return bad


def test_criterion_1_small_counts(verdict):
    start = time.perf_counter()
    got = [count_twist_isoclasses(GroupSpec(*s)) for s in GRID_1]
    secs = time.perf_counter() - start
    verdict(1, got == [4, 17, 70] and secs < 5, 'r_2, r_4, r_8 of M_4 = 4, 17, 70 in < 5 s', f'{got}, {secs:.2f}s')


def test_criterion_2_m4_series(verdict):
    start = time.perf_counter()
    bad = series_mismatches(GRID_2)
    secs = time.perf_counter() - start
    verdict(2, not bad and secs < 60, 'M_4 at 2, N = 4, 5 match the series in < 60 s', f'{bad}, {secs:.2f}s')


def test_criterion_3_mp1_series(verdict):
    start = time.perf_counter()
    bad = series_mismatches(GRID_3)
    secs = time.perf_counter() - start
    verdict(3, not bad and secs < 120, 'M_3 at 2 (N <= 6) and M_4 at 3 (N <= 3) match the series in < 120 s',
            f'{bad}, {secs:.2f}s')


def test_criterion_4_uniform_series(verdict):
    start = time.perf_counter()
    bad = series_mismatches(GRID_4)
    secs = time.perf_counter() - start
    verdict(4, not bad and secs < 120, 'M_3 at 5 (N <= 3) and M_4 at 5 (N <= 2) match the series in < 120 s',
            f'{bad}, {secs:.2f}s')


def test_criterion_5_case_tables(verdict):
    bad = []
    for N in range(2, 6):
        counts = case_counts(GroupSpec(4, 2, N))
        for label, got in counts.items():
            want = tables.m4_case_count(label, N)
            if got != want:
                bad.append(f'N={N} {label}: {got} != {want}')
    counts2, counts3 = case_counts(GroupSpec(4, 2, 2)), case_counts(GroupSpec(4, 2, 3))
    if counts2['C7'] != 1 or (counts3['C7.1'], counts3['C7.2']) != (2, 4):
        bad.append('special values at N = 2, 3')
    # the variant 6.4 formula with an extra factor (1 - 2^-1) is off by exactly that factor
    for N in (4, 5):
        if tables.m4_case6_4_printed(N) * 2 != tables.m4_case_count('C6.4', N):
            bad.append(f'6.4 cell relation at N={N}')
    verdict(5, not bad, 'per-case and per-subcase orbit counts of M_4 at 2 for N = 2..5', '; '.join(bad))


def test_criterion_6_mp1_case_formulas(verdict):
    p, bad = 3, []
    for N in range(1, 4):
        c = case_counts(GroupSpec(p + 1, p, N))
        want1 = (1 - Fraction(1, p)) * p ** ((p - 1) * N)
        want21 = (1 - Fraction(1, p ** (p - 2))) * Fraction(p) ** ((p - 1) * N - 1)
        if (c['C1'], c['C2.1']) != (want1, want21):
            bad.append(f'N={N}: {c["C1"]}, {c["C2.1"]} vs {want1}, {want21}')
    verdict(6, not bad, 'M_4 at 3, cases 1 and 2.1 for N <= 3', '; '.join(bad))


@pytest.mark.slow
def test_criterion_7_orbit_oracle(verdict):
    checked = bad = 0
    for n, p, N in GRID_1 + GRID_2 + GRID_3 + GRID_4:
        spec = GroupSpec(n, p, N)
        a = analyze(spec)
        for row in a.exponents[a.irreducible].tolist():
            t = LambdaTuple.from_exponents(spec, row)
            checked += 1
            bad += orbit_size_fast(t) != orbit_of(t).size
    verdict(7, bad == 0, 'fast orbit size = brute-force orbit size on every irreducible tuple of criteria 1-4',
            f'{bad} of {checked} disagree')


def test_criterion_8_matrix_oracle(verdict):
    relations = disagree = thin = total = 0
    for n in (2, 3, 4):
        for p, N in ((2, 1), (2, 2), (2, 3), (3, 1), (3, 2)):
            for t in enumerate_tuples(GroupSpec(n, p, N)):
                total += 1
                gens = build_rep(t)
                relations += not check_relations(gens)
                sv = commutant_spectrum(gens)
                thr = DEFAULT_TOLERANCE * sv[0]
                thin += bool(np.any((sv > thr / 10) & (sv < thr * 10)))
                disagree += (int(np.sum(sv < thr)) == 1) != is_irreducible(t)
    ok = relations == disagree == thin == 0
    verdict(8, ok, 'relations, commutant dimension and 10x margins on every tuple with p^N <= 9',
            f'{total} tuples, {relations} relation failures, {disagree} disagreements, {thin} thin margins')


@pytest.mark.slow
def test_criterion_9_combinatorial_identities(verdict):
    bad = []
    T = combinatorics.t_number
    for k in range(1, 7):
        for j in range(1, 10 ** 4 + 1):
            if T(k, j) != T(k, j - 1) + T(k - 1, j):
                bad.append(f'recursion k={k} j={j}')
                break
    for p in (3, 5, 7):
        for k in range(1, p):
            for b in range(1, 7):
                q = p ** b
                base = [combinatorics.t_number_mod(k, j, p, b) for j in range(q + 1)]
                for alpha in range(1, p):
                    if any(combinatorics.t_number_mod(k, alpha * q + j, p, b) != base[j] for j in range(q + 1)):
                        bad.append(f'periodicity p={p} k={k} b={b} alpha={alpha}')
    for p in (2, 3, 5):
        for N in range(1, 6):
            if combinatorics.p_valuation(T(p, p ** N - 1), p) != N - 1:
                bad.append(f'valuation p={p} N={N}')
    verdict(9, not bad, 'T_k recursion, periodicity mod p^b, and v_p(T_p(p^N - 1)) = N - 1', '; '.join(bad[:5]))


def test_criterion_10_global(verdict):
    bad = []
    for n in (2, 3, 4):
        if zeta.euler_product_coefficients(n, 200) != zeta.dirichlet_coefficients(n, 200):
            bad.append(f'n={n} routes differ')
    g = zeta.global_coefficients(4, 200)
    if (g[2], g[6]) != (4, 40):
        bad.append(f'r_2, r_6 = {g[2]}, {g[6]}')
    verdict(10, not bad, 'Euler product = Dirichlet convolution for m <= 200, r_2(M_4) = 4, r_6(M_4) = 40',
            '; '.join(bad))
