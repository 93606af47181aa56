import pytest
from hypothesis import given, strategies as st

from maxclass.combinatorics import gamma, p_valuation, t_number, t_number_mod, t_table


def recursion_table(kmax, jmax):
    ''' T_k(j) straight from T_k(j) = T_k(j-1) + T_{k-1}(j), no binomials '''
    T = [[1] * (jmax + 1)]
    for k in range(1, kmax + 1):
        row = [0]
        for j in range(1, jmax + 1):
            row.append(row[j - 1] + T[k - 1][j])
        T.append(row)
    return T


@pytest.mark.parametrize('k, j, want', [(0, 7, 1), (4, 0, 0), (2, 3, 6), (0, 0, 1)])
def test_t_number_examples(k, j, want):
    assert t_number(k, j) == want


def test_t_2_3_by_hand_summation():
    assert t_number(1, 1) + t_number(1, 2) + t_number(1, 3) == 1 + 2 + 3 == t_number(2, 3)


def test_closed_form_matches_recursion():
    T = recursion_table(6, 10_000)
    for k in range(7):
        for j in range(10_001):
            assert t_number(k, j) == T[k][j]


def test_negative_arguments_rejected():
    with pytest.raises(ValueError):
        t_number(-1, 3)


@pytest.mark.parametrize('k, j, p, M, want', [(2, 2, 3, 1, 0), (1, 17, 2, 3, 1), (1, 5, 5, 2, 5)])
def test_t_number_mod_examples(k, j, p, M, want):
    assert t_number_mod(k, j, p, M) == want


@given(st.integers(0, 10 ** 6), st.sampled_from([2, 3, 5, 7]), st.integers(1, 6))
def test_t1_is_identity_mod(j, p, M):
    assert t_number_mod(1, j, p, M) == j % p ** M


def test_t_number_mod_rejects_composite():
    with pytest.raises(ValueError):
        t_number_mod(2, 3, 4, 1)


@pytest.mark.parametrize('p', [2, 3, 5])
@pytest.mark.parametrize('N', range(1, 6))
def test_valuation_of_t_p_at_p_power_minus_one(p, N):
    x = t_number(p, p ** N - 1)
    assert p_valuation(x, p) == N - 1
    # so the residue vanishes mod p^(N-1) but not mod p^N
    assert x % p ** (N - 1) == 0
    assert t_number_mod(p, p ** N - 1, p, N) != 0


@pytest.mark.parametrize('p', [3, 5, 7])
def test_t_k_vanishes_at_p_power_minus_one(p):
    for k in range(2, p):
        for N in range(1, 6):
            assert t_number(k, p ** N - 1) % p ** N == 0


def test_k_equal_one_does_not_vanish():
    # T_1(p^N - 1) = p^N - 1, so the vanishing statement needs k >= 2
    assert t_number(1, 3 ** 2 - 1) % 9 == 8


def _periodic(k, alpha, b, j, p):
    return t_number_mod(k, alpha * p ** b + j, p, b) == t_number_mod(k, j, p, b)


@pytest.mark.parametrize('p', [3, 5, 7])
def test_periodicity_exhaustive_small(p):
    for k in range(1, p):
        for b in range(1, 7):
            if p ** b > 400:
                break
            for alpha in range(1, p):
                for j in range(p ** b + 1):
                    assert _periodic(k, alpha, b, j, p)


@given(st.data())
def test_periodicity_sampled(data):
    p = data.draw(st.sampled_from([3, 5, 7]))
    k = data.draw(st.integers(1, p - 1))
    b = data.draw(st.integers(1, 6))
    alpha = data.draw(st.integers(1, p - 1))
    j = data.draw(st.integers(0, p ** b))
    assert _periodic(k, alpha, b, j, p)


def test_periodicity_needs_p_greater_than_k():
    # T_2(2 + 1) = 6 = 0 mod 2 but T_2(1) = 1
    assert not _periodic(2, 1, 1, 1, 2)


@pytest.mark.parametrize('p, N', [(2, 1), (2, 3), (2, 6), (3, 2), (3, 4), (5, 2), (7, 2), (3, 1)])
def test_summation_identity(p, N):
    q = p ** N
    assert sum(t_number(0, m) for m in range(q)) == q
    for j in range(1, 7):
        assert sum(t_number(j, m) for m in range(q)) == t_number(j + 1, q - 1)


def test_gamma_examples():
    assert gamma(2, 2, 1, 1, 3, 2) == 3
    for k in range(1, 4):
        assert gamma(k, 1, 2, 1, 5, 3) == 0


def test_gamma_rejects_alpha_divisible_by_p():
    with pytest.raises(ValueError):
        gamma(2, 2, 3, 1, 3, 2)


@pytest.mark.parametrize('p', [3, 5])
def test_gamma_periodicity(p):
    for k in range(1, p):
        for N in range(1, 4):
            for m in range(1, N + 1):
                for alpha in (1, p - 1, p + 1):
                    for beta in range(1, p ** m):
                        for j in range(p ** (N - m)):
                            assert (gamma(k, beta * p ** (N - m) + j + 1, alpha, m, p, N)
                                    == gamma(k, j + 1, alpha, m, p, N))


def test_t_table_matches_t_number():
    tab = t_table(5, 40, 3 ** 7)
    for k in range(6):
        for j in range(41):
            assert tab[k, j] == t_number(k, j) % 3 ** 7
