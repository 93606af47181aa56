import numpy as np
import pytest

from maxclass import matrix_oracle
from maxclass.cyclotomic import RootOfUnity
from maxclass.enumeration import enumerate_tuples
from maxclass.matrix_oracle import (
    MonomialMatrix, build_rep, check_relations, commutant_dimension, subspace_stable,
)
from maxclass.standard_form import GroupSpec, LambdaTuple, is_irreducible, minimal_period_exponent

SMALL = [(n, p, N) for n in (2, 3, 4) for p, N in ((2, 1), (2, 2), (2, 3), (3, 1), (3, 2))]


def test_m2_sign_representation(make_tuple):
    g = build_rep(make_tuple(2, 2, 1, [4]))
    np.testing.assert_allclose(g.xi(2).to_array(), -np.eye(2))
    np.testing.assert_allclose(g.y.to_array(), [[0, 1], [1, 0]])


def test_y_is_the_cycle_and_has_order_dim(make_tuple):
    g = build_rep(make_tuple(4, 2, 2, [16, 32, 0]))
    Y = g.y.to_array()
    for j in range(3):
        assert Y[j + 1, j] == 1
    assert Y[0, 3] == 1
    assert (g.y ** 4).is_identity() and not (g.y ** 2).is_identity()


@pytest.mark.parametrize('n, p, N', SMALL)
def test_relations_hold_on_every_tuple(n, p, N):
    for t in enumerate_tuples(GroupSpec(n, p, N)):
        g = build_rep(t)
        assert check_relations(g), check_relations(g).failed
        top = g.xi(n).coeffs
        assert all(c == top[0] for c in top)


def test_closure_violation_breaks_relations():
    t = LambdaTuple.from_exponents(GroupSpec(4, 2, 2), [1, 0, 0])
    assert not t.is_well_defined()
    res = check_relations(build_rep(t))
    assert not res and 'y x_' in res.failed
    # lambda_4 of depth N + 1 = 3 at modulus 2^6
    t = LambdaTuple.from_exponents(GroupSpec(4, 2, 2), [0, 0, 8])
    assert t[4].depth == 3 and not check_relations(build_rep(t))


def test_explicit_lambda1():
    t = LambdaTuple.checked(GroupSpec(3, 2, 1), [8, 0])
    lam1 = RootOfUnity(2, 4, 4)
    g = build_rep(t, lam1)
    assert g.xi(1).coeffs[0] == lam1
    assert check_relations(g)


@pytest.mark.parametrize('n, p, N', SMALL)
def test_commutant_detects_irreducibility(n, p, N):
    for t in enumerate_tuples(GroupSpec(n, p, N)):
        d = commutant_dimension(build_rep(t))
        assert (d == 1) == is_irreducible(t)
        assert d >= 1


def test_commutant_examples(make_tuple):
    assert commutant_dimension(build_rep(make_tuple(4, 2, 1, [0, 0, 0]))) == 2
    assert commutant_dimension(build_rep(make_tuple(4, 2, 2, [16, 32, 0]))) >= 2
    assert commutant_dimension(build_rep(make_tuple(4, 2, 1, [16, 0, 0]))) == 1


def test_dimension_cap(make_tuple):
    g = build_rep(LambdaTuple.checked(GroupSpec(2, 2, 5), [0]))
    with pytest.raises(ValueError, match='cap'):
        commutant_dimension(g)
    assert commutant_dimension(g, dim_cap=32) == 32


def test_borderline_warning(monkeypatch, make_tuple):
    g = build_rep(make_tuple(4, 2, 1, [16, 0, 0]))
    monkeypatch.setattr(matrix_oracle, 'commutant_spectrum', lambda gens, cap: np.array([1.0, 2e-6, 0.0]))
    with pytest.warns(RuntimeWarning):
        assert commutant_dimension(g) == 1


@pytest.mark.parametrize('n, p, N', [s for s in SMALL if s[1] ** s[2] <= 9])
def test_stable_subspaces(n, p, N):
    for t in enumerate_tuples(GroupSpec(n, p, N)):
        g = build_rep(t)
        m = minimal_period_exponent(t, 1)
        for k in range(N + 1):
            assert subspace_stable(g, k) == (k >= m)


def test_subspace_needs_divisor(make_tuple):
    g = build_rep(make_tuple(3, 2, 1, [0, 0]))
    with pytest.raises(ValueError):
        subspace_stable(g, 2)


def test_monomial_algebra():
    p, W = 3, 3
    a = MonomialMatrix((1, 2, 0), tuple(RootOfUnity(p, W, e) for e in (1, 5, 20)))
    b = MonomialMatrix((2, 0, 1), tuple(RootOfUnity(p, W, e) for e in (7, 0, 13)))
    c = MonomialMatrix.diagonal(RootOfUnity(p, W, e) for e in (3, 9, 26))
    assert (a @ b) @ c == a @ (b @ c)
    assert (a @ a.inverse()).is_identity()
    assert a ** -2 == (a ** 2).inverse()
    np.testing.assert_allclose((a @ b).to_array(), a.to_array() @ b.to_array())
    v = {0: RootOfUnity(p, W, 2)}
    img = a.apply(v)
    dense = a.to_array() @ np.eye(3)[:, 0] * v[0].to_complex()
    for r, x in img.items():
        assert np.isclose(dense[r], x.to_complex())
    with pytest.raises(ValueError):
        MonomialMatrix((0, 0), (RootOfUnity.one(p, W),) * 2)
