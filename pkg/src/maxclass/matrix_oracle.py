"""Explicit monomial matrices for standard-form tuples.

Group relations and V_{p^k} stability are checked exactly (products of
monomial matrices never produce sums of roots of unity). Irreducibility is
checked numerically through the dimension of the commutant, which shares no
code with the period-based predicate in standard_form.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import combinatorics
from .cyclotomic import RootOfUnity
from .standard_form import LambdaTuple, lambda_entry

__all__ = [
    'MonomialMatrix', 'Generators', 'RelationCheck', 'build_rep', 'check_relations',
    'commutant_spectrum', 'commutant_dimension', 'subspace_stable',
    'DEFAULT_TOLERANCE', 'DEFAULT_DIM_CAP',
]

DEFAULT_TOLERANCE = 1e-6
DEFAULT_DIM_CAP = 16


@dataclass(frozen=True)
class MonomialMatrix:
    """Row r holds coeffs[r] in column perm[r] and zeros elsewhere (0-based)."""
    perm: tuple[int, ...]
    coeffs: tuple[RootOfUnity, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError('perm is not a permutation')
        if len(self.coeffs) != len(self.perm):
            raise ValueError('one coefficient per row')

    @property
    def dim(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, dim: int, p: int, W: int) -> MonomialMatrix:
        one = RootOfUnity.one(p, W)
        return cls(tuple(range(dim)), (one,) * dim)

    @classmethod
    def diagonal(cls, entries) -> MonomialMatrix:
        entries = tuple(entries)
        return cls(tuple(range(len(entries))), entries)

    def __matmul__(self, other: MonomialMatrix) -> MonomialMatrix:
        if self.dim != other.dim:
            raise ValueError('dimension mismatch')
        perm = tuple(other.perm[c] for c in self.perm)
        coeffs = tuple(a * other.coeffs[c] for a, c in zip(self.coeffs, self.perm))
        return MonomialMatrix(perm, coeffs)

    def inverse(self) -> MonomialMatrix:
        perm = [0] * self.dim
        coeffs = [None] * self.dim
        for r, c in enumerate(self.perm):
            perm[c] = r
            coeffs[c] = self.coeffs[r] ** -1
        return MonomialMatrix(tuple(perm), tuple(coeffs))

    def __pow__(self, k: int) -> MonomialMatrix:
        base = self if k >= 0 else self.inverse()
        c0 = self.coeffs[0]
        acc = MonomialMatrix.identity(self.dim, c0.p, c0.W)
        for _ in range(abs(k)):
            acc = acc @ base
        return acc

    def is_identity(self) -> bool:
        return all(c == r for r, c in enumerate(self.perm)) and all(x.is_one() for x in self.coeffs)

    def apply(self, vec: dict[int, RootOfUnity]) -> dict[int, RootOfUnity]:
        ''' image of a sparse vector {index: coefficient} '''
        col_to_row = {c: r for r, c in enumerate(self.perm)}
        return {col_to_row[c]: self.coeffs[col_to_row[c]] * v for c, v in vec.items()}

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for r, (c, x) in enumerate(zip(self.perm, self.coeffs)):
            out[r, c] = x.to_complex()
        return out


@dataclass(frozen=True)
class Generators:
    """Images of a_1..a_n (``x[0]`` is x_1) and of b."""
    x: tuple[MonomialMatrix, ...]
    y: MonomialMatrix

    def all(self) -> tuple[MonomialMatrix, ...]:
        return self.x + (self.y,)

    def xi(self, i: int) -> MonomialMatrix:
        return self.x[i - 1]


def _cycle(dim: int, p: int, W: int) -> MonomialMatrix:
    # y e_j = e_{j+1}: ones below the diagonal and in the top-right corner
    one = RootOfUnity.one(p, W)
    return MonomialMatrix(tuple((r - 1) % dim for r in range(dim)), (one,) * dim)


def build_rep(t: LambdaTuple, lambda1: RootOfUnity | None = None) -> Generators:
    """x_1..x_n and y in standard form; x_1 uses lambda_1 = 1 unless given."""
    s = t.spec
    lam1 = RootOfUnity.one(s.p, s.W) if lambda1 is None else lambda1
    # lambda_{1,j} = lambda_1 * prod_{k>=2} lambda_k^T_{k-1}(j-1)
    diag1 = []
    for j in range(1, s.dim + 1):
        entry = lam1
        for k in range(2, s.n + 1):
            entry = entry * t[k] ** combinatorics.t_number(k - 1, j - 1)
        diag1.append(entry)
    xs = [MonomialMatrix.diagonal(diag1)]
    for i in range(2, s.n + 1):
        xs.append(MonomialMatrix.diagonal(lambda_entry(t, i, j) for j in range(1, s.dim + 1)))
    return Generators(tuple(xs), _cycle(s.dim, s.p, s.W))


@dataclass(frozen=True)
class RelationCheck:
    ok: bool
    failed: str | None = None

    def __bool__(self):
        return self.ok


def check_relations(gens: Generators) -> RelationCheck:
    """Exact check of the M_n relations, reading [g, h] as g h g^-1 h^-1.

    So [a_i, b] = a_{i+1} becomes y x_i y^-1 = x_i x_{i+1}^-1 for i < n and
    y x_n y^-1 = x_n; also the x_i commute pairwise and y^dim = 1.
    """
    x, y = gens.x, gens.y
    n = len(x)
    yinv = y.inverse()
    for i in range(1, n + 1):
        lhs = y @ gens.xi(i) @ yinv
        rhs = gens.xi(i) @ gens.xi(i + 1).inverse() if i < n else gens.xi(i)
        if lhs != rhs:
            return RelationCheck(False, f'y x_{i} y^-1 != ' + (f'x_{i} x_{i + 1}^-1' if i < n else f'x_{i}'))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if gens.xi(i) @ gens.xi(j) != gens.xi(j) @ gens.xi(i):
                return RelationCheck(False, f'x_{i} and x_{j} do not commute')
    if not (y ** y.dim).is_identity():
        return RelationCheck(False, 'y^dim != 1')
    return RelationCheck(True)


def commutant_spectrum(gens: Generators, dim_cap: int = DEFAULT_DIM_CAP) -> np.ndarray:
    """Singular values, descending, of A -> (A g - g A)_g on dim x dim matrices A."""
    dim = gens.y.dim
    if dim > dim_cap:
        raise ValueError(f'dimension {dim} exceeds cap {dim_cap}')
    eye = np.eye(dim)
    # column-major vec: vec(A g - g A) = (g^T kron I - I kron g) vec(A)
    blocks = [np.kron(g.T, eye) - np.kron(eye, g) for g in (m.to_array() for m in gens.all())]
    return np.linalg.svd(np.vstack(blocks), compute_uv=False)


def commutant_dimension(gens: Generators, tolerance: float = DEFAULT_TOLERANCE,
                        dim_cap: int = DEFAULT_DIM_CAP) -> int:
    ''' dimension of the commutant; 1 exactly when the representation is irreducible '''
    sv = commutant_spectrum(gens, dim_cap)
    threshold = tolerance * sv[0]
    if np.any((sv > threshold / 10) & (sv < threshold * 10)):
        warnings.warn(f'commutant singular values within 10x of threshold {threshold:.3g}', RuntimeWarning)
    return int(np.sum(sv < threshold))


def subspace_stable(gens: Generators, k: int) -> bool:
    """Is V_{p^k} invariant under every generator (exact)?

    V_{p^k} has basis u_r = sum of e_c over c = r mod p^k, r < p^k.
    """
    dim = gens.y.dim
    p = gens.y.coeffs[0].p
    block = p ** k
    if dim % block:
        raise ValueError(f'p^{k} does not divide the dimension {dim}')
    one = gens.y.coeffs[0].one(p, gens.y.coeffs[0].W)
    for g in gens.all():
        for r in range(block):
            image = g.apply({c: one for c in range(r, dim, block)})
            for s in range(block):
                cls = range(s, dim, block)
                vals = [image.get(c) for c in cls]
                if all(v is None for v in vals):
                    continue
                if any(v is None for v in vals) or len(set(vals)) != 1:
                    return False
    return True
