"""Standard-form representations of M_n = <a_1..a_n, b | [a_i, b] = a_{i+1}>.

A p^N-dimensional representation in standard form sends b to the cyclic
shift y and each a_i to a diagonal matrix x_i whose j-th entry is

    lambda_{i,j} = prod_{k=i}^{n} lambda_k ** T_{k-i}(j-1).

The twist parameter lambda_1 is not stored: every predicate here only sees
ratios in which it cancels. Tuples therefore hold (lambda_2, ..., lambda_n),
all at the working modulus p^(N+n).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import combinatorics
from .cyclotomic import RootOfUnity, depth

__all__ = [
    'GroupSpec', 'LambdaTuple',
    'lambda_entry', 'closure_defect', 'closure_defect_product',
    'profile', 'reducibility_ratio', 'minimal_period_exponent',
    'is_irreducible', 'is_irreducible_by_depth',
]


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class GroupSpec:
    n: int
    p: int
    N: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f'M_n needs n >= 2, got {self.n}')
        if not _is_prime(self.p):
            raise ValueError(f'{self.p} is not prime')
        if self.N < 0:
            raise ValueError(f'level must be non-negative, got {self.N}')

    @property
    def W(self) -> int:
        ''' working modulus exponent for exponent residues '''
        return self.N + self.n

    @property
    def dim(self) -> int:
        return self.p ** self.N

    @property
    def modulus(self) -> int:
        return self.p ** self.W

    def __str__(self):
        return f'M_{self.n} at p={self.p}, N={self.N}'


@dataclass(frozen=True, order=True)
class LambdaTuple:
    """Parameters (lambda_2, ..., lambda_n) of a standard-form representation.

    Construction does not check the closure conditions, so candidates can be
    built and probed; use :meth:`is_well_defined` or :meth:`checked`.
    """
    spec: GroupSpec
    lambdas: tuple[RootOfUnity, ...]

    def __post_init__(self):
        s = self.spec
        if len(self.lambdas) != s.n - 1:
            raise ValueError(f'expected {s.n - 1} parameters, got {len(self.lambdas)}')
        for lam in self.lambdas:
            if lam.p != s.p or lam.W != s.W:
                raise ValueError(f'{lam} does not live at p={s.p}, W={s.W}')

    @classmethod
    def from_exponents(cls, spec: GroupSpec, exponents: Iterable[int]) -> LambdaTuple:
        ''' exponents of lambda_2..lambda_n at working modulus p^(N+n) '''
        return cls(spec, tuple(RootOfUnity.from_exponent(spec.p, spec.W, e) for e in exponents))

    @classmethod
    def checked(cls, spec: GroupSpec, exponents: Iterable[int]) -> LambdaTuple:
        t = cls.from_exponents(spec, exponents)
        if not t.is_well_defined():
            bad = [i for i in range(2, spec.n + 1) if not closure_defect(t, i).is_one()]
            raise ValueError(f'closure condition fails at i={bad}')
        return t

    def __getitem__(self, i: int) -> RootOfUnity:
        ''' lambda_i for 2 <= i <= n '''
        if not 2 <= i <= self.spec.n:
            raise IndexError(f'lambda index {i} outside 2..{self.spec.n}')
        return self.lambdas[i - 2]

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(lam.e for lam in self.lambdas)

    def depths(self) -> tuple[int, ...]:
        ''' (s(lambda_2), ..., s(lambda_n)) '''
        return tuple(depth(lam) for lam in self.lambdas)

    def is_well_defined(self) -> bool:
        return all(closure_defect(self, i).is_one() for i in range(2, self.spec.n + 1))

    def __str__(self):
        return '(' + ','.join(str(e) for e in self.exponents) + ')'


def _power_product(t: LambdaTuple, i_lo: int, powers: Sequence[int]) -> RootOfUnity:
    ''' prod_{k >= i_lo} lambda_k ** powers[k - i_lo] '''
    s = t.spec
    e = sum(pw * t[k].e for k, pw in zip(range(i_lo, s.n + 1), powers))
    return RootOfUnity(s.p, s.W, e % s.modulus)


def lambda_entry(t: LambdaTuple, i: int, j: int) -> RootOfUnity:
    ''' j-th diagonal entry (1-based) of x_i '''
    n = t.spec.n
    if not 2 <= i <= n:
        raise IndexError(f'index {i} outside 2..{n}')
    if j < 1:
        raise IndexError('diagonal positions start at 1')
    return _power_product(t, i, [combinatorics.t_number(k - i, j - 1) for k in range(i, n + 1)])


def closure_defect(t: LambdaTuple, i: int) -> RootOfUnity:
    """prod_{m=1}^{p^N} lambda_{i,m} in closed form.

    Equals lambda_i^(p^N) * prod_{k>i} lambda_k^T_{k-i+1}(p^N - 1); the tuple
    is well defined iff this is 1 for every i in 2..n.
    """
    s = t.spec
    if not 2 <= i <= s.n:
        raise IndexError(f'index {i} outside 2..{s.n}')
    q = s.dim
    powers = [q] + [combinatorics.t_number(k - i + 1, q - 1) for k in range(i + 1, s.n + 1)]
    return _power_product(t, i, powers)


def closure_defect_product(t: LambdaTuple, i: int) -> RootOfUnity:
    ''' the same defect as the literal product of the p^N diagonal entries of x_i '''
    s = t.spec
    acc = RootOfUnity.one(s.p, s.W)
    for m in range(1, s.dim + 1):
        acc = acc * lambda_entry(t, i, m)
    return acc


def profile(t: LambdaTuple, k: int) -> tuple[RootOfUnity, ...]:
    ''' (lambda_{2,k}, ..., lambda_{n,k}) with k read mod p^N '''
    j = (k - 1) % t.spec.dim + 1
    return tuple(lambda_entry(t, i, j) for i in range(2, t.spec.n + 1))


def reducibility_ratio(t: LambdaTuple, i: int, j: int) -> RootOfUnity:
    """lambda_{i, p^j + 1} / lambda_{i, 1} = prod_{k>i} lambda_k^T_{k-i}(p^j).

    Valid for i = 1 as well since lambda_1 cancels.
    """
    s = t.spec
    if not 1 <= i <= s.n - 1:
        raise IndexError(f'index {i} outside 1..{s.n - 1}')
    if not 0 <= j <= s.N:
        raise ValueError(f'stability exponent {j} outside 0..{s.N}')
    pj = s.p ** j
    return _power_product(t, i + 1, [combinatorics.t_number(k - i, pj) for k in range(i + 1, s.n + 1)])


def minimal_period_exponent(t: LambdaTuple, low_index: int = 1) -> int:
    """Least j with all reducibility ratios at indices >= low_index trivial.

    V_{p^j} is then the minimal stable subspace of the restriction to the
    subgroup generated by b and a_{low_index}, ..., a_n.
    """
    s = t.spec
    if not 1 <= low_index <= s.n:
        raise ValueError(f'low_index {low_index} outside 1..{s.n}')
    for j in range(s.N + 1):
        if all(reducibility_ratio(t, i, j).is_one() for i in range(low_index, s.n)):
            return j
    raise AssertionError(f'{t} has no period dividing p^N; is it well defined?')


def is_irreducible(t: LambdaTuple) -> bool:
    return minimal_period_exponent(t, 1) == t.spec.N


def is_irreducible_by_depth(t: LambdaTuple) -> bool:
    ''' depth criterion, only asserted for p >= n: some lambda_i has depth N '''
    s = t.spec
    if s.p < s.n:
        raise ValueError(f'depth criterion needs p >= n (p={s.p}, n={s.n})')
    return max(t.depths()) == s.N
