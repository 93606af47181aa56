"""Local representation zeta functions as rational series in t = p^-s, and
their Euler products.

Everything is exact integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from sympy import factorint, primerange
from sympy.functions.combinatorial.numbers import mobius

from .errors import ConsistencyError

__all__ = [
    'RationalSeries', 'GlobalCoefficients', 'PAPER_PROVEN', 'CONJECTURAL',
    'provenance', 'local_closed_form', 'expand', 'global_coefficients',
    'euler_product_coefficients', 'dirichlet_coefficients', 'dirichlet_convolve',
]

PAPER_PROVEN = 'paper-proven'
CONJECTURAL = 'conjectural-uniform'


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@dataclass(frozen=True)
class RationalSeries:
    """numer(t) / denom(t) with integer coefficients, lowest degree first."""
    numer: tuple[int, ...]
    denom: tuple[int, ...]
    prime: int
    provenance: str = CONJECTURAL

    def __post_init__(self):
        if not self.denom or self.denom[0] != 1:
            raise ValueError('denominator must have constant term 1')

    def __str__(self):
        def fmt(c):
            terms = []
            for k, a in enumerate(c):
                if a == 0:
                    continue
                mono = '' if k == 0 else ('t' if k == 1 else f't^{k}')
                coef = str(a) if (k == 0 or abs(a) != 1) else ('-' if a < 0 else '')
                terms.append(f'{coef}{mono}')
            return ' + '.join(terms).replace('+ -', '- ') or '0'
        return f'({fmt(self.numer)}) / ({fmt(self.denom)})  [t = {self.prime}^-s]'


def provenance(n: int, p: int) -> str:
    """Whether the uniform local form is proven at (n, p).

    Proven for non-exceptional primes (taken as p >= n), for M_{p+1} at p,
    and for M_4 at 2.
    """
    if p >= n or n == p + 1 or (n, p) == (4, 2):
        return PAPER_PROVEN
    return CONJECTURAL


def local_closed_form(n: int, p: int) -> RationalSeries:
    ''' (1 - t)^2 / ((1 - p^(n-2) t)(1 - p t)), with common linear factors cancelled '''
    if n < 2:
        raise ValueError('n must be at least 2')
    numer_roots = [1, 1]
    denom_roots = [p ** (n - 2), p]
    for a in list(denom_roots):
        if a in numer_roots:
            numer_roots.remove(a)
            denom_roots.remove(a)
    numer, denom = [1], [1]
    for a in numer_roots:
        numer = _poly_mul(numer, [1, -a])
    for a in denom_roots:
        denom = _poly_mul(denom, [1, -a])
    return RationalSeries(tuple(numer), tuple(denom), p, provenance(n, p))


def expand(r: RationalSeries, K: int) -> list[int]:
    ''' coefficients c_0..c_K of the power series of r '''
    if K < 0:
        raise ValueError('K must be non-negative')
    c: list[int] = []
    for k in range(K + 1):
        v = r.numer[k] if k < len(r.numer) else 0
        for i in range(1, min(k, len(r.denom) - 1) + 1):
            v -= r.denom[i] * c[k - i]
        c.append(v)
    return c


@dataclass
class GlobalCoefficients:
    n: int
    bound: int
    values: list[int] = field(repr=False)
    provenance: dict[int, str] = field(default_factory=dict, repr=False)

    def __getitem__(self, m: int) -> int:
        if not 1 <= m <= self.bound:
            raise IndexError(f'{m} outside 1..{self.bound}')
        return self.values[m - 1]


def euler_product_coefficients(n: int, B: int) -> list[int]:
    ''' r_1..r_B from the local series, r_m = prod over p^a || m of c_a(p) '''
    local = {p: expand(local_closed_form(n, p), max(1, B.bit_length())) for p in primerange(2, B + 1)}
    out = []
    for m in range(1, B + 1):
        v = 1
        for p, a in factorint(m).items():
            v *= local[p][a]
        out.append(v)
    return out


def dirichlet_convolve(f: list[int], g: list[int]) -> list[int]:
    ''' (f * g)(m) = sum_{d | m} f(d) g(m / d); lists are indexed from m = 1 '''
    B = len(f)
    out = [0] * B
    for d in range(1, B + 1):
        fd = f[d - 1]
        if fd:
            for k in range(d, B + 1, d):
                out[k - 1] += fd * g[k // d - 1]
    return out


def dirichlet_coefficients(n: int, B: int) -> list[int]:
    ''' coefficients of zeta(s-1) zeta(s-(n-2)) / zeta(s)^2 as Id_1 * Id_{n-2} * mu * mu '''
    id1 = [m for m in range(1, B + 1)]
    idk = [m ** (n - 2) for m in range(1, B + 1)]
    mu = [int(mobius(m)) for m in range(1, B + 1)]
    return dirichlet_convolve(dirichlet_convolve(dirichlet_convolve(id1, idk), mu), mu)


def global_coefficients(n: int, B: int) -> GlobalCoefficients:
    """r_m(M_n) for m <= B, computed by Euler product and by Dirichlet convolution.

    Only n in 2..4 is covered; the two routes must agree exactly.
    """
    if n not in (2, 3, 4):
        raise ValueError(f'global form only established for n in 2..4, got {n}')
    if B < 1:
        raise ValueError('bound must be at least 1')
    a = euler_product_coefficients(n, B)
    b = dirichlet_coefficients(n, B)
    if a != b:
        m = next(i + 1 for i, (x, y) in enumerate(zip(a, b)) if x != y)
        raise ConsistencyError(f'M_{n}: Euler product r_{m}={a[m - 1]} != Dirichlet convolution {b[m - 1]}')
    prov = {p: provenance(n, p) for p in primerange(2, B + 1)}
    return GlobalCoefficients(n, B, a, prov)
