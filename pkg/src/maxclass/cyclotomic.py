"""Exact p-power roots of unity, stored as exponent residues.

``RootOfUnity(p, W, e)`` denotes exp(2*pi*i*e / p^W). Nothing here touches
floating point.
"""
from __future__ import annotations

from dataclasses import dataclass

__all__ = ['RootOfUnity', 'depth', 'mul', 'pow', 'inverse', 'roots_of_power']

_builtin_pow = pow


@dataclass(frozen=True, order=True)
class RootOfUnity:
    p: int
    W: int
    e: int

    def __post_init__(self):
        if self.W < 0:
            raise ValueError('working modulus exponent must be non-negative')
        if not 0 <= self.e < self.p ** self.W:
            raise ValueError(f'exponent {self.e} outside [0, {self.p}^{self.W})')

    @classmethod
    def one(cls, p: int, W: int) -> RootOfUnity:
        return cls(p, W, 0)

    @classmethod
    def from_exponent(cls, p: int, W: int, e: int) -> RootOfUnity:
        return cls(p, W, e % p ** W)

    @property
    def modulus(self) -> int:
        return self.p ** self.W

    @property
    def depth(self) -> int:
        return depth(self)

    def is_one(self) -> bool:
        return self.e == 0

    def rescale(self, W: int) -> RootOfUnity:
        ''' the same complex number at working modulus p^W '''
        if W >= self.W:
            return RootOfUnity(self.p, W, self.e * self.p ** (W - self.W))
        shrink = self.p ** (self.W - W)
        if self.e % shrink:
            raise ValueError(f'{self} is not a p^{W}-th root of unity')
        return RootOfUnity(self.p, W, self.e // shrink)

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        return mul(self, other)

    def __pow__(self, n: int) -> RootOfUnity:
        return pow(self, n)

    def __truediv__(self, other: RootOfUnity) -> RootOfUnity:
        return mul(self, inverse(other))

    def to_complex(self) -> complex:
        import cmath
        return cmath.exp(2j * cmath.pi * self.e / self.modulus)

    def __str__(self):
        if self.e == 0:
            return '1'
        return f'z{self.p}^{self.W}^{self.e}'


def _common(x: RootOfUnity, y: RootOfUnity) -> tuple[RootOfUnity, RootOfUnity]:
    if x.p != y.p:
        raise ValueError(f'mismatched primes {x.p} and {y.p}')
    W = max(x.W, y.W)
    return x.rescale(W), y.rescale(W)


def depth(x: RootOfUnity) -> int:
    ''' the k for which x is a primitive p^k-th root of unity '''
    if x.e == 0:
        return 0
    e, v = x.e, 0
    while e % x.p == 0:
        e //= x.p
        v += 1
    return x.W - v


def mul(x: RootOfUnity, y: RootOfUnity) -> RootOfUnity:
    x, y = _common(x, y)
    return RootOfUnity(x.p, x.W, (x.e + y.e) % x.modulus)


def pow(x: RootOfUnity, n: int) -> RootOfUnity:
    return RootOfUnity(x.p, x.W, x.e * n % x.modulus)


def inverse(x: RootOfUnity) -> RootOfUnity:
    return pow(x, -1)


def roots_of_power(c: RootOfUnity, N: int) -> list[RootOfUnity]:
    """All x at the working modulus of c with x^(p^N) == c, ascending by exponent.

    Empty when c is not a p^N-th power at this modulus; the caller decides
    whether that means the working modulus is too small.
    """
    if N < 0:
        raise ValueError('level must be non-negative')
    if N > c.W:
        raise ValueError(f'working modulus exponent {c.W} is below the level {N}')
    q = c.p ** N
    if c.e % q:
        return []
    step = c.p ** (c.W - N)
    base = c.e // q
    return [RootOfUnity(c.p, c.W, base + i * step) for i in range(q)]
