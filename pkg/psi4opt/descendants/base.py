#! -*- coding: utf-8 -*-
'''moduli空间的下标(g, n)以及cache的key
'''

from dataclasses import dataclass
from typing import Sequence
from psi4opt.compositions import ExponentVector, as_exponents
from psi4opt.snippets import StabilityError, InputError


__all__ = ['ModuliIndex', 'DescendantKey', 'is_stable', 'dimension']


def is_stable(g:int, n:int) -> bool:
    '''2g - 2 + n > 0'''
    return g >= 0 and n >= 0 and 2 * g - 2 + n > 0


@dataclass(frozen=True)
class ModuliIndex:
    '''稳定的(g, n), 维数d = 3g - 3 + n'''
    g: int
    n: int

    def __post_init__(self):
        if self.g < 0 or self.n < 1 or not is_stable(self.g, self.n):
            raise StabilityError(self.g, self.n)

    @property
    def d(self) -> int:
        return 3 * self.g - 3 + self.n


def dimension(idx:ModuliIndex) -> int:
    '''dim M_{g,n} = 3g - 3 + n'''
    if not isinstance(idx, ModuliIndex):
        idx = ModuliIndex(*idx)
    return idx.d


@dataclass(frozen=True)
class DescendantKey:
    '''cache的key: 亏格 + 降序排列的指数(对称性保证只依赖multiset)'''
    g: int
    exponents: ExponentVector

    def __post_init__(self):
        exponents = as_exponents(self.exponents)
        if any(exponents[k] < exponents[k + 1] for k in range(len(exponents) - 1)):
            raise InputError(f'key exponents must be non-increasing, got {exponents}')
        if self.g < 0 or not is_stable(self.g, len(exponents)):
            raise StabilityError(self.g, len(exponents))
        object.__setattr__(self, 'exponents', exponents)

    @classmethod
    def from_vector(cls, g:int, e:Sequence[int]) -> 'DescendantKey':
        return cls(g, tuple(sorted(as_exponents(e), reverse=True)))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def d(self) -> int:
        return 3 * self.g - 3 + self.n
