#! -*- coding: utf-8 -*-
'''weak composition (exponent vector) 的枚举和操作

E(n, d) = {e = (e_1, ..., e_n) : e_k >= 0, sum(e) = d}
- 所有函数都是纯函数, 输入输出都是tuple, 可并发调用
- python接口的下标从0开始, 文档和报告中从1开始
'''

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple
from psi4opt.snippets import (NegativeEntryError, EmptyVectorError, SameIndexError, IndexRangeError,
                              EmptyEntryError, InputError, binomial, factorial)


__all__ = ['ExponentVector', 'CompositionSpace', 'as_exponents', 'enumerate_compositions', 'is_balanced',
           'is_concentrated', 'balanced_representative', 'concentrated_representative', 'transfer',
           'transfer_block', 'imbalance', 'canonical_key', 'orbit_size', 'orbit_representatives', 'format_vector']

ExponentVector = Tuple[int, ...]


def as_exponents(e:Sequence[int]) -> ExponentVector:
    '''校验并转为tuple'''
    e = tuple(e)
    if len(e) == 0:
        raise EmptyVectorError('exponent vector must have at least one entry')
    for x in e:
        if isinstance(x, bool) or not isinstance(x, int):
            raise InputError(f'exponent entries must be integers, got {x!r}')
        if x < 0:
            raise NegativeEntryError(f'negative exponent {x} in {e}')
    return e


@dataclass(frozen=True)
class CompositionSpace:
    '''E(n, d)

    :param n: int, 分量个数, n >= 1
    :param d: int, 总次数, d >= 0
    '''
    n: int
    d: int

    def __post_init__(self):
        if self.n < 1:
            raise EmptyVectorError(f'n must be positive, got {self.n}')
        if self.d < 0:
            raise InputError(f'd must be nonnegative, got {self.d}')

    @property
    def size(self) -> int:
        '''binomial(d+n-1, n-1)'''
        return binomial(self.d + self.n - 1, self.n - 1)

    def __iter__(self) -> Iterator[ExponentVector]:
        return enumerate_compositions(self)

    def __len__(self) -> int:
        return self.size

    def __contains__(self, e) -> bool:
        try:
            e = as_exponents(e)
        except InputError:
            return False
        return len(e) == self.n and sum(e) == self.d


def _compositions(n:int, d:int) -> Iterator[ExponentVector]:
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(n - 1, d - first):
            yield (first,) + rest


def enumerate_compositions(space:CompositionSpace) -> Iterator[ExponentVector]:
    '''按字典序降序枚举E(n, d), 每个向量恰好出现一次

    Example
    ----------------------
    >>> list(enumerate_compositions(CompositionSpace(2, 2)))
    [(2, 0), (1, 1), (0, 2)]
    '''
    return _compositions(space.n, space.d)


def is_balanced(e:Sequence[int]) -> bool:
    '''任意两个分量相差不超过1'''
    e = as_exponents(e)
    return max(e) - min(e) <= 1


def is_concentrated(e:Sequence[int]) -> bool:
    '''至多一个分量非零'''
    e = as_exponents(e)
    return sum(1 for x in e if x != 0) <= 1


def balanced_representative(space:CompositionSpace) -> ExponentVector:
    '''d = a*n + b, 前b个分量为a+1, 后n-b个为a'''
    a, b = divmod(space.d, space.n)
    return (a + 1,) * b + (a,) * (space.n - b)


def concentrated_representative(space:CompositionSpace) -> ExponentVector:
    '''(d, 0, ..., 0)'''
    return (space.d,) + (0,) * (space.n - 1)


def transfer_block(e:Sequence[int], i:int, j:int, amount:int) -> ExponentVector:
    '''从第i个分量移动amount到第j个分量

    :param i: int, 转出下标(从0开始)
    :param j: int, 转入下标(从0开始)
    :param amount: int, 移动量, >= 1
    '''
    e = as_exponents(e)
    if i == j:
        raise SameIndexError(f'transfer needs distinct indices, got i = j = {i + 1}')
    for idx in (i, j):
        if not 0 <= idx < len(e):
            raise IndexRangeError(f'index {idx + 1} out of range for vector of length {len(e)}')
    if amount < 1:
        raise InputError(f'transfer amount must be positive, got {amount}')
    if e[i] < amount:
        raise EmptyEntryError(f'entry e_{i + 1} = {e[i]} cannot give {amount}')
    out = list(e)
    out[i] -= amount
    out[j] += amount
    return tuple(out)


def transfer(e:Sequence[int], i:int, j:int) -> ExponentVector:
    '''e - δ_i + δ_j'''
    return transfer_block(e, i, j, 1)


def imbalance(e:Sequence[int]) -> int:
    '''sum(e_k^2), balancing每一步严格下降'''
    return sum(x * x for x in as_exponents(e))


def canonical_key(e:Sequence[int]) -> ExponentVector:
    '''降序排列, 置换轨道的唯一代表'''
    return tuple(sorted(as_exponents(e), reverse=True))


def orbit_size(e:Sequence[int]) -> int:
    '''置换轨道大小 n! / prod(m_v!)'''
    e = as_exponents(e)
    size = factorial(len(e))
    for multiplicity in Counter(e).values():
        size //= factorial(multiplicity)
    return size


def _partitions(d:int, parts:int, largest:int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if d == 0:
            yield ()
        return
    for first in range(min(d, largest), -1, -1):
        if first * parts < d:
            break
        for rest in _partitions(d - first, parts - 1, first):
            yield (first,) + rest


def orbit_representatives(space:CompositionSpace) -> Iterator[ExponentVector]:
    '''枚举所有canonical_key(降序), 即d拆成至多n个部分的整数分拆(补0)'''
    return _partitions(space.d, space.n, space.d)


def format_vector(e:Sequence[int]) -> str:
    '''(1,1,1,0,0,0)'''
    return '(' + ','.join(str(x) for x in e) + ')'
