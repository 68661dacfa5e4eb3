#! -*- coding: utf-8 -*-
'''slice sequence: 固定其余分量, 只在(i, j)两个分量间重新分配q = e_i + e_j

S_t = D(e^{(t)}), e^{(t)}_i = t, e^{(t)}_j = q - t
'''

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union
from psi4opt.compositions import CompositionSpace, ExponentVector, as_exponents
from psi4opt.snippets import SameIndexError, IndexRangeError, InputError, NonPositiveError


__all__ = ['SliceSequence', 'slice_sequence', 'is_palindromic', 'is_log_concave', 'is_unimodal_centered',
           'has_decreasing_ratios', 'has_reflected_ratios']


@dataclass(frozen=True)
class SliceSequence:
    '''S_0, ..., S_q

    :param values: Tuple[Fraction], 长度为q+1
    :param i: int, 取值t的下标
    :param j: int, 取值q-t的下标
    :param frozen: Tuple[(下标, 取值)], 其余固定分量
    '''
    values: Tuple[Fraction, ...]
    i: int = 0
    j: int = 1
    frozen: Tuple[Tuple[int, int], ...] = ()

    @property
    def q(self) -> int:
        return len(self.values) - 1

    def __len__(self):
        return len(self.values)

    def __getitem__(self, t):
        return self.values[t]

    def vector(self, t:int) -> ExponentVector:
        '''第t项对应的e^{(t)}'''
        if not 0 <= t <= self.q:
            raise IndexRangeError(f'slice position {t} out of range 0..{self.q}')
        entries: Dict[int, int] = dict(self.frozen)
        entries[self.i] = t
        entries[self.j] = self.q - t
        return tuple(entries[k] for k in range(len(entries)))

    def ratios(self) -> List[Fraction]:
        '''R_t = S_{t+1} / S_t, t = 0..q-1, 要求各项为正'''
        _check_positive(self.values)
        return [self.values[t + 1] / self.values[t] for t in range(self.q)]


def _values(S:Union[SliceSequence, Sequence]) -> Tuple[Fraction, ...]:
    if isinstance(S, SliceSequence):
        return S.values
    return tuple(Fraction(x) for x in S)


def _check_positive(values:Sequence[Fraction]):
    for t, value in enumerate(values):
        if value <= 0:
            raise NonPositiveError(f'S_{t} = {value} is not positive')


def slice_sequence(D, space:CompositionSpace, e:Sequence[int], i:int, j:int) -> SliceSequence:
    '''沿(i, j)方向计算slice sequence

    :param D: Oracle, 目标函数
    :param space: CompositionSpace, e所在的E(n, d)
    :param e: 起始向量, 只用到e_i + e_j和其余分量
    :param i: int, 下标(从0开始)
    :param j: int, 下标(从0开始)

    Example
    ----------------------
    >>> slice_sequence(MultinomialOracle(), CompositionSpace(6, 3), (3, 0, 0, 0, 0, 0), 0, 1).values
    (Fraction(1, 1), Fraction(3, 1), Fraction(3, 1), Fraction(1, 1))
    '''
    e = as_exponents(e)
    if i == j:
        raise SameIndexError(f'slice needs distinct indices, got i = j = {i + 1}')
    for idx in (i, j):
        if not 0 <= idx < len(e):
            raise IndexRangeError(f'index {idx + 1} out of range for vector of length {len(e)}')
    if e not in space:
        raise InputError(f'{e} is not in E({space.n}, {space.d})')

    q = e[i] + e[j]
    frozen = tuple((k, x) for k, x in enumerate(e) if k not in (i, j))
    values = []
    for t in range(q + 1):
        vector = list(e)
        vector[i], vector[j] = t, q - t
        values.append(D(space, tuple(vector)))
    return SliceSequence(tuple(values), i, j, frozen)


def is_palindromic(S) -> bool:
    '''S_t = S_{q-t}'''
    values = _values(S)
    return values == values[::-1]


def is_log_concave(S) -> bool:
    '''S_t^2 >= S_{t-1} * S_{t+1}, 要求各项为正'''
    values = _values(S)
    _check_positive(values)
    return all(values[t] ** 2 >= values[t - 1] * values[t + 1] for t in range(1, len(values) - 1))


def is_unimodal_centered(S) -> bool:
    '''中心之前弱递增, 中心之后弱递减'''
    values = _values(S)
    q = len(values) - 1
    for t in range(q + 1):
        if 2 * t < q and values[t] > values[t + 1]:
            return False
        if 2 * t > q and values[t] > values[t - 1]:
            return False
    return True


def has_decreasing_ratios(S) -> bool:
    values = _values(S)
    _check_positive(values)
    ratios = [values[t + 1] / values[t] for t in range(len(values) - 1)]
    return all(a >= b for a, b in zip(ratios, ratios[1:]))


def has_reflected_ratios(S) -> bool:
    '''R_{q-1-t} = 1 / R_t'''
    values = _values(S)
    _check_positive(values)
    ratios = [values[t + 1] / values[t] for t in range(len(values) - 1)]
    return all(ratios[-1 - t] * ratios[t] == 1 for t in range(len(ratios)))
