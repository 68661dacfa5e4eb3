#! -*- coding: utf-8 -*-
'''balancing和concentrating两种transfer迭代

- balancing: 存在e_i >= e_j + 2时从i转1到j, sum(e_k^2)严格下降, 终点balanced
- concentrating: 从非最大分量转到最大分量, 最大分量严格上升, 终点concentrated
- 只有满足(S)/(LC)/(P)的oracle才保证取值单调, 迭代本身对任意oracle都能运行
'''

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple
from psi4opt.compositions import (CompositionSpace, ExponentVector, as_exponents, transfer, transfer_block,
                                  is_balanced, is_concentrated)
from psi4opt.snippets import InputError


__all__ = ['MoveTrace', 'balancing_step', 'balance_iterate', 'concentrating_step', 'concentrate_iterate']

Step = Tuple[ExponentVector, Fraction, Fraction]


@dataclass
class MoveTrace:
    '''从起点到终点的(向量, 取值)序列'''
    steps: List[Tuple[ExponentVector, Fraction]] = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    @property
    def vectors(self) -> List[ExponentVector]:
        return [e for e, _ in self.steps]

    @property
    def values(self) -> List[Fraction]:
        return [value for _, value in self.steps]

    @property
    def terminal(self) -> ExponentVector:
        return self.steps[-1][0]

    @property
    def final_value(self) -> Fraction:
        return self.steps[-1][1]

    def is_monotone(self, increasing:bool=True) -> bool:
        values = self.values
        if increasing:
            return all(a <= b for a, b in zip(values, values[1:]))
        return all(a >= b for a, b in zip(values, values[1:]))

    def is_consistent(self, D, space:CompositionSpace, block:bool=False) -> bool:
        '''相邻向量恰好相差一次transfer(block=True时允许移动多个单位), 且重新计算D与记录一致'''
        for e, value in self.steps:
            if e not in space or D(space, e) != value:
                return False
        for prev, curr in zip(self.vectors, self.vectors[1:]):
            diff = [b - a for a, b in zip(prev, curr)]
            changed = [x for x in diff if x != 0]
            if len(changed) != 2 or sum(changed) != 0:
                return False
            if not block and sorted(changed) != [-1, 1]:
                return False
        return True


def _check_member(space:CompositionSpace, e:Sequence[int]) -> ExponentVector:
    e = as_exponents(e)
    if e not in space:
        raise InputError(f'{e} is not in E({space.n}, {space.d})')
    return e


def _balancing_pair(e:ExponentVector, pair_policy:str) -> Optional[Tuple[int, int]]:
    if pair_policy == 'extreme':
        i = e.index(max(e))
        j = e.index(min(e))
        return (i, j) if e[i] >= e[j] + 2 else None
    elif pair_policy == 'first':
        for i, x in enumerate(e):
            for j, y in enumerate(e):
                if x >= y + 2:
                    return i, j
        return None
    raise InputError(f'unknown pair policy {pair_policy!r}, choose from extreme/first')


def balancing_step(D, space:CompositionSpace, e:Sequence[int], pair_policy:str='extreme') -> Optional[Step]:
    '''一次balancing, e已balanced时返回None

    :param pair_policy: str, 'extreme'取最大分量和最小分量(同值取最小下标); 'first'取字典序第一对e_i >= e_j + 2
    :return: (新向量, D(e), D(新向量))
    '''
    e = _check_member(space, e)
    pair = _balancing_pair(e, pair_policy)
    if pair is None:
        return None
    new = transfer(e, *pair)
    return new, D(space, e), D(space, new)


def balance_iterate(D, space:CompositionSpace, e:Sequence[int], pair_policy:str='extreme') -> MoveTrace:
    '''重复balancing直至balanced, 至多imbalance(e)步

    Example
    ----------------------
    >>> trace = balance_iterate(MultinomialOracle(), CompositionSpace(6, 3), (3, 0, 0, 0, 0, 0))
    >>> trace.terminal, trace.final_value
    ((1, 1, 1, 0, 0, 0), Fraction(6, 1))
    '''
    e = _check_member(space, e)
    trace = MoveTrace([(e, D(space, e))])
    while True:
        step = balancing_step(D, space, e, pair_policy)
        if step is None:
            break
        e, _, value = step
        trace.steps.append((e, value))
    assert is_balanced(e)
    return trace


def _concentrating_pair(e:ExponentVector) -> Optional[Tuple[int, int]]:
    i = e.index(max(e))
    for j, x in enumerate(e):
        if j != i and x >= 1:
            return j, i
    return None


def concentrating_step(D, space:CompositionSpace, e:Sequence[int], mode:str='unit') -> Optional[Step]:
    '''一次concentrating, 从最低的非零下标j转到最大分量i(同值取最小下标), e已concentrated时返回None

    :param mode: str, 'unit'每次转1; 'whole'一次把e_j全部转到i
    '''
    if mode not in ('unit', 'whole'):
        raise InputError(f'unknown concentrating mode {mode!r}, choose from unit/whole')
    e = _check_member(space, e)
    pair = _concentrating_pair(e)
    if pair is None:
        return None
    j, i = pair
    new = transfer(e, j, i) if mode == 'unit' else transfer_block(e, j, i, e[j])
    return new, D(space, e), D(space, new)


def concentrate_iterate(D, space:CompositionSpace, e:Sequence[int], mode:str='unit') -> MoveTrace:
    '''重复concentrating直至concentrated, unit模式至多d+1个点, whole模式至多n个点'''
    e = _check_member(space, e)
    trace = MoveTrace([(e, D(space, e))])
    while True:
        step = concentrating_step(D, space, e, mode)
        if step is None:
            break
        e, _, value = step
        trace.steps.append((e, value))
    assert is_concentrated(e)
    return trace
