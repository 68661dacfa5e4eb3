#! -*- coding: utf-8 -*-
'''string方程和dilaton方程

string:  <τ_0 ∏τ_{a_j}>_g = Σ_j <τ_{a_j - 1} ∏_{i≠j} τ_{a_i}>_g,  τ_{-1} = 0
dilaton: <τ_1 ∏τ_{a_j}>_g = (2g - 2 + m) <∏τ_{a_j}>_g,  m为剩余点数
'''

from fractions import Fraction
from typing import List, Sequence, Tuple
from psi4opt.compositions import ExponentVector, as_exponents
from psi4opt.descendants.base import is_stable
from psi4opt.snippets import PreconditionError, StabilityError, IndexRangeError


__all__ = ['string_apply', 'dilaton_apply', 'string_chain']


def _remove(e:Sequence[int], i:int, value:int, name:str) -> ExponentVector:
    e = as_exponents(e)
    if not 0 <= i < len(e):
        raise IndexRangeError(f'index {i + 1} out of range for vector of length {len(e)}')
    if e[i] != value:
        raise PreconditionError(f'{name} equation needs e_{i + 1} = {value}, got {e[i]}')
    return e[:i] + e[i + 1:]


def string_apply(g:int, e:Sequence[int], i:int) -> List[ExponentVector]:
    '''去掉第i个τ_0, 返回右侧各项(n-1个分量), 值为0的τ_{-1}项直接略去

    :param g: int, 亏格
    :param e: 指数向量, 要求e_i = 0
    :param i: int, τ_0所在下标(从0开始)
    '''
    rest = _remove(e, i, 0, 'string')
    if not is_stable(g, len(rest)):
        raise StabilityError(g, len(rest), f'string equation leaves unstable (g={g}, n={len(rest)})')
    terms = []
    for j, a in enumerate(rest):
        if a >= 1:
            terms.append(rest[:j] + (a - 1,) + rest[j + 1:])
    return terms


def dilaton_apply(g:int, e:Sequence[int], i:int) -> Tuple[Fraction, ExponentVector]:
    '''去掉第i个τ_1

    :return: (factor, reduced), D(e) = factor * D(reduced)
    '''
    rest = _remove(e, i, 1, 'dilaton')
    if not is_stable(g, len(rest)):
        raise StabilityError(g, len(rest), f'dilaton equation leaves unstable (g={g}, n={len(rest)})')
    return Fraction(2 * g - 2 + len(rest)), rest


def string_chain(g:int, n:int) -> List[ExponentVector]:
    '''<τ_{3g-3+n} τ_0^{n-1}>_g = <τ_{3g-4+n} τ_0^{n-2}>_g = ... 的向量链

    g >= 1时一直降到<τ_{3g-2}>_g; g = 0时只去掉n-3个τ_0, 停在(0,0,0)
    '''
    if not is_stable(g, n) or n < 1:
        raise StabilityError(g, n)
    d = 3 * g - 3 + n
    last = 1 if g >= 1 else 3
    return [(d - (n - m),) + (0,) * (m - 1) for m in range(n, last - 1, -1)]
