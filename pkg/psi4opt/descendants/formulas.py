#! -*- coding: utf-8 -*-
'''闭式公式
1. 亏格0: <τ_{e_1}...τ_{e_n}>_0 = (n-3)! / (e_1!...e_n!)
2. 单点: <τ_{3g-2}>_g = 1/(24^g g!)
3. dilaton区间: <τ_1^{n-(3g-3)} τ_2^{3g-3}>_g = (2g-3+n)!/(5g-6)! <τ_2^{3g-3}>_g
'''

from fractions import Fraction
from typing import Sequence, Tuple
from psi4opt.compositions import ExponentVector, as_exponents
from psi4opt.snippets import DegreeMismatchError, StabilityError, PreconditionError, factorial


__all__ = ['genus0_closed', 'one_point_value', 'dilaton_regime_identity']


def genus0_closed(e:Sequence[int]) -> Fraction:
    '''亏格0的多项式系数公式, 要求n >= 3且sum(e) = n - 3'''
    e = as_exponents(e)
    n = len(e)
    if n < 3:
        raise StabilityError(0, n)
    if sum(e) != n - 3:
        raise DegreeMismatchError(f'genus 0 closed formula needs sum(e) = {n - 3}, got {sum(e)}')
    denominator = 1
    for x in e:
        denominator *= factorial(x)
    return Fraction(factorial(n - 3), denominator)


def one_point_value(g:int) -> Fraction:
    '''<τ_{3g-2}>_g = 1/(24^g g!), 也是concentrated向量的取值'''
    if g < 1:
        raise StabilityError(g, 1, f'one-point value needs g >= 1, got g={g}')
    return Fraction(1, 24 ** g * factorial(g))


def dilaton_regime_identity(g:int, n:int) -> Tuple[ExponentVector, Fraction, ExponentVector]:
    '''g >= 2且n >= 3g-3时, 反复使用dilaton方程去掉所有τ_1

    :return: (lhs, factor, rhs), 满足D(lhs) = factor * D(rhs)
    '''
    if g < 2 or n < 3 * g - 3:
        raise PreconditionError(f'dilaton regime needs g >= 2 and n >= 3g-3, got g={g}, n={n}')
    lhs = (1,) * (n - (3 * g - 3)) + (2,) * (3 * g - 3)
    rhs = (2,) * (3 * g - 3)
    factor = Fraction(factorial(2 * g - 3 + n), factorial(5 * g - 6))
    return lhs, factor, rhs
