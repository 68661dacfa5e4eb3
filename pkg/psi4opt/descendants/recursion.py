#! -*- coding: utf-8 -*-
'''Witten-Kontsevich定理的DVV(Virasoro)递推

记pivot处为τ_{k+1}, 其余为τ_{d_1}...τ_{d_n}:

<τ_{k+1} ∏τ_{d_j}>_g = 1/(2k+3)!! * [
    Σ_j (2k+2d_j+1)!!/(2d_j-1)!! <τ_{k+d_j} ∏_{i≠j}τ_{d_i}>_g
    + 1/2 Σ_{a+b=k-1} (2a+1)!!(2b+1)!! ( <τ_a τ_b ∏τ_{d_j}>_{g-1}
                                         + Σ_{g'+g''=g, I⊔J} <τ_a τ_I>_{g'} <τ_b τ_J>_{g''} ) ]

约定(-1)!! = 1, 不稳定的correlator为0, 初值<τ_0^3>_0 = 1, <τ_1>_1 = 1/24
'''

from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple
from psi4opt.compositions import ExponentVector, as_exponents
from psi4opt.descendants.base import is_stable
from psi4opt.snippets import PreconditionError, IndexRangeError, double_factorial


__all__ = ['DVVTerm', 'dvv_terms', 'dvv_prefactor']

# (系数, [(亏格, 指数向量), ...]), 多个因子相乘
DVVTerm = Tuple[Fraction, List[Tuple[int, ExponentVector]]]


def dvv_prefactor(k:int) -> Fraction:
    return Fraction(1, double_factorial(2 * k + 3))


def dvv_terms(g:int, e:Sequence[int], pivot:int) -> Iterator[DVVTerm]:
    '''展开一次DVV递推, 只产生次数匹配且稳定的项(不含1/(2k+3)!!)

    :param g: int, 亏格
    :param e: 指数向量
    :param pivot: int, 作为τ_{k+1}的下标(从0开始), 要求e_pivot >= 1
    '''
    e = as_exponents(e)
    if not 0 <= pivot < len(e):
        raise IndexRangeError(f'pivot {pivot + 1} out of range for vector of length {len(e)}')
    if e[pivot] < 1:
        raise PreconditionError(f'DVV pivot needs e_{pivot + 1} >= 1, got {e[pivot]}')
    k = e[pivot] - 1
    rest = e[:pivot] + e[pivot + 1:]
    n = len(rest)

    # 第一项: τ_{k+1}与τ_{d_j}合并
    for j, dj in enumerate(rest):
        coefficient = Fraction(double_factorial(2 * k + 2 * dj + 1), double_factorial(2 * dj - 1))
        merged = rest[:j] + (k + dj,) + rest[j + 1:]
        if is_stable(g, len(merged)):
            yield coefficient, [(g, merged)]

    if k == 0:
        return

    # 第二项: 亏格减一
    if g >= 1 and is_stable(g - 1, n + 2):
        for a in range(k):
            b = k - 1 - a
            coefficient = Fraction(double_factorial(2 * a + 1) * double_factorial(2 * b + 1), 2)
            yield coefficient, [(g - 1, (a, b) + rest)]

    # 第三项: 曲线分裂, a由次数唯一确定
    for mask in range(1 << n):
        part_i = tuple(rest[m] for m in range(n) if mask >> m & 1)
        part_j = tuple(rest[m] for m in range(n) if not mask >> m & 1)
        for g1 in range(g + 1):
            g2 = g - g1
            if not (is_stable(g1, len(part_i) + 1) and is_stable(g2, len(part_j) + 1)):
                continue
            a = 3 * g1 - 2 + len(part_i) - sum(part_i)
            b = k - 1 - a
            if a < 0 or b < 0:
                continue
            coefficient = Fraction(double_factorial(2 * a + 1) * double_factorial(2 * b + 1), 2)
            yield coefficient, [(g1, (a,) + part_i), (g2, (b,) + part_j)]
