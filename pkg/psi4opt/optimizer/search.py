#! -*- coding: utf-8 -*-
'''穷举E(n, d)求极值, 以及(S)/(LC)/(P)三个条件的检查
'''

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple
from psi4opt.compositions import (CompositionSpace, ExponentVector, canonical_key, orbit_representatives, transfer,
                                  format_vector)
from psi4opt.snippets import BudgetExceededError, log_warn, ordered_map


__all__ = ['DEFAULT_BUDGET', 'Extrema', 'HypothesisReport', 'check_budget', 'evaluate_space',
           'brute_force_extrema', 'check_hypotheses']

DEFAULT_BUDGET = 200000


@dataclass
class Extrema:
    '''极值及全部取到极值的向量(按枚举顺序)'''
    max_value: Fraction
    argmax: List[ExponentVector]
    min_value: Fraction
    argmin: List[ExponentVector]

    @property
    def is_plateau(self) -> bool:
        '''整个空间取值相同'''
        return self.max_value == self.min_value


@dataclass
class HypothesisReport:
    '''(S)/(LC)/(P)检查结果, 失败时记录第一个反例

    - symmetry_witness: (e, e'), 同一轨道上取值不同
    - log_concavity_witness: (e, i, j), 下标从0开始
    - positivity_witness: e, D(e) <= 0
    '''
    symmetric: bool = True
    log_concave: bool = True
    positive: bool = True
    symmetry_witness: Optional[Tuple[ExponentVector, ExponentVector]] = None
    log_concavity_witness: Optional[Tuple[ExponentVector, int, int]] = None
    positivity_witness: Optional[ExponentVector] = None
    lc_mode: str = 'exhaustive'
    checked: Dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.symmetric and self.log_concave and self.positive

    def describe(self) -> str:
        '''单行描述, 下标从1开始'''
        parts = [f'S={"yes" if self.symmetric else "no"}', f'LC={"yes" if self.log_concave else "no"}',
                 f'P={"yes" if self.positive else "no"}']
        if self.symmetry_witness is not None:
            a, b = self.symmetry_witness
            parts.append(f'S fails at {format_vector(a)} vs {format_vector(b)}')
        if self.log_concavity_witness is not None:
            e, i, j = self.log_concavity_witness
            parts.append(f'LC fails at {format_vector(e)} i={i + 1} j={j + 1}')
        if self.positivity_witness is not None:
            parts.append(f'P fails at {format_vector(self.positivity_witness)}')
        return '; '.join(parts)


def check_budget(space:CompositionSpace, budget:Optional[int]=DEFAULT_BUDGET):
    '''超出budget时拒绝, budget为None表示不限制'''
    if budget is not None and space.size > budget:
        log_warn(f'Refuse E({space.n}, {space.d}): size {space.size} exceeds budget {budget}')
        raise BudgetExceededError(space.size, budget)


def evaluate_space(D, space:CompositionSpace, budget:Optional[int]=DEFAULT_BUDGET, workers:int=1,
                   show_progress_bar:bool=False) -> Dict[ExponentVector, Fraction]:
    '''对E(n, d)全部向量求值, 返回值按枚举顺序排列'''
    check_budget(space, budget)
    vectors = list(space)
    values = ordered_map(lambda e: D(space, e), vectors, workers=workers, show_progress_bar=show_progress_bar,
                         desc=f'E({space.n},{space.d})')
    return dict(zip(vectors, values))


def brute_force_extrema(D, space:CompositionSpace, budget:Optional[int]=DEFAULT_BUDGET, workers:int=1,
                        show_progress_bar:bool=False) -> Extrema:
    '''穷举求最大最小值和全部取到的向量

    :param D: Oracle
    :param space: CompositionSpace
    :param budget: int, 空间大小上限, 超出时抛BudgetExceededError
    :param workers: int, 并发求值的线程数, 结果与顺序无关

    Example
    ----------------------
    >>> ext = brute_force_extrema(MultinomialOracle(), CompositionSpace(6, 3))
    >>> ext.max_value, len(ext.argmax), ext.min_value, len(ext.argmin)
    (Fraction(6, 1), 20, Fraction(1, 1), 6)
    '''
    values = evaluate_space(D, space, budget, workers, show_progress_bar)
    max_value = max(values.values())
    min_value = min(values.values())
    return Extrema(max_value=max_value, argmax=[e for e, v in values.items() if v == max_value],
                   min_value=min_value, argmin=[e for e, v in values.items() if v == min_value])


def _lc_violation(values:Dict[ExponentVector, Fraction], e:ExponentVector) -> Optional[Tuple[int, int]]:
    '''D(e)^2 >= D(e-δ_i+δ_j) * D(e+δ_i-δ_j), 要求e_i, e_j >= 1'''
    center = values[e] ** 2
    for i, x in enumerate(e):
        for j, y in enumerate(e):
            if i >= j or x < 1 or y < 1:
                continue
            if center < values[transfer(e, i, j)] * values[transfer(e, j, i)]:
                return i, j
    return None


def check_hypotheses(D, space:CompositionSpace, budget:Optional[int]=DEFAULT_BUDGET, workers:int=1,
                     show_progress_bar:bool=False) -> HypothesisReport:
    '''检查(S)对称, (LC)log-concave, (P)严格为正

    (S)成立时(LC)只需在轨道代表元上检查, 否则在全部向量上检查
    '''
    values = evaluate_space(D, space, budget, workers, show_progress_bar)
    report = HypothesisReport()

    representative_value: Dict[ExponentVector, Tuple[ExponentVector, Fraction]] = {}
    for e, value in values.items():
        key = canonical_key(e)
        if key not in representative_value:
            representative_value[key] = (e, value)
        elif report.symmetric and representative_value[key][1] != value:
            report.symmetric = False
            report.symmetry_witness = (representative_value[key][0], e)

    for e, value in values.items():
        if value <= 0:
            report.positive = False
            report.positivity_witness = e
            break

    if report.symmetric:
        report.lc_mode = 'orbits'
        candidates = list(orbit_representatives(space))
    else:
        candidates = list(values)
    for e in candidates:
        violation = _lc_violation(values, e)
        if violation is not None:
            report.log_concave = False
            report.log_concavity_witness = (e,) + violation
            break

    report.checked = {'vectors': len(values), 'orbits': len(representative_value), 'lc_candidates': len(candidates)}
    if not report.passed:
        log_warn(f'{getattr(D, "name", D)} on E({space.n}, {space.d}): {report.describe()}')
    return report
