#! -*- coding:utf-8 -*-
# 以亏格0, n=6为例, 展示oracle, slice sequence, balancing/concentrating迭代和验证报告的用法

from psi4opt.compositions import CompositionSpace, balanced_representative, concentrated_representative, format_vector
from psi4opt.descendants import build_engine, string_chain
from psi4opt.optimizer import (DescendantOracle, MultinomialOracle, slice_sequence, is_palindromic, is_log_concave,
                               is_unimodal_centered, balance_iterate, concentrate_iterate, brute_force_extrema,
                               check_hypotheses)
from psi4opt.pipelines import ExtremalVerifier, emit_report
from psi4opt.snippets import format_rational

# 亏格0的descendant积分就是多项式系数, 两个oracle在E(6, 3)上一致
engine = build_engine('default')
D = DescendantOracle(0, engine=engine)
space = D.space(6)
M = MultinomialOracle()
assert all(D(space, e) == M(space, e) for e in space)

# slice sequence: 在第1, 2个分量间重新分配
S = slice_sequence(D, space, (3, 0, 0, 0, 0, 0), 0, 1)
print('slice', [format_rational(v) for v in S.values], is_palindromic(S), is_log_concave(S), is_unimodal_centered(S))

# 从concentrated出发balancing, 从balanced出发concentrating
up = balance_iterate(D, space, concentrated_representative(space))
down = concentrate_iterate(D, space, balanced_representative(space))
print('balancing    ', ' -> '.join(f'{format_vector(e)}:{format_rational(v)}' for e, v in up.steps))
print('concentrating', ' -> '.join(f'{format_vector(e)}:{format_rational(v)}' for e, v in down.steps))

# 穷举极值, 并检查(S)/(LC)/(P)
ext = brute_force_extrema(D, space)
print('max', format_rational(ext.max_value), len(ext.argmax), 'min', format_rational(ext.min_value), len(ext.argmin))
print(check_hypotheses(D, space).describe())

# 最小值的string链: <τ_{3g-3+n} τ_0^{n-1}>_g = ... = <τ_{3g-2}>_g
print([format_rational(engine.descendant(2, e)) for e in string_chain(2, 4)])

# 对一个范围做验证并输出csv报告
verifier = ExtremalVerifier(engine, budget=50000)
print(emit_report(verifier.verify_range(2, 4), 'csv'))
