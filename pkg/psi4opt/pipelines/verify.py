'''极值定理的验证pipeline
   对(g, n)穷举E(n, 3g-3+n), 检查最大值在balanced向量上取到, 最小值在concentrated轨道上取到且等于1/(24^g g!)
   调用方式类似`ExtremalVerifier().verify_range(4, 7)`
'''
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple
import numpy as np
from tqdm.autonotebook import tqdm
from psi4opt.compositions import (CompositionSpace, ExponentVector, balanced_representative,
                                  concentrated_representative, canonical_key, orbit_size, orbit_representatives,
                                  format_vector, is_balanced)
from psi4opt.descendants import (DescendantEngine, ModuliIndex, is_stable, one_point_value, dilaton_regime_identity,
                                 string_apply, dilaton_apply, string_chain)
from psi4opt.optimizer import (DescendantOracle, HypothesisReport, brute_force_extrema, check_hypotheses, check_budget,
                               balance_iterate, concentrate_iterate)
from psi4opt.snippets import RefusalError, BudgetExceededError, VerifySpeed, format_rational, log_info, log_warn
from .base import PipeLineBase


__all__ = ['IdentityCheck', 'IdentityReport', 'VerificationReport', 'ExtremalVerifier', 'verify_extremal',
           'verify_range', 'verify_identities', 'get_default_verifier']

PASS, FAIL, REFUSED = 'PASS', 'FAIL', 'REFUSED'
IDENTITY_NAMES = ('string', 'dilaton', 'one_point', 'dilaton_regime', 'concentrated_chain')


@dataclass
class IdentityCheck:
    '''单个恒等式的检查结果, applicable=False表示该(g, n)不适用'''
    name: str
    applicable: bool = False
    checked: int = 0
    passed: bool = True
    witness: Optional[str] = None

    def record(self, ok:bool, witness:str):
        self.applicable = True
        self.checked += 1
        if not ok and self.passed:
            self.passed = False
            self.witness = witness


@dataclass
class IdentityReport:
    g: int
    n: int
    seed: int
    mode: str
    vectors: int
    checks: Dict[str, IdentityCheck] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks.values())

    def first_failure(self) -> Optional[str]:
        for name in IDENTITY_NAMES:
            check = self.checks[name]
            if not check.passed:
                return f'{name}: {check.witness}'
        return None

    def to_dict(self) -> Dict:
        return {'g': self.g, 'n': self.n, 'seed': self.seed, 'mode': self.mode, 'vectors': self.vectors,
                'checks': {name: {'applicable': c.applicable, 'checked': c.checked, 'passed': c.passed,
                                  'witness': c.witness} for name, c in self.checks.items()}}


@dataclass
class VerificationReport:
    '''单个(g, n)的验证结果

    argmax/argmin只记录轨道: [(canonical_key, orbit_size), ...]
    '''
    g: int
    n: int
    d: int
    space_size: int
    status: str = PASS
    max_value: Optional[Fraction] = None
    min_value: Optional[Fraction] = None
    argmax: List[Tuple[ExponentVector, int]] = field(default_factory=list)
    argmin: List[Tuple[ExponentVector, int]] = field(default_factory=list)
    balanced_value: Optional[Fraction] = None
    concentrated_value: Optional[Fraction] = None
    plateau_max: bool = False
    plateau_min: bool = False
    balance_trace_ok: Optional[bool] = None
    concentrate_trace_ok: Optional[bool] = None
    hypotheses: Optional[HypothesisReport] = None
    identities: Optional[IdentityReport] = None
    required: Optional[int] = None
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def argmax_key(self) -> Optional[ExponentVector]:
        '''balanced轨道在argmax中时优先展示'''
        keys = [key for key, _ in self.argmax]
        return next((key for key in keys if is_balanced(key)), keys[0] if keys else None)

    @property
    def argmin_key(self) -> Optional[ExponentVector]:
        keys = [key for key, _ in self.argmin]
        concentrated = (self.d,) + (0,) * (self.n - 1)
        return concentrated if concentrated in keys else (keys[0] if keys else None)

    def fail(self, message:str):
        if self.status == PASS:
            self.status = FAIL
            self.counterexample = message

    def to_dict(self) -> Dict:
        def fmt(value):
            return None if value is None else format_rational(value)
        hyp = self.hypotheses
        return {
            'g': self.g, 'n': self.n, 'd': self.d, 'space_size': self.space_size, 'status': self.status,
            'max': fmt(self.max_value), 'min': fmt(self.min_value),
            'argmax': [[format_vector(key), size] for key, size in self.argmax],
            'argmin': [[format_vector(key), size] for key, size in self.argmin],
            'balanced_value': fmt(self.balanced_value), 'concentrated_value': fmt(self.concentrated_value),
            'plateau_max': self.plateau_max, 'plateau_min': self.plateau_min,
            'balance_trace_ok': self.balance_trace_ok, 'concentrate_trace_ok': self.concentrate_trace_ok,
            'S': None if hyp is None else hyp.symmetric, 'LC': None if hyp is None else hyp.log_concave,
            'P': None if hyp is None else hyp.positive,
            'identities': None if self.identities is None else self.identities.to_dict(),
            'required': self.required, 'counterexample': self.counterexample,
        }


def _orbits(vectors:Sequence[ExponentVector]) -> List[Tuple[ExponentVector, int]]:
    keys = sorted({canonical_key(e) for e in vectors}, reverse=True)
    return [(key, orbit_size(key)) for key in keys]


class ExtremalVerifier(PipeLineBase):
    '''极值定理验证, 所有(g, n)共用同一个引擎的cache

    :param engine: DescendantEngine
    :param config: dict, budget/seed/samples/workers/progress等, 见DEFAULT_CONFIG

    Example
    ----------------------
    >>> verifier = ExtremalVerifier(budget=100000)
    >>> report = verifier.verify_extremal(0, 6)
    >>> report.status, report.max_value, report.min_value
    ('PASS', Fraction(6, 1), Fraction(1, 1))
    '''
    def __init__(self, engine=None, config:Dict=None, **kwargs) -> None:
        super().__init__(engine, config, **kwargs)
        self._reference = None

    @property
    def reference(self) -> DescendantEngine:
        '''只用初值和DVV递推的独立引擎, 恒等式左边由它计算, 右边由self.engine计算'''
        if self._reference is None:
            self._reference = self.build_engine('dvv')
        return self._reference

    def oracle(self, g:int) -> DescendantOracle:
        return DescendantOracle(g, engine=self.engine)

    # ======================== 恒等式 ========================
    def _sample_vectors(self, space:CompositionSpace, samples:int, seed:int) -> Tuple[List[ExponentVector], str]:
        if space.size <= samples:
            return list(space), 'exhaustive'
        rng = np.random.default_rng(seed)
        chosen = set(int(k) for k in rng.choice(space.size, size=samples, replace=False))
        return [e for k, e in enumerate(space) if k in chosen], 'sampled'

    def verify_identities(self, g:int, n:int, samples:int=None, vectors:Sequence[ExponentVector]=None) -> IdentityReport:
        '''检查string/dilaton方程, 单点值, dilaton区间恒等式以及concentrated链
        各恒等式的左边由reference引擎计算, 右边由self.engine计算

        :param samples: int, 超过该数量时按seed无放回抽样, 默认取config.samples
        :param vectors: 指定要检查的向量, 传入时不再抽样
        '''
        idx = ModuliIndex(g, n)
        space = CompositionSpace(n, idx.d)
        seed = self.config.seed
        if vectors is None:
            vectors, mode = self._sample_vectors(space, samples or self.config.samples, seed)
        else:
            vectors, mode = list(vectors), 'orbits'
        report = IdentityReport(g, n, seed, mode, len(vectors), {name: IdentityCheck(name) for name in IDENTITY_NAMES})
        # 左边用独立的DVV引擎
        lhs_value, value = self.reference.correlator, self.engine.correlator

        if is_stable(g, n - 1):
            for e in vectors:
                lhs = lhs_value(g, e)
                for i, x in enumerate(e):
                    if x == 0:
                        rhs = sum((value(g, t) for t in string_apply(g, e, i)), Fraction(0))
                        report.checks['string'].record(lhs == rhs, f'{format_vector(e)} i={i + 1}: {lhs} != {rhs}')
                    elif x == 1:
                        factor, reduced = dilaton_apply(g, e, i)
                        rhs = factor * value(g, reduced)
                        report.checks['dilaton'].record(lhs == rhs, f'{format_vector(e)} i={i + 1}: {lhs} != {rhs}')

        if n == 1:
            lhs, rhs = lhs_value(g, (3 * g - 2,)), one_point_value(g)
            report.checks['one_point'].record(lhs == rhs, f'<τ_{3 * g - 2}>_{g} = {lhs} != {rhs}')

        if g >= 2 and n >= 3 * g - 3:
            lhs_vector, factor, rhs_vector = dilaton_regime_identity(g, n)
            lhs, rhs = lhs_value(g, lhs_vector), factor * value(g, rhs_vector)
            report.checks['dilaton_regime'].record(lhs == rhs, f'{format_vector(lhs_vector)}: {lhs} != {rhs}')

        expected = one_point_value(g) if g >= 1 else Fraction(1)
        for e in string_chain(g, n):
            chain_value = lhs_value(g, e)
            report.checks['concentrated_chain'].record(chain_value == expected,
                                                       f'{format_vector(e)}: {chain_value} != {expected}')
        return report

    # ======================== 极值 ========================
    def verify_extremal(self, g:int, n:int) -> VerificationReport:
        '''穷举验证单个(g, n), 超出budget时抛BudgetExceededError'''
        idx = ModuliIndex(g, n)
        space = CompositionSpace(n, idx.d)
        config = self.config
        check_budget(space, config.budget)
        D = self.oracle(g)
        report = VerificationReport(g, n, idx.d, space.size)

        ext = brute_force_extrema(D, space, config.budget, config.workers, config.progress)
        report.max_value, report.min_value = ext.max_value, ext.min_value
        report.argmax, report.argmin = _orbits(ext.argmax), _orbits(ext.argmin)
        report.plateau_max, report.plateau_min = len(report.argmax) > 1, len(report.argmin) > 1
        if report.plateau_max or report.plateau_min:
            log_warn(f'Plateau at g={g} n={n}: {len(report.argmax)} max orbits, {len(report.argmin)} min orbits')

        balanced, concentrated = balanced_representative(space), concentrated_representative(space)
        report.balanced_value, report.concentrated_value = D(space, balanced), D(space, concentrated)
        report.hypotheses = check_hypotheses(D, space, config.budget, config.workers, config.progress)

        up = balance_iterate(D, space, concentrated)
        down = concentrate_iterate(D, space, balanced)
        report.balance_trace_ok = up.is_monotone(increasing=True) and up.final_value == ext.max_value
        report.concentrate_trace_ok = down.is_monotone(increasing=False) and down.final_value == ext.min_value

        report.identities = self.verify_identities(g, n, vectors=list(orbit_representatives(space)))

        expected_min = one_point_value(g) if g >= 1 else Fraction(1)
        if report.balanced_value != ext.max_value:
            worst = ext.argmax[0]
            report.fail(f'max {format_rational(ext.max_value)} at {format_vector(worst)} exceeds balanced value '
                        f'{format_rational(report.balanced_value)}')
        if report.concentrated_value != ext.min_value:
            report.fail(f'min {format_rational(ext.min_value)} at {format_vector(ext.argmin[0])} is below concentrated '
                        f'value {format_rational(report.concentrated_value)}')
        if ext.min_value != expected_min:
            report.fail(f'min {format_rational(ext.min_value)} differs from {format_rational(expected_min)}')
        if not report.hypotheses.passed:
            report.fail(report.hypotheses.describe())
        if not report.balance_trace_ok:
            report.fail(f'balancing from {format_vector(concentrated)} ends at {format_rational(up.final_value)}')
        if not report.concentrate_trace_ok:
            report.fail(f'concentrating from {format_vector(balanced)} ends at {format_rational(down.final_value)}')
        if not report.identities.passed:
            report.fail(report.identities.first_failure())
        return report

    def verify_range(self, g_max:int, n_max:int) -> List[VerificationReport]:
        '''对全部稳定的(g, n), g <= g_max, n <= n_max逐个验证, 拒绝的空间记为REFUSED'''
        indices = [(g, n) for g in range(g_max + 1) for n in range(1, n_max + 1) if is_stable(g, n)]
        reports = []
        with VerifySpeed() as vs:
            for g, n in tqdm(indices, desc='Verify', disable=not self.config.progress):
                try:
                    reports.append(self.verify_extremal(g, n))
                except RefusalError as e:
                    d = 3 * g - 3 + n
                    report = VerificationReport(g, n, d, CompositionSpace(n, d).size, status=REFUSED,
                                                counterexample=str(e))
                    report.required = e.required if isinstance(e, BudgetExceededError) else None
                    log_warn(f'Refused g={g} n={n}: {e}')
                    reports.append(report)
            vs(max(len(reports), 1))
        passed = sum(report.passed for report in reports)
        log_info(f'Verified {passed}/{len(reports)} spaces with g <= {g_max}, n <= {n_max}; engine {self.engine.stats()}')
        return reports


_default_verifier = None


def get_default_verifier() -> ExtremalVerifier:
    global _default_verifier
    if _default_verifier is None:
        from psi4opt.descendants import get_default_engine
        _default_verifier = ExtremalVerifier(get_default_engine())
    return _default_verifier


def verify_extremal(g:int, n:int) -> VerificationReport:
    return get_default_verifier().verify_extremal(g, n)


def verify_range(g_max:int, n_max:int) -> List[VerificationReport]:
    return get_default_verifier().verify_range(g_max, n_max)


def verify_identities(g:int, n:int, samples:int=2000) -> IdentityReport:
    return get_default_verifier().verify_identities(g, n, samples)
