#! -*- coding: utf-8 -*-
'''优化问题中的目标函数 D: E(n, d) -> Q

优化器本身不假设(S)/(LC)/(P)成立, 由check_hypotheses检查
'''

import threading
from fractions import Fraction
from typing import Callable, Sequence
from psi4opt.compositions import CompositionSpace, ExponentVector, as_exponents, canonical_key
from psi4opt.snippets import InputError, to_rational, multinomial


__all__ = ['Oracle', 'MultinomialOracle', 'ProductOracle', 'DescendantOracle', 'FunctionOracle']


class Oracle:
    '''Oracle基类, 子类实现evaluate

    :param name: str, 名称, 用于报告
    :param symmetric: bool, 声明对称时按canonical_key缓存, 否则按原向量缓存
    '''
    name = 'oracle'
    symmetric = False

    def __init__(self, name:str=None, symmetric:bool=None):
        if name is not None:
            self.name = name
        if symmetric is not None:
            self.symmetric = symmetric
        self._memo = {}
        self._lock = threading.Lock()

    def evaluate(self, space:CompositionSpace, e:ExponentVector) -> Fraction:
        raise NotImplementedError

    def __call__(self, space:CompositionSpace, e:Sequence[int]) -> Fraction:
        e = as_exponents(e)
        key = (space.n, space.d, canonical_key(e) if self.symmetric else e)
        value = self._memo.get(key)
        if value is None:
            value = to_rational(self.evaluate(space, e))
            with self._lock:
                self._memo[key] = value
        return value

    def __repr__(self):
        return f'{self.__class__.__name__}(name={self.name!r})'


class MultinomialOracle(Oracle):
    '''D(e) = d! / prod(e_k!), d = n - 3时即亏格0的闭式公式'''
    name = 'multinomial'
    symmetric = True

    def evaluate(self, space, e):
        return Fraction(multinomial(e))


class ProductOracle(Oracle):
    '''D(e) = scale * prod f(e_k), f为正的log-concave序列时满足(S)/(LC)/(P)

    :param weights: Sequence[Fraction], f(0), f(1), ...
    :param scale: Fraction, 整体系数
    '''
    name = 'product'
    symmetric = True

    def __init__(self, weights:Sequence, scale=1, name:str=None):
        super().__init__(name)
        self.weights = tuple(to_rational(w) for w in weights)
        self.scale = to_rational(scale)

    def evaluate(self, space, e):
        if max(e) >= len(self.weights):
            raise InputError(f'entry {max(e)} exceeds the {len(self.weights)} available weights')
        value = self.scale
        for x in e:
            value *= self.weights[x]
        return value

    @classmethod
    def random(cls, rng, length:int, max_int:int=50) -> 'ProductOracle':
        '''随机生成log-concave权重: 相邻比值单调不增

        :param rng: numpy.random.Generator
        :param length: int, 权重个数, 需大于最大分量
        '''
        ratios = sorted((Fraction(int(rng.integers(1, max_int)), int(rng.integers(1, max_int)))
                         for _ in range(length - 1)), reverse=True)
        weights = [Fraction(1)]
        for r in ratios:
            weights.append(weights[-1] * r)
        return cls(weights, scale=int(rng.integers(1, 10)), name='product(random)')


class DescendantOracle(Oracle):
    '''D(e) = <τ_{e_1}...τ_{e_n} ∏τ_tail>_g

    :param g: int, 亏格
    :param tail: Sequence[int], 固定追加的插入, 默认为空即原始的descendant函数
    :param engine: DescendantEngine, 默认使用进程共享的引擎
    '''
    symmetric = True

    def __init__(self, g:int, tail:Sequence[int]=(), engine=None, name:str=None):
        if engine is None:
            from psi4opt.descendants import get_default_engine
            engine = get_default_engine()
        self.g = g
        self.tail = tuple(tail)
        self.engine = engine
        super().__init__(name or (f'descendant(g={g})' if not self.tail else f'descendant(g={g}, tail={self.tail})'))

    def space(self, n:int) -> CompositionSpace:
        '''n个自由分量对应的E(n, d)'''
        d = 3 * self.g - 3 + n + len(self.tail) - sum(self.tail)
        if d < 0:
            raise InputError(f'tail {self.tail} leaves negative degree for n={n}')
        return CompositionSpace(n, d)

    def evaluate(self, space, e):
        return self.engine.descendant(self.g, tuple(e) + self.tail)


class FunctionOracle(Oracle):
    '''任意函数包装成oracle, 默认不对称

    Example
    ----------------------
    >>> D = FunctionOracle(lambda e: 1 + e[0], name='1+e_1')
    '''
    name = 'function'

    def __init__(self, func:Callable[[ExponentVector], object], name:str=None, symmetric:bool=False):
        super().__init__(name, symmetric)
        self.func = func

    def evaluate(self, space, e):
        return self.func(e)
