#! -*- coding: utf-8 -*-
'''带缓存的descendant integral计算引擎

分派顺序(越便宜越靠前):
1. sum(e) != 3g-3+n 返回0
2. g = 0 使用闭式公式(可关闭)
3. 初值<τ_0^3>_0 = 1, <τ_1>_1 = 1/24
4. 存在e_i = 0且(g, n-1)稳定: string方程
5. 存在e_i = 1且(g, n-1)稳定: dilaton方程
6. 否则在最大分量上做DVV递推
'''

import os
import threading
from fractions import Fraction
from typing import Dict, Sequence, Tuple
from psi4opt.compositions import as_exponents
from psi4opt.descendants.base import DescendantKey, is_stable
from psi4opt.descendants.cache import Records, dump_records, load_records
from psi4opt.descendants.formulas import genus0_closed
from psi4opt.descendants.recursion import dvv_terms, dvv_prefactor
from psi4opt.descendants.reductions import string_apply, dilaton_apply
from psi4opt.snippets import (StabilityError, DepthLimitError, CacheConflictError, ConfigError,
                              log_info, log_error, atomic_write_text)


__all__ = ['DescendantEngine']

BASE_VALUES = {
    (0, (0, 0, 0)): Fraction(1),
    (1, (1,)): Fraction(1, 24),
}


class DescendantEngine:
    '''计算<τ_{e_1}...τ_{e_n}>_g的精确值

    :param depth_limit: int, 允许的最大维数d = 3g-3+n, 默认60
    :param use_genus0_closed: bool, 亏格0是否使用闭式公式, 默认True
    :param use_reductions: bool, 是否使用string/dilaton方程, 默认True; 为False时只用初值+DVV递推
    :param verbose: int, 是否打印cache导入导出等信息

    cache以(g, 降序指数)为key; 读不加锁, 写加锁, 同一个key重复计算的结果相同, 后写覆盖即可
    '''
    def __init__(self, depth_limit:int=60, use_genus0_closed:bool=True, use_reductions:bool=True, verbose:int=1):
        if depth_limit < 1:
            raise ConfigError(f'depth limit must be positive, got {depth_limit}')
        self.depth_limit = depth_limit
        self.use_genus0_closed = use_genus0_closed
        self.use_reductions = use_reductions
        self.verbose = verbose
        self._cache: Dict[Tuple[int, Tuple[int, ...]], Fraction] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0
        self.dvv_expansions = 0

    def __len__(self):
        return len(self._cache)

    def __contains__(self, key:DescendantKey):
        return (key.g, key.exponents) in self._cache

    # ======================== 对外接口 ========================
    def descendant(self, g:int, e:Sequence[int]) -> Fraction:
        '''<τ_{e_1}...τ_{e_n}>_g, 不稳定的(g, n)报错, 次数不匹配返回0'''
        e = as_exponents(e)
        n = len(e)
        if g < 0 or not is_stable(g, n):
            raise StabilityError(g, n)
        self._check_depth(3 * g - 3 + n)
        return self.correlator(g, e)

    __call__ = descendant

    def compute_with_cache(self, key:DescendantKey) -> Fraction:
        '''按DescendantKey查询, 未命中则计算并写入cache'''
        self._check_depth(key.d)
        if sum(key.exponents) != key.d:
            return Fraction(0)
        return self._lookup(key.g, key.exponents)

    def correlator(self, g:int, e:Sequence[int]) -> Fraction:
        '''递推内部使用: 不稳定或有负分量时返回0'''
        n = len(e)
        if g < 0 or not is_stable(g, n) or min(e, default=0) < 0:
            return Fraction(0)
        if sum(e) != 3 * g - 3 + n:
            return Fraction(0)
        return self._lookup(g, tuple(sorted(e, reverse=True)))

    def dvv_expand(self, g:int, e:Sequence[int], pivot:int) -> Fraction:
        '''在指定pivot上做一次DVV展开, 子项从引擎获取; 结果与pivot无关'''
        e = as_exponents(e)
        if g < 0 or not is_stable(g, len(e)):
            raise StabilityError(g, len(e))
        terms = list(dvv_terms(g, e, pivot))
        k = e[pivot] - 1
        total = Fraction(0)
        for coefficient, factors in terms:
            term = coefficient
            for factor_g, factor_e in factors:
                if term == 0:
                    break
                term *= self.correlator(factor_g, factor_e)
            total += term
        with self._lock:
            self.dvv_expansions += 1
        return dvv_prefactor(k) * total

    def clear_cache(self):
        with self._lock:
            self._cache.clear()
            self.hits = self.misses = self.dvv_expansions = 0

    def stats(self) -> Dict[str, int]:
        return {'records': len(self._cache), 'hits': self.hits, 'misses': self.misses,
                'dvv_expansions': self.dvv_expansions}

    # ======================== cache导入导出 ========================
    def records(self) -> Records:
        return dict(self._cache)

    def merge(self, records:Records) -> int:
        '''合并记录, 先整体检查冲突, 有冲突则一条也不写入

        :return: int, 新增的记录数
        '''
        for raw_key, value in records.items():
            cached = self._cache.get(raw_key)
            if cached is not None and cached != value:
                log_error(f'Cache conflict at g={raw_key[0]} e={raw_key[1]}: cached {cached}, incoming {value}')
                raise CacheConflictError(raw_key, cached, value)
        with self._lock:
            added = sum(1 for raw_key in records if raw_key not in self._cache)
            self._cache.update(records)
        return added

    def export_cache(self, path:str) -> int:
        records = self.records()
        atomic_write_text(path, dump_records(records))
        if self.verbose:
            log_info(f'Export {len(records)} cache records to {path}')
        return len(records)

    def import_cache(self, path:str) -> int:
        with open(path, 'r', encoding='utf-8', newline='') as f:
            records = load_records(f.read())
        added = self.merge(records)
        if self.verbose:
            log_info(f'Import {len(records)} cache records from {path} ({added} new)')
        return added

    def load_if_exists(self, path:str) -> int:
        return self.import_cache(path) if os.path.exists(path) else 0

    # ======================== 内部计算 ========================
    def _check_depth(self, d:int):
        if d > self.depth_limit:
            raise DepthLimitError(d, self.depth_limit)

    def _lookup(self, g:int, key:Tuple[int, ...]) -> Fraction:
        value = self._cache.get((g, key))
        if value is not None:
            with self._lock:
                self.hits += 1
            return value
        value = self._compute(g, key)
        with self._lock:
            self.misses += 1
            self._cache[(g, key)] = value
        return value

    def _compute(self, g:int, key:Tuple[int, ...]) -> Fraction:
        n = len(key)
        if sum(key) != 3 * g - 3 + n:
            return Fraction(0)
        if self.use_genus0_closed and g == 0:
            return genus0_closed(key)
        if (g, key) in BASE_VALUES:
            return BASE_VALUES[(g, key)]

        if self.use_reductions and is_stable(g, n - 1):
            # key降序, 0和1都在末尾
            if key[-1] == 0:
                return sum((self.correlator(g, term) for term in string_apply(g, key, n - 1)), Fraction(0))
            if 1 in key:
                factor, reduced = dilaton_apply(g, key, key.index(1))
                return factor * self.correlator(g, reduced)

        # 最大分量作为pivot, 降序后即下标0
        return self.dvv_expand(g, key, 0)
