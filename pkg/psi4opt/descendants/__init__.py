from psi4opt.descendants.base import *
from psi4opt.descendants.formulas import *
from psi4opt.descendants.reductions import *
from psi4opt.descendants.recursion import *
from psi4opt.descendants.cache import *
from psi4opt.descendants.engine import *
from psi4opt.compositions import CompositionSpace, balanced_representative
from psi4opt.snippets import InputError
from fractions import Fraction
from typing import Sequence
import threading


ENGINES = {
    'default': {},
    'recursion': {'use_genus0_closed': False},
    'dvv': {'use_genus0_closed': False, 'use_reductions': False},
}
_default_engine = None
_default_lock = threading.Lock()


def build_engine(name:str='default', **kwargs) -> DescendantEngine:
    '''根据名称构建计算引擎

    :param name: str, 'default'使用全部快速路径; 'recursion'关闭亏格0闭式公式; 'dvv'只使用初值和DVV递推
    :param depth_limit: int, 允许的最大维数, 默认60
    :param verbose: int, 是否打印日志

    Example
    ----------------------
    >>> engine = build_engine('recursion')
    >>> engine.descendant(0, (1, 1, 1, 0, 0, 0))
    Fraction(6, 1)
    '''
    if name not in ENGINES:
        raise InputError(f'unknown engine {name!r}, choose from {sorted(ENGINES)}')
    config = dict(ENGINES[name])
    config.update(kwargs)
    return DescendantEngine(**config)


def get_default_engine() -> DescendantEngine:
    '''进程内共享的默认引擎'''
    global _default_engine
    if _default_engine is None:
        with _default_lock:
            if _default_engine is None:
                _default_engine = build_engine('default')
    return _default_engine


def set_default_engine(engine:DescendantEngine):
    global _default_engine
    with _default_lock:
        _default_engine = engine


def descendant(g:int, e:Sequence[int]) -> Fraction:
    '''<τ_{e_1}...τ_{e_n}>_g, 使用默认引擎'''
    return get_default_engine().descendant(g, e)


def compute_with_cache(key:DescendantKey) -> Fraction:
    return get_default_engine().compute_with_cache(key)


def dvv_expand(g:int, e:Sequence[int], pivot:int) -> Fraction:
    return get_default_engine().dvv_expand(g, e, pivot)


def balanced_value(g:int, n:int, engine:DescendantEngine=None) -> Fraction:
    '''balanced向量的取值<τ_a^{n-b} τ_{a+1}^b>_g, 仅用于列表展示'''
    idx = ModuliIndex(g, n)
    engine = engine or get_default_engine()
    return engine.descendant(g, balanced_representative(CompositionSpace(n, idx.d)))
