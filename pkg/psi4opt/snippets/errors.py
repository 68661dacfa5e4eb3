#! -*- coding: utf-8 -*-
'''异常定义

InputError系列对应cli的exit 2, RefusalError/CacheConflictError对应exit 1
'''

__all__ = [
    'Psi4OptError', 'InputError', 'NegativeEntryError', 'EmptyVectorError', 'SameIndexError', 'IndexRangeError',
    'EmptyEntryError', 'StabilityError', 'DegreeMismatchError', 'PreconditionError', 'NonPositiveError',
    'UnknownFormatError', 'ConfigError', 'RefusalError', 'BudgetExceededError', 'DepthLimitError',
    'CacheError', 'CacheFormatError', 'CacheConflictError'
    ]


class Psi4OptError(Exception):
    '''psi4opt所有异常的基类'''


class InputError(Psi4OptError, ValueError):
    '''非法输入'''


class NegativeEntryError(InputError):
    '''ExponentVector中存在负数'''


class EmptyVectorError(InputError):
    '''ExponentVector长度为0, 即n=0'''


class SameIndexError(InputError):
    '''transfer时i == j'''


class IndexRangeError(InputError, IndexError):
    '''下标越界'''


class EmptyEntryError(InputError):
    '''transfer时e_i不足'''


class StabilityError(InputError):
    '''(g, n)不满足2g-2+n>0'''
    def __init__(self, g, n, message=None):
        self.g, self.n = g, n
        super().__init__(message or f'(g={g}, n={n}) is unstable: 2g-2+n must be positive')


class DegreeMismatchError(InputError):
    '''闭式公式要求的次数不匹配'''


class PreconditionError(InputError):
    '''string/dilaton等方程的前置条件不满足'''


class NonPositiveError(InputError):
    '''log-concave检查时出现非正数'''


class UnknownFormatError(InputError):
    '''未知的report格式'''


class ConfigError(InputError):
    '''配置项非法'''


class RefusalError(Psi4OptError, RuntimeError):
    '''超出预算/深度而拒绝计算'''


class BudgetExceededError(RefusalError):
    '''穷举空间超出budget'''
    def __init__(self, required, budget):
        self.required, self.budget = required, budget
        super().__init__(f'space size {required} exceeds budget {budget}')


class DepthLimitError(RefusalError):
    '''维数d超出depth limit'''
    def __init__(self, dimension, limit):
        self.dimension, self.limit = dimension, limit
        super().__init__(f'dimension {dimension} exceeds depth limit {limit}')


class CacheError(Psi4OptError):
    '''cache文件相关异常'''


class CacheFormatError(CacheError, ValueError):
    '''cache文件格式错误'''
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        super().__init__(message if lineno is None else f'line {lineno}: {message}')


class CacheConflictError(CacheError):
    '''导入的记录与已缓存的值冲突'''
    def __init__(self, key, cached, incoming):
        self.key, self.cached, self.incoming = key, cached, incoming
        super().__init__(f'conflicting record for {key}: cached {cached}, incoming {incoming}')
