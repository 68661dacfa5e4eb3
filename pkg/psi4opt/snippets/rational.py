#! -*- coding: utf-8 -*-
'''精确有理数相关的工具函数
全程使用fractions.Fraction, 不出现任何浮点数
'''

import re
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Union
from psi4opt.snippets.errors import InputError


__all__ = ['to_rational', 'format_rational', 'parse_rational', 'factorial', 'double_factorial',
           'multinomial', 'binomial']

_RATIONAL_PATTERN = re.compile(r'(-?[0-9]+)(?:/([0-9]+))?')
# cache文件: 不允许前导0
_STRICT_PATTERN = re.compile(r'(0|-?[1-9][0-9]*)(?:/([1-9][0-9]*))?')


def to_rational(value:Union[int, Fraction]) -> Fraction:
    '''int/Fraction统一转为Fraction, 拒绝float'''
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise InputError(f'expected an exact rational, got {type(value).__name__}')
    return Fraction(value)


def format_rational(value:Union[int, Fraction]) -> str:
    '''格式化为`num/den`, 整数不带`/1`

    Example
    ----------------------
    >>> format_rational(Fraction(6))
    '6'
    >>> format_rational(Fraction(1, 1152))
    '1/1152'
    '''
    value = to_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def parse_rational(text:str, strict:bool=False) -> Fraction:
    '''把`num/den`或`num`解析为Fraction

    :param text: str, 待解析文本
    :param strict: bool, 为True时要求分母为正且已约分(cache文件格式要求)
    '''
    pattern = _STRICT_PATTERN if strict else _RATIONAL_PATTERN
    match = pattern.fullmatch(text if strict else text.strip())
    if match is None:
        raise InputError(f'malformed rational {text!r}')
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise InputError(f'zero denominator in {text!r}')
    value = Fraction(numerator, denominator)
    if strict and (value.numerator, value.denominator) != (numerator, denominator):
        raise InputError(f'{text!r} is not in lowest terms')
    return value


@lru_cache(maxsize=None)
def factorial(n:int) -> int:
    '''阶乘, 带缓存'''
    if n < 0:
        raise InputError(f'factorial of negative number {n}')
    return 1 if n < 2 else n * factorial(n - 1)


@lru_cache(maxsize=None)
def double_factorial(n:int) -> int:
    '''双阶乘n!!, 约定(-1)!! = 0!! = 1'''
    if n < -1:
        raise InputError(f'double factorial undefined for {n}')
    result = 1
    for k in range(n, 1, -2):
        result *= k
    return result


def multinomial(parts:Iterable[int]) -> int:
    '''多项式系数 (sum parts)! / prod(parts!)'''
    parts = list(parts)
    result = factorial(sum(parts))
    for p in parts:
        result //= factorial(p)
    return result


def binomial(n:int, k:int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
