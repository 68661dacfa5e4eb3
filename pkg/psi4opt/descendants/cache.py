#! -*- coding: utf-8 -*-
'''cache文件的读写格式

每行一条记录: `g|e_1,e_2,...,e_n|numerator/denominator`
- 指数降序, ASCII十进制整数且无前导0, 分母为正且已约分
- 指数和不等于3g-3+n时取值只能为0
- 各行按字典序排序, 结尾必须有换行
- 示例: `2|4|1/1152`
'''

import re
from fractions import Fraction
from typing import Dict, Iterable, Tuple
from psi4opt.descendants.base import DescendantKey
from psi4opt.snippets import CacheFormatError, CacheConflictError, InputError, format_rational, parse_rational


__all__ = ['format_record', 'parse_record', 'dump_records', 'load_records']

Records = Dict[Tuple[int, Tuple[int, ...]], Fraction]
_INT_PATTERN = re.compile(r'0|[1-9][0-9]*')


def format_record(g:int, exponents:Iterable[int], value:Fraction) -> str:
    return f'{g}|{",".join(str(x) for x in exponents)}|{format_rational(value)}'


def _parse_int(text:str, lineno:int) -> int:
    if _INT_PATTERN.fullmatch(text) is None:
        raise CacheFormatError(f'expected a nonnegative decimal integer, got {text!r}', lineno)
    return int(text)


def parse_record(line:str, lineno:int=None) -> Tuple[DescendantKey, Fraction]:
    '''解析一行记录, 任何不合规都抛CacheFormatError'''
    fields = line.split('|')
    if len(fields) != 3:
        raise CacheFormatError(f'expected 3 fields separated by "|", got {len(fields)}', lineno)
    g = _parse_int(fields[0], lineno)
    exponents = tuple(_parse_int(x, lineno) for x in fields[1].split(','))
    try:
        key = DescendantKey(g, exponents)
    except InputError as e:
        raise CacheFormatError(str(e), lineno) from e
    value_text = fields[2]
    if value_text != value_text.strip():
        raise CacheFormatError(f'unexpected whitespace in {value_text!r}', lineno)
    try:
        value = parse_rational(value_text, strict=True)
    except InputError as e:
        raise CacheFormatError(str(e), lineno) from e
    if value_text.endswith('/1'):
        raise CacheFormatError(f'integers must be written without "/1", got {value_text!r}', lineno)
    if value != 0 and sum(key.exponents) != key.d:
        raise CacheFormatError(f'degree {sum(key.exponents)} differs from 3g-3+n = {key.d}, value must be 0', lineno)
    return key, value


def dump_records(records:Records) -> str:
    '''records转为文件内容'''
    lines = sorted(format_record(g, exponents, value) for (g, exponents), value in records.items())
    return ''.join(line + '\n' for line in lines)


def load_records(text:str) -> Records:
    '''解析文件内容, 文件内部的重复记录若取值不同视为冲突'''
    if text and not text.endswith('\n'):
        raise CacheFormatError('cache file must end with a newline')
    records = {}
    for lineno, line in enumerate(text.split('\n')[:-1], start=1):
        key, value = parse_record(line, lineno)
        raw_key = (key.g, key.exponents)
        if raw_key in records and records[raw_key] != value:
            raise CacheConflictError(raw_key, records[raw_key], value)
        records[raw_key] = value
    return records
