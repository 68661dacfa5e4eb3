#! -*- coding: utf-8 -*-
'''工具函数
'''

import os
import tempfile
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List
from tqdm.autonotebook import tqdm
from torch4keras.snippets import Timeit


__all__ = ['VerifySpeed', 'ordered_map', 'atomic_write_text']


class VerifySpeed(Timeit):
    '''上下文管理器，计算验证(g,n)空间的速度

    Example
    -----------------------------------------------------
    >>> from psi4opt.snippets import VerifySpeed
    >>> with VerifySpeed() as vs:
    >>>     reports = verify_range(4, 7)
    >>>     vs(len(reports))
    '''
    def __enter__(self):
        super().__enter__()
        self.template = 'Verify speed: {:.2f} spaces/s'
        return self


def ordered_map(func:Callable, items:Iterable, workers:int=1, show_progress_bar:bool=False, desc:str=None,
                total:int=None) -> List:
    '''对items逐个执行func, 结果顺序与输入一致

    :param func: 单参数函数, workers>1时需要线程安全
    :param items: 可迭代对象
    :param workers: int, 线程数, 1表示串行
    :param show_progress_bar: bool, 是否显示tqdm进度条
    '''
    items = list(items)
    total = total or len(items)
    if workers <= 1:
        return [func(item) for item in tqdm(items, total=total, desc=desc, disable=not show_progress_bar)]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        # executor.map保证返回顺序
        return list(tqdm(executor.map(func, items), total=total, desc=desc, disable=not show_progress_bar))


def atomic_write_text(path:str, text:str, encoding:str='utf-8'):
    '''先写临时文件再os.replace, 避免写到一半的文件'''
    dirname = os.path.dirname(os.path.abspath(path))
    os.makedirs(dirname, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=dirname, prefix='.psi4opt-', suffix='.tmp')
    try:
        with os.fdopen(fd, 'w', encoding=encoding, newline='\n') as f:
            f.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise
