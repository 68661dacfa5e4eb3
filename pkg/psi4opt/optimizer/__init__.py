from psi4opt.optimizer.oracles import *
from psi4opt.optimizer.slices import *
from psi4opt.optimizer.moves import *
from psi4opt.optimizer.search import *
from psi4opt.snippets import InputError


ORACLES = {
    'multinomial': MultinomialOracle,
    'product': ProductOracle,
    'descendant': DescendantOracle,
    'function': FunctionOracle,
}


def build_oracle(name:str, **kwargs) -> Oracle:
    '''根据名称构建oracle

    :param name: str, multinomial/product/descendant/function
    :param kwargs: 对应oracle类的初始化参数

    Example
    ----------------------
    >>> D = build_oracle('descendant', g=1)
    >>> D(D.space(2), (2, 0))
    Fraction(1, 24)
    '''
    if name not in ORACLES:
        raise InputError(f'unknown oracle {name!r}, choose from {sorted(ORACLES)}')
    return ORACLES[name](**kwargs)
