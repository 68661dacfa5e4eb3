'''测试共用的fixture'''
import pytest
from psi4opt.descendants import build_engine


@pytest.fixture(scope='session')
def engine():
    '''整个测试过程共用cache的默认引擎'''
    return build_engine('default', verbose=0)


@pytest.fixture(scope='session')
def dvv_engine():
    '''只使用初值和DVV递推的引擎, 用于交叉验证'''
    return build_engine('dvv', verbose=0)
