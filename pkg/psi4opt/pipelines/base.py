from typing import Dict, Literal
from psi4opt.snippets import DottableDict
from psi4opt.descendants import DescendantEngine, build_engine


DEFAULT_CONFIG = {
    'budget': 200000,
    'depth': 60,
    'cache': None,
    'format': 'table',
    'seed': 42,
    'samples': 2000,
    'workers': 1,
    'progress': False,
    'engine': 'default',
}


class PipeLineBase:
    '''基类, 持有计算引擎和配置

    :param engine: DescendantEngine, 不传时按config.engine/config.depth构建
    :param config: dict, 覆盖DEFAULT_CONFIG中的项
    '''
    def __init__(self, engine:DescendantEngine=None, config:Dict=None, **kwargs) -> None:
        self.config = DottableDict({**DEFAULT_CONFIG, **(config or {}), **kwargs})
        self.engine = engine if engine is not None else self.build_engine(self.config.engine)

    def build_engine(self, name:Literal['default', 'recursion', 'dvv']='default') -> DescendantEngine:
        return build_engine(name, depth_limit=self.config.depth)
