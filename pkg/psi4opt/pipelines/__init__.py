'''
主要提供end2end的验证流程
'''

from .base import PipeLineBase, DEFAULT_CONFIG
from .verify import *
from .report import *
