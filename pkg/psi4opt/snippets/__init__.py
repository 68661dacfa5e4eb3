from torch4keras.snippets import log_info, log_warn, log_error, DottableDict, Timeit
from psi4opt.snippets.errors import *
from psi4opt.snippets.rational import *
from psi4opt.snippets.misc import *
