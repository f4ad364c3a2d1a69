from .correlator import *
from .cyclic_probe import *
from .entities import *
from .flow_builder import *
from .limits import *
from .metric import *
from .reporter import *
from .tensor_lab import *
