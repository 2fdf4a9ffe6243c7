from .formula import *  # noqa: F401, F403
from .parser import *  # noqa: F401, F403
from .semantics import *  # noqa: F401, F403
