from .report import *  # noqa: F401, F403
from .emit import *  # noqa: F401, F403
