from .finite_space import *  # noqa: F401, F403
from .point_map import *  # noqa: F401, F403
from .enumeration import *  # noqa: F401, F403
