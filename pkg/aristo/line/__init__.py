from .rationals import *  # noqa: F401, F403
from .polynomial import *  # noqa: F401, F403
from .open_region import *  # noqa: F401, F403
from .piecewise import *  # noqa: F401, F403
from .sampling import *  # noqa: F401, F403
