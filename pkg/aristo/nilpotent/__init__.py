from .truncated_poly import *  # noqa: F401, F403
from .derivatives import *  # noqa: F401, F403
