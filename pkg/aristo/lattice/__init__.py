from .heyting_algebra import *  # noqa: F401, F403
from .catalogue import *  # noqa: F401, F403
