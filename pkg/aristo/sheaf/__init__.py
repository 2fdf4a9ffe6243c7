from .presheaf import *  # noqa: F401, F403
from .gluing import *  # noqa: F401, F403
from .stalk import *  # noqa: F401, F403
from .hull import *  # noqa: F401, F403
from .constructors import *  # noqa: F401, F403
