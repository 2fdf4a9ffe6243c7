from .settings_class import *  # noqa: F401, F403
from .settings_proxy_class import *  # noqa: F401, F403
