from .axiom_report import *  # noqa: F401, F403
from .algebra_checks import *  # noqa: F401, F403
from .line_checks import *  # noqa: F401, F403
