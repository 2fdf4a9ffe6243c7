from . import setup  # noqa: F401
