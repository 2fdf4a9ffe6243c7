import inspect
import os
from pathlib import Path
from typing import Optional


__all__ = ['get_current_directory']


def get_current_directory(module_file_name: Optional[str] = None) -> Path:
    """
    Get the directory of the module where this is called from. Usually called as
    `get_current_directory()`, or `get_current_directory(__file__)`.

    >>> str(get_current_directory())
    '.../utils'
    """
    if module_file_name is None:
        caller_frame, *_ = inspect.stack()[1]
        module_file_name = caller_frame.f_globals.get('__file__', None)
        if not module_file_name:
            raise Exception(
                "Could not get the file name of the calling module "
                "automatically - call with `__file__` as the only parameter")
    return Path(os.path.dirname(os.path.realpath(module_file_name)))
