import importlib.util
import os
import sys
from pathlib import Path
from typing import Union, Optional

__all__ = ['Module', 'load_module_from_path']


Module = type(sys)


def load_module_from_path(path: Union[Path, str],
                          module_name: Optional[str] = None) -> Module:
    """
    Load a single Python module by its path, even if it's not importable from
    the `PYTHONPATH`.

    Used for loading the user settings in `.aristo/user_settings.py`.

    :param path: The full path to the module
    :param module_name: The name to give to the loaded module. By default it
    uses the filename
    """
    if isinstance(path, str):
        path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"No module at '{path}'")
    if module_name is None:
        module_name, _ = os.path.splitext(path.name)
    spec = importlib.util.spec_from_file_location(module_name, path)
    module = importlib.util.module_from_spec(spec)
    # noinspection PyUnresolvedReferences
    spec.loader.exec_module(module)

    return module
