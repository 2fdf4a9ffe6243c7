#!/usr/bin/env python
import os
from pathlib import Path

import setuptools

from aristo.version import ARISTO_PACKAGE_VERSION_LABEL

current_directory = Path(os.path.dirname(os.path.realpath(__file__)))


setuptools.setup(
    name='aristo',
    version=ARISTO_PACKAGE_VERSION_LABEL,
    description='Pointless topology workbench: Heyting algebras, finite '
                'spaces, the line, sheaves and nilpotents',
    long_description=current_directory.joinpath('README.md').read_text(),
    long_description_content_type='text/markdown',
    packages=setuptools.find_packages(include=("aristo*",)),
    package_data={
        'aristo.settings': ['example_settings/*.py'],
    },
    install_requires=current_directory.joinpath('requirements.txt')
    .read_text().splitlines(),
    scripts=[
        'scripts/aristo',
    ],
    python_requires='>=3.8',
    license='MIT License',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Education',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Typing :: Typed',
    ],
)
