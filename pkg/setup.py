#!/usr/bin/env python
# -*- coding: utf-8 -*-
import os
import sys

from setuptools import setup

sys.path.append(os.getcwd())

# Load version from homshift/__version__.py
about = {}
ver_path = os.path.join('homshift', '__version__.py')
with open(ver_path) as f:
    for line in f:
        if line.startswith('__version__'):
            exec(line, about)

# Read the contents of README file
this_directory = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(this_directory, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

# Alread in requirements.txt
requirements = [
    "numpy>=1.20.0",
    "scipy>=1.7.3",
    "pandas>=1.3.0",
    "sympy>=1.9",
]

packages = ['homshift',
            'homshift.core',
            'homshift.io',
            'homshift.property',
            'homshift.tools']

setup(
    name='homshift',
    description='Homological shift ideals of cover ideals of clique-whiskered graphs',
    long_description=long_description,
    long_description_content_type='text/markdown',
    version=about['__version__'],
    zip_safe=False,
    classifiers=['Development Status :: 3 - Alpha',
                 'Natural Language :: English',
                 'License :: OSI Approved :: GNU General Public License (GPL)',
                 'Programming Language :: Python',
                 'Topic :: Scientific/Engineering',
                 'Topic :: Scientific/Engineering :: Mathematics'],
    packages=packages,
    install_requires=requirements,
    extras_require={'test': ['pytest>=6.0', 'hypothesis>=6.0']},
    python_requires='>=3.7',
    entry_points={'console_scripts': ['homshift=homshift.cli:main']},
)
