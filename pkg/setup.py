#!/usr/bin/env python

import glob
from setuptools import setup

from reekit.version import version

setup(name = 'reekit',
    version = version,
    license = 'GPLv2',
    author = 'The reekit developers',
    description = 'Computational toolkit for the small Ree groups 2G2(q) and their unitals.',
    long_description = \
        'Reekit builds the small Ree groups 2G2(q), q = 3^(2e+1), as 7x7 matrices over\n'
        'GF(q), enumerates the Ree unital they act on, runs executable checks of the\n'
        'lemmas used to study their generating tuples, and walks and counts Nielsen\n'
        'move graphs of small groups.  The included command is called reekit.',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v2 (GPLv2)',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires = '>=3.8',
    install_requires = ['numpy', 'galois'],
    scripts = ['bin/reekit'],
    packages = ['reekit', 'reekit.commands'],
    data_files = [
		  ('share/doc/packages/reekit', glob.glob('doc/*.txt')),
	         ]
    )
