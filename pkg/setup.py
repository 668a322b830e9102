# Copyright 2026 The Pole Approx Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Package Setup script for pole_approx."""

from setuptools import find_packages
from setuptools import setup

# Get version from version module.
with open('pole_approx/version.py') as fp:
  globals_dict = {}
  exec(fp.read(), globals_dict)  # pylint: disable=exec-used
__version__ = globals_dict['__version__']

# Get the long description from the README file.
with open('README.md') as fp:
  _LONG_DESCRIPTION = fp.read()

setup(
    name='pole-approx',
    version=__version__,
    author='The Pole Approx Authors',
    license='Apache 2.0',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Education',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3 :: Only',
        'Topic :: Scientific/Engineering',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    namespace_packages=[],
    install_requires=[
        'absl-py>=0.9,<3',
        'attrs>=20.3',
        'mpmath>=1.1,<2',
        'numpy>=1.17',
    ],
    python_requires='>=3.7,<4',
    packages=find_packages(),
    include_package_data=True,
    zip_safe=False,
    description=('Minimax errors of odd rational approximations of sgn(x) '
                 'with poles at zero and infinity.'),
    long_description=_LONG_DESCRIPTION,
    long_description_content_type='text/markdown',
    keywords='minimax remez rational approximation sign function asymptotics',
    entry_points={
        'console_scripts': ['pole-approx=pole_approx.cli.main:run_main'],
    },
    requires=[])
