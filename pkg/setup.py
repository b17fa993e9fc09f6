# aspecis, a model weaving toolbox for cooperative requirements.
#
# This file is part of aspecis.
#
# aspecis is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License version 3 as
# published by the Free Software Foundation.
#
# aspecis is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with aspecis. If not, see <http://www.gnu.org/licenses/>.

from setuptools import setup, find_packages


# Setup for Python3
setup(name='aspecis',
	  version='0.1',
	  description='Weaving of aspectual requirements into core models',
	  url='',
	  license='GPLv3',
	  packages=find_packages(exclude=['tests']),
	  python_requires='>=3.8',
	  install_requires = ['pyyaml', 'lark'],
	  extras_require={'tests': ['pytest', 'hypothesis']},
	  entry_points={'console_scripts': ['aspecis=aspecis.cli:main']},
	  zip_safe=False)
