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

import logging
import os
from collections import OrderedDict

from .. import metamodelpath
from ..km3 import parse_km3_file
from ..model.registry import register_metamodel

logger = logging.getLogger(__name__)

CORE = 'CoreMM'
ASPECT = 'AspectMM'
WEAVING = 'AWM'
WOVEN = 'WovenMM'

BUILTIN_FILES = OrderedDict([
	(CORE, 'core.km3'),
	(ASPECT, 'aspect.km3'),
	(WEAVING, 'awm.km3'),
	(WOVEN, 'woven.km3'),
])

_builtins = None


def builtin_metamodels():
	"""
	The shipped metamodels, parsed once and registered by name.

	:return: dict {CoreMM, AspectMM, AWM, WovenMM} -> Metamodel
	"""
	global _builtins
	if _builtins is None:
		out = OrderedDict()
		for name, filename in BUILTIN_FILES.items():
			mm = parse_km3_file(os.path.join(metamodelpath, filename))
			assert mm.name == name, 'Shipped {} defines package {}'.format(filename, mm.name)
			out[name] = register_metamodel(mm)
		logger.debug('loaded builtin metamodels: %s', ', '.join(out))
		_builtins = out
	return dict(_builtins)


def builtin(name):
	return builtin_metamodels()[name]
