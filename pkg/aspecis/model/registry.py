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

from __future__ import annotations

import logging

logger = logging.getLogger(__name__)

# Registering metamodels, by name
metamodels = {}


def register_metamodel(mm, replace=False):
	if mm.name in metamodels and not replace:
		assert metamodels[mm.name] == mm, 'Another metamodel is already registered as {}'.format(mm.name)
		return metamodels[mm.name]
	metamodels[mm.name] = mm
	logger.debug('registered metamodel %s', mm.name)
	return mm


def get_metamodel(name):
	"""
	Metamodel registered under `name`, loading the shipped ones on first use.

	:return: Metamodel or None
	"""
	mm = metamodels.get(name)
	if mm is None:
		from ..awm.builtin import builtin_metamodels
		builtin_metamodels()
		mm = metamodels.get(name)
	return mm
