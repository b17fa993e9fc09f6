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
from dataclasses import dataclass
from typing import List

from ..errors import ValidationError
from ..model.identity import SEPARATOR, index_of
from ..model.instance import ModelInstance
from .pattern import Pattern

logger = logging.getLogger(__name__)

POINTCUT_TYPES = ('call', 'execution')

CLASS_TYPE = 'Class'
OPERATIONS_SLOT = 'operations'


@dataclass(frozen=True)
class JoinPoint(object):
	""" A class-owned operation, at call or at execution """
	class_id: str
	operation_id: str
	kind: str

	@property
	def class_name(self):
		return self.class_id.rsplit(SEPARATOR, 1)[-1]

	@property
	def operation_name(self):
		return self.operation_id.rsplit(SEPARATOR, 1)[-1]

	def sort_key(self):
		return (self.operation_id, self.class_id, self.kind)

	def __str__(self):
		return self.operation_id


def check_pointcut_type(type_pointcut, path=''):
	if type_pointcut not in POINTCUT_TYPES:
		raise ValidationError('E_PCTYPE', 'Pointcut type {!r} is not one of {}'.format(
			type_pointcut, ', '.join(POINTCUT_TYPES)), path=path)


def enumerate_joinpoints(core: ModelInstance, kind) -> List[JoinPoint]:
	"""
	One join point per (Class, Operation) containment pair.

	:param core: ModelInstance conforming to CoreMM (or WovenMM)
	:param kind: call | execution
	:return: join points sorted by operation identifier
	"""
	check_pointcut_type(kind, core.name)
	index = index_of(core)
	out = []
	for cls in core.elements_of_type(CLASS_TYPE):
		class_id = index.name_path(cls.id)
		for op_id in cls.refs(OPERATIONS_SLOT):
			if core.get(op_id) is None:
				continue
			out.append(JoinPoint(class_id, index.name_path(op_id), kind))
	return sorted(out, key=JoinPoint.sort_key)


def match_pointcut(core: ModelInstance, type_pointcut, pattern: Pattern) -> List[JoinPoint]:
	"""
	Join points of `core` selected by a pointcut.

	:param core: ModelInstance conforming to CoreMM
	:param type_pointcut: call | execution
	:param pattern: Pattern
	:return: join points sorted by operation identifier
	"""
	out = [jp for jp in enumerate_joinpoints(core, type_pointcut)
		   if pattern.matches(jp.class_name, jp.operation_name)]
	logger.debug('%s %s over %s: %d join points', type_pointcut, pattern, core.name, len(out))
	return out
