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
from typing import List

from ..errors import Diagnostic, ValidationError, sorted_diagnostics
from .instance import ModelInstance, Ref

logger = logging.getLogger(__name__)


def primitive_matches(type_name, value):
	""" True iff value is a valid literal of the KM3 primitive type """
	if type_name == 'String':
		return isinstance(value, str)
	if type_name == 'Integer':
		return isinstance(value, int) and not isinstance(value, bool)
	if type_name == 'Boolean':
		return isinstance(value, bool)
	return False


def _containment_cycles(parent):
	""" Cycles of a child -> parent function graph, each as a sorted tuple """
	cycles = set()
	done = set()
	for start in sorted(parent):
		walk = []
		cur = start
		while cur in parent and cur not in done and cur not in walk:
			walk.append(cur)
			cur = parent[cur]
		if cur in walk:
			cycles.add(tuple(sorted(walk[walk.index(cur):])))
		done.update(walk)
	return sorted(cycles)


def check_conformance(m: ModelInstance, mm) -> List[Diagnostic]:
	"""
	Structural conformance of a model to a metamodel: element types,
	slot names, slot value types, references and the containment forest.

	:param m: ModelInstance
	:param mm: Metamodel named by m.conforms_to
	:return: sorted diagnostics, empty iff m conforms to mm
	"""
	if m.conforms_to != mm.name:
		raise ValidationError('E_NAME', 'Model {} conforms to {}, not {}'.format(m.name, m.conforms_to, mm.name),
							  path=m.name)

	diagnostics = []

	def add(code, path, message):
		diagnostics.append(Diagnostic(code, '/'.join([m.name] + path), message))

	containers = {}
	for element in m.elements:
		if mm.lookup(element.type) is None:
			add('E_TYPE', [element.id], 'Unknown type {}'.format(element.type))
			continue

		for key, value in element.slots.items():
			path = [element.id, key]
			feature = mm.feature(element.type, key)
			if feature is None:
				add('E_FEAT', path, '{} has no feature {}'.format(element.type, key))
				continue

			if feature.is_attribute:
				if not primitive_matches(feature.type_name, value):
					add('E_VAL', path, 'Expected a {} value, got {!r}'.format(feature.type_name, value))
				continue

			if isinstance(value, Ref):
				targets = [value.target]
			elif isinstance(value, tuple):
				targets = [v.target for v in value]
			else:
				add('E_VAL', path, 'Expected a reference to {}, got {!r}'.format(feature.type_name, value))
				continue

			for target in targets:
				target_element = m.get(target)
				if target_element is None:
					add('E_REF', path, 'Dangling reference to {}'.format(target))
					continue
				if mm.lookup(target_element.type) is not None and \
						not mm.is_subclass(target_element.type, feature.type_name):
					add('E_VAL', path, '{} is a {}, not a {}'.format(target, target_element.type, feature.type_name))
				if feature.container:
					containers.setdefault(target, []).append(element.id)

	single_parent = {}
	for child, parents in containers.items():
		if len(parents) > 1:
			add('E_CONTAIN', [child], 'Contained more than once (by {})'.format(', '.join(sorted(parents))))
		else:
			single_parent[child] = parents[0]

	for cycle in _containment_cycles(single_parent):
		add('E_CONTAIN', [cycle[0]], 'Containment cycle through {}'.format(', '.join(cycle)))

	if diagnostics:
		logger.debug('model %s against %s: %d diagnostics', m.name, mm.name, len(diagnostics))
	return sorted_diagnostics(diagnostics)
