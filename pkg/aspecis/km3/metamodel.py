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
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from ..errors import Diagnostic, ValidationError, sorted_diagnostics

logger = logging.getLogger(__name__)

PRIMITIVE_TYPES = ('String', 'Integer', 'Boolean')

ATTRIBUTE = 'attribute'
REFERENCE = 'reference'


@dataclass(frozen=True)
class Feature(object):
	kind: str
	name: str
	type_name: str
	container: bool = False
	line: Optional[int] = field(default=None, compare=False, repr=False)

	@property
	def is_attribute(self):
		return self.kind == ATTRIBUTE

	@property
	def is_reference(self):
		return self.kind == REFERENCE


@dataclass(frozen=True)
class MetaClass(object):
	name: str
	super_name: Optional[str] = None
	features: Tuple[Feature, ...] = ()
	line: Optional[int] = field(default=None, compare=False, repr=False)

	def own_feature(self, name):
		for feature in self.features:
			if feature.name == name:
				return feature
		return None


@dataclass(frozen=True)
class Metamodel(object):
	"""
	A KM3 package: named, ordered classes with single inheritance.
	Immutable once built; lookups are indexed lazily.
	"""
	name: str
	classes: Tuple[MetaClass, ...] = ()

	@cached_property
	def class_map(self) -> Dict[str, MetaClass]:
		out = {}
		for cls in self.classes:
			# duplicates are reported by validate_metamodel, first one wins
			out.setdefault(cls.name, cls)
		return out

	@cached_property
	def _closure(self):
		return {}

	def lookup(self, name):
		return self.class_map.get(name)

	def chain(self, name):
		"""
		Class names from `name` up to its root, stopping before a cycle
		or an unresolved superclass.

		:param name: class name
		:return: list of class names, subclass-first
		"""
		out = []
		cls = self.class_map.get(name)
		while cls is not None and cls.name not in out:
			out.append(cls.name)
			if cls.super_name is None:
				break
			cls = self.class_map.get(cls.super_name)
		return out

	def features(self, name) -> Tuple[Feature, ...]:
		if name not in self._closure:
			feats = []
			for cls_name in reversed(self.chain(name)):
				feats += list(self.class_map[cls_name].features)
			self._closure[name] = tuple(feats)
		return self._closure[name]

	def feature(self, class_name, feature_name):
		for feature in self.features(class_name):
			if feature.name == feature_name:
				return feature
		return None

	def is_subclass(self, sub, sup):
		return sup in self.chain(sub)

	def subclasses_of(self, name):
		return [cls.name for cls in self.classes if self.is_subclass(cls.name, name)]


def lookup_class(mm: Metamodel, name: str) -> Optional[MetaClass]:
	""" Returns the class or None, never raises for absence """
	return mm.lookup(name)


def features_of(mm: Metamodel, class_name: str) -> Tuple[Feature, ...]:
	"""
	Features of a class and of all its transitive superclasses,
	superclass-first.
	"""
	if mm.lookup(class_name) is None:
		raise ValidationError('E_NOCLASS', 'No class {} in metamodel {}'.format(class_name, mm.name),
							  path='{}/{}'.format(mm.name, class_name))
	return mm.features(class_name)


def _cycles(mm):
	cycles = []
	seen = set()
	for cls in mm.classes:
		walk = []
		cur = cls
		while cur is not None and cur.name not in walk:
			walk.append(cur.name)
			cur = mm.class_map.get(cur.super_name) if cur.super_name is not None else None
		if cur is not None:
			cycle = frozenset(walk[walk.index(cur.name):])
			if cycle not in seen:
				seen.add(cycle)
				cycles.append(cycle)
	return cycles


def validate_metamodel(mm: Metamodel) -> List[Diagnostic]:
	"""
	Checks the Metamodel invariants.

	:return: sorted diagnostics, empty iff the metamodel is well-formed
	"""
	diagnostics = []

	def add(code, path, message, line=None):
		diagnostics.append(Diagnostic(code, '/'.join([mm.name] + path), message, line))

	counts = {}
	for cls in mm.classes:
		counts[cls.name] = counts.get(cls.name, 0) + 1
		if counts[cls.name] == 2:
			add('E_DUPCLASS', [cls.name], 'Class {} is defined more than once'.format(cls.name), cls.line)

	for cls in mm.classes:
		if cls.super_name is not None and cls.super_name not in mm.class_map:
			add('E_BADTYPE', [cls.name], 'Unresolved superclass {}'.format(cls.super_name), cls.line)

		for feature in cls.features:
			path = [cls.name, feature.name]
			if feature.is_attribute:
				if feature.container:
					add('E_BADTYPE', path, 'Only references can be containers', feature.line)
				if feature.type_name not in PRIMITIVE_TYPES:
					add('E_BADTYPE', path, 'Attribute type {} is not one of {}'.format(
						feature.type_name, ', '.join(PRIMITIVE_TYPES)), feature.line)
			elif feature.type_name not in mm.class_map:
				add('E_BADTYPE', path, 'Reference type {} is not a class of {}'.format(
					feature.type_name, mm.name), feature.line)

	cycles = _cycles(mm)
	in_cycle = set()
	for cycle in cycles:
		first = sorted(cycle)[0]
		in_cycle |= cycle
		add('E_CYCLE', [first], 'Inheritance cycle through {}'.format(', '.join(sorted(cycle))),
			mm.class_map[first].line)

	for cls in mm.classes:
		chain = mm.chain(cls.name)
		if in_cycle.intersection(chain):
			continue
		inherited = set()
		if cls.super_name is not None and cls.super_name in mm.class_map:
			inherited = set(f.name for f in mm.features(cls.super_name))
		for feature in cls.features:
			if feature.name in inherited:
				add('E_DUPFEAT', [cls.name, feature.name],
					'Feature {} is already defined for {}'.format(feature.name, cls.name), feature.line)
			inherited.add(feature.name)

	if diagnostics:
		logger.debug('metamodel %s: %d diagnostics', mm.name, len(diagnostics))
	return sorted_diagnostics(diagnostics)


def to_km3(mm: Metamodel) -> str:
	""" Pretty-prints a metamodel in the KM3 subset accepted by parse_km3 """
	lines = ['package {} {{'.format(mm.name)]
	for cls in mm.classes:
		head = 'class {}'.format(cls.name)
		if cls.super_name is not None:
			head += ' extends {}'.format(cls.super_name)
		lines.append('  {} {{'.format(head))
		for feature in cls.features:
			if feature.is_attribute:
				lines.append('    attribute {} : {};'.format(feature.name, feature.type_name))
			else:
				container = ' container' if feature.container else ''
				lines.append('    reference {}{} : {};'.format(feature.name, container, feature.type_name))
		lines.append('  }')
	lines.append('}')
	return '\n'.join(lines) + '\n'
