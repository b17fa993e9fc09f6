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

from ..errors import ValidationError
from .instance import Element, ModelInstance
from .registry import get_metamodel

logger = logging.getLogger(__name__)

SEPARATOR = '/'


class ModelIndex(object):
	def __init__(self, model, mm):
		"""
		Containment structure of a model, read through the container
		references of its metamodel.

		:param model: ModelInstance
		:param mm: Metamodel the model conforms to
		"""
		self._model = model
		self._mm = mm

		self._parents = None
		self._children = None
		self._paths = None

	@property
	def model(self):
		return self._model

	def _build_containment(self):
		parents, children = {}, {}
		for element in self._model.elements:
			if self._mm.lookup(element.type) is None:
				continue
			for key in element.slots:
				feature = self._mm.feature(element.type, key)
				if feature is None or not feature.is_reference or not feature.container:
					continue
				for target in element.refs(key):
					parents.setdefault(target, []).append(element.id)
					children.setdefault(element.id, []).append(target)
		self._parents, self._children = parents, children

	@property
	def parents(self):
		if self._parents is None:
			self._build_containment()
		return self._parents

	@property
	def children(self):
		if self._children is None:
			self._build_containment()
		return self._children

	def parent_of(self, element_id):
		parents = self.parents.get(element_id)
		return parents[0] if parents else None

	def children_of(self, element_id):
		return list(self.children.get(element_id, []))

	def name_path(self, element_id):
		names = []
		visited = set()
		cur = element_id
		while cur is not None:
			if cur in visited:
				raise ValidationError('E_CONTAIN', 'Containment cycle above {}'.format(element_id),
									  path='{}/{}'.format(self._model.name, element_id))
			visited.add(cur)
			element = self._model.get(cur)
			name = element.get('name') if element is not None else None
			if not isinstance(name, str) or not name:
				raise ValidationError('E_NONAME', 'Element {} has no name'.format(cur),
									  path='{}/{}'.format(self._model.name, cur))
			names.append(name)
			cur = self.parent_of(cur)
		return SEPARATOR.join([self._model.name] + names[::-1])

	@property
	def paths(self):
		if self._paths is None:
			paths = {}
			for element in self._model.elements:
				try:
					path = self.name_path(element.id)
				except ValidationError:
					continue
				paths.setdefault(path, []).append(element.id)
			self._paths = paths
		return self._paths


def index_of(m: ModelInstance, mm=None) -> ModelIndex:
	if mm is None:
		mm = get_metamodel(m.conforms_to)
		if mm is None:
			raise ValidationError('E_NAME', 'No metamodel named {} is known'.format(m.conforms_to), path=m.name)
	cached = m._indexes.get(id(mm))
	if cached is None or cached[0] is not mm:
		cached = (mm, ModelIndex(m, mm))
		m._indexes[id(mm)] = cached
	return cached[1]


def parent_of(m: ModelInstance, e: Element, mm=None):
	parent_id = index_of(m, mm).parent_of(e.id)
	return m.get(parent_id) if parent_id is not None else None


def children_of(m: ModelInstance, e: Element, mm=None):
	return [m.get(i) for i in index_of(m, mm).children_of(e.id) if m.get(i) is not None]


def element_id(m: ModelInstance, e: Element, mm=None) -> str:
	"""
	Identification function: `<model name>/<name path from the containment root>`.

	:param m: model owning e
	:param e: element to identify
	:param mm: metamodel of m, looked up by name when None
	"""
	if m.get(e.id) != e:
		raise ValidationError('E_NORESOLVE', 'Element {} does not belong to model {}'.format(e.id, m.name),
							  path='{}/{}'.format(m.name, e.id))
	index = index_of(m, mm)
	ident = index.name_path(e.id)
	if len(index.paths.get(ident, [])) > 1:
		raise ValidationError('E_AMBIGUOUS', 'Identifier {} names several elements'.format(ident), path=ident)
	return ident


def resolve_id(m: ModelInstance, ident: str, mm=None) -> Element:
	""" The unique element whose identifier is `ident` """
	if not ident:
		raise ValidationError('E_NORESOLVE', 'Empty identifier', path=m.name)
	matches = index_of(m, mm).paths.get(ident, [])
	if not matches:
		raise ValidationError('E_NORESOLVE', 'No element identified by {}'.format(ident), path=ident)
	if len(matches) > 1:
		raise ValidationError('E_AMBIGUOUS', 'Identifier {} names several elements'.format(ident), path=ident)
	return m.get(matches[0])
