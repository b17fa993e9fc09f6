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

import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Mapping, Tuple, Union

from ..errors import ParseError

logger = logging.getLogger(__name__)

MODEL_KEYS = ('model', 'conformsTo', 'elements')
ELEMENT_KEYS = ('id', 'type', 'slots')


@dataclass(frozen=True)
class Ref(object):
	""" Reference to an element id of the same model """
	target: str


SlotValue = Union[str, int, bool, Ref, Tuple[Ref, ...]]


def _freeze_value(value):
	if isinstance(value, list):
		return tuple(value)
	return value


@dataclass(frozen=True)
class Element(object):
	id: str
	type: str
	slots: Mapping[str, SlotValue] = field(default_factory=dict)

	def __post_init__(self):
		slots = dict((k, _freeze_value(v)) for k, v in dict(self.slots).items())
		object.__setattr__(self, 'slots', MappingProxyType(slots))

	def get(self, name, default=None):
		return self.slots.get(name, default)

	@property
	def name(self):
		return self.slots.get('name')

	def refs(self, name):
		"""
		Targets of a reference slot, whether it holds one or several refs

		:param name: slot name
		:return: list of element ids
		"""
		value = self.slots.get(name)
		if isinstance(value, Ref):
			return [value.target]
		if isinstance(value, tuple):
			return [v.target for v in value if isinstance(v, Ref)]
		return []

	def with_slots(self, **slots):
		new_slots = dict(self.slots)
		new_slots.update(slots)
		return Element(self.id, self.type, new_slots)

	def key(self):
		""" Hashable (id, type, slots) triple """
		return (self.id, self.type, tuple(sorted(self.slots.items(), key=lambda kv: kv[0])))


@dataclass(frozen=True)
class ModelInstance(object):
	name: str
	conforms_to: str
	elements: Tuple[Element, ...] = ()

	def __post_init__(self):
		object.__setattr__(self, 'elements', tuple(self.elements))

	@cached_property
	def element_map(self):
		out = {}
		for element in self.elements:
			out.setdefault(element.id, element)
		return out

	@cached_property
	def _indexes(self):
		return {}

	def get(self, element_id):
		return self.element_map.get(element_id)

	def elements_of_type(self, *type_names):
		return [e for e in self.elements if e.type in type_names]

	def replace_elements(self, elements, conforms_to=None):
		return ModelInstance(self.name, conforms_to or self.conforms_to, tuple(elements))


def structurally_equal(a: ModelInstance, b: ModelInstance) -> bool:
	""" Equality up to element order """
	if a.name != b.name or a.conforms_to != b.conforms_to or len(a.elements) != len(b.elements):
		return False
	return sorted(e.key() for e in a.elements) == sorted(e.key() for e in b.elements)


def _schema_error(message, path):
	return ParseError('E_SCHEMA', message, path=path)


def _is_identifier_text(value):
	return isinstance(value, str) and len(value) > 0


def _read_ref(value, path):
	if not isinstance(value, dict) or list(value.keys()) != ['ref'] or not _is_identifier_text(value['ref']):
		raise _schema_error('Expected {"ref": "<id>"}', path)
	return Ref(value['ref'])


def _read_slot(value, path):
	if isinstance(value, bool) or isinstance(value, str):
		return value
	if isinstance(value, int):
		return value
	if isinstance(value, dict):
		return _read_ref(value, path)
	if isinstance(value, list):
		return tuple(_read_ref(v, '{}[{}]'.format(path, i)) for i, v in enumerate(value))
	raise _schema_error('Unsupported slot value {!r}'.format(value), path)


def _check_keys(obj, allowed, required, path):
	if not isinstance(obj, dict):
		raise _schema_error('Expected a JSON object', path)
	for key in required:
		if key not in obj:
			raise _schema_error('Missing key "{}"'.format(key), path)
	for key in obj:
		if key not in allowed:
			raise _schema_error('Unknown key "{}"'.format(key), path)


def parse_model(source, source_name='<model>') -> ModelInstance:
	"""
	Reads a Model-JSON document. No conformance checking is done here.

	:param source: 		JSON text (str, or UTF-8 bytes)
	:param source_name: used as the path of parse diagnostics
	:return: ModelInstance with elements in file order
	"""
	if isinstance(source, bytes):
		source = source.decode('utf-8')

	try:
		doc = json.loads(source)
	except json.JSONDecodeError as e:
		raise ParseError('E_JSON', e.msg, path=source_name, line=e.lineno, column=e.colno)

	_check_keys(doc, MODEL_KEYS, MODEL_KEYS, source_name)
	name = doc['model']
	if not _is_identifier_text(name) or not _is_identifier_text(doc['conformsTo']):
		raise _schema_error('"model" and "conformsTo" must be non-empty strings', source_name)
	if not isinstance(doc['elements'], list):
		raise _schema_error('"elements" must be a list', source_name)

	elements = []
	seen = set()
	for i, raw in enumerate(doc['elements']):
		path = '{}/elements[{}]'.format(name, i)
		_check_keys(raw, ELEMENT_KEYS, ('id', 'type'), path)
		if not _is_identifier_text(raw['id']) or not _is_identifier_text(raw['type']):
			raise _schema_error('"id" and "type" must be non-empty strings', path)
		element_id = raw['id']
		if element_id in seen:
			raise ParseError('E_DUPID', 'Duplicate element id {}'.format(element_id),
							 path='{}/{}'.format(name, element_id))
		seen.add(element_id)

		raw_slots = raw.get('slots', {})
		if not isinstance(raw_slots, dict):
			raise _schema_error('"slots" must be an object', path)
		slots = {}
		for key, value in raw_slots.items():
			slots[key] = _read_slot(value, '{}/{}/{}'.format(name, element_id, key))
		elements.append(Element(element_id, raw['type'], slots))

	logger.debug('parsed model %s from %s (%d elements)', name, source_name, len(elements))
	return ModelInstance(name, doc['conformsTo'], tuple(elements))


def parse_model_file(file_path) -> ModelInstance:
	with open(file_path, 'r', encoding='utf-8') as f:
		return parse_model(f.read(), source_name=str(file_path))


def _write_slot(value):
	if isinstance(value, Ref):
		return {'ref': value.target}
	if isinstance(value, tuple):
		return [_write_slot(v) for v in value]
	return value


def to_document(m: ModelInstance, sort=True):
	elements = sorted(m.elements, key=lambda e: e.id) if sort else m.elements
	return {
		'model': m.name,
		'conformsTo': m.conforms_to,
		'elements': [
			{'id': e.id, 'type': e.type, 'slots': dict((k, _write_slot(v)) for k, v in e.slots.items())}
			for e in elements],
	}


def canonical_serialize(m: ModelInstance) -> str:
	"""
	Byte-deterministic Model-JSON: elements sorted by id, keys sorted,
	2-space indentation, trailing newline. Encode the result as UTF-8.
	"""
	return json.dumps(to_document(m, sort=True), indent=2, sort_keys=True, ensure_ascii=False) + '\n'


def write_model_file(m: ModelInstance, file_path):
	with open(file_path, 'w', encoding='utf-8', newline='\n') as f:
		f.write(canonical_serialize(m))
