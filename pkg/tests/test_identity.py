import itertools

import pytest
from hypothesis import given, settings

from aspecis.errors import ValidationError
from aspecis.model import Element, ModelInstance, Ref, children_of, element_id, parent_of, resolve_id

from strategies import core_models


def test_fixture_ids(m1):
	assert element_id(m1, m1.get('M1/Student')) == 'M1/Student'
	assert element_id(m1, m1.get('M1/Student/NewSubscription')) == 'M1/Student/NewSubscription'
	assert resolve_id(m1, 'M1/Student') is m1.get('M1/Student')


def test_root_named_like_model():
	m = ModelInstance('X', 'CoreMM', (Element('root', 'Class', {'name': 'X'}),))
	assert element_id(m, m.get('root')) == 'X/X'


def test_ids_follow_names_not_element_ids():
	m = ModelInstance('M', 'CoreMM', (
		Element('e1', 'Class', {'name': 'Student', 'operations': [Ref('e2')]}),
		Element('e2', 'Operation', {'name': 'getName'}),
	))
	assert element_id(m, m.get('e2')) == 'M/Student/getName'
	assert resolve_id(m, 'M/Student/getName').id == 'e2'
	with pytest.raises(ValidationError) as e:
		resolve_id(m, 'e2')
	assert e.value.code == 'E_NORESOLVE'


def test_parent_and_children(m1):
	student = m1.get('M1/Student')
	op = m1.get('M1/Student/getName')
	assert parent_of(m1, op) == student
	assert parent_of(m1, student) is None
	assert [e.id for e in children_of(m1, student)] == [
		'M1/Student/IdStudent', 'M1/Student/FirstSpecialty',
		'M1/Student/NewSubscription', 'M1/Student/NewSpeciality', 'M1/Student/getName']


def test_missing_name():
	m = ModelInstance('M', 'CoreMM', (
		Element('c', 'Class', {'operations': [Ref('o')]}),
		Element('o', 'Operation', {'name': 'run'}),
	))
	with pytest.raises(ValidationError) as e:
		element_id(m, m.get('o'))
	assert e.value.code == 'E_NONAME'


def test_empty_identifier(m1):
	with pytest.raises(ValidationError) as e:
		resolve_id(m1, '')
	assert e.value.code == 'E_NORESOLVE'


def test_unknown_identifier(m1):
	with pytest.raises(ValidationError) as e:
		resolve_id(m1, 'M1/Student/Nothing')
	assert e.value.code == 'E_NORESOLVE'


def test_foreign_element(m1):
	with pytest.raises(ValidationError) as e:
		element_id(m1, Element('M1/Student', 'Class', {'name': 'Other'}))
	assert e.value.code == 'E_NORESOLVE'


def test_duplicate_sibling_names():
	m = ModelInstance('M', 'CoreMM', (
		Element('c', 'Class', {'name': 'Student', 'operations': [Ref('o1'), Ref('o2')]}),
		Element('o1', 'Operation', {'name': 'run'}),
		Element('o2', 'Operation', {'name': 'run', 'params': 'x'}),
	))
	with pytest.raises(ValidationError) as e:
		resolve_id(m, 'M/Student/run')
	assert e.value.code == 'E_AMBIGUOUS'
	with pytest.raises(ValidationError) as e:
		element_id(m, m.get('o1'))
	assert e.value.code == 'E_AMBIGUOUS'
	assert resolve_id(m, 'M/Student').id == 'c'


def test_unknown_metamodel():
	m = ModelInstance('M', 'NoSuchMM', (Element('a', 'A', {'name': 'a'}),))
	with pytest.raises(ValidationError) as e:
		element_id(m, m.get('a'))
	assert e.value.code == 'E_NAME'


def test_containment_cycle():
	m = ModelInstance('M', 'CoreMM', (
		Element('p', 'Package', {'name': 'p', 'classes': [Ref('q')]}),
		Element('q', 'Package', {'name': 'q', 'classes': [Ref('p')]}),
	))
	with pytest.raises(ValidationError) as e:
		element_id(m, m.get('p'))
	assert e.value.code == 'E_CONTAIN'


@given(core_models())
@settings(max_examples=100)
def test_identification_round_trip(m):
	for e in m.elements:
		assert resolve_id(m, element_id(m, e)) == e


@given(core_models(opaque_ids=True))
@settings(max_examples=100)
def test_identifiers_are_distinct(m):
	ids = [element_id(m, e) for e in m.elements]
	for a, b in itertools.combinations(ids, 2):
		assert a != b


@given(core_models(min_classes=1))
@settings(max_examples=100)
def test_duplicate_siblings_are_ambiguous(m):
	cls = m.elements_of_type('Class')[0]
	twin = Element(cls.id + '#twin', 'Class', {'name': cls.get('name')})
	parent = parent_of(m, cls)
	elements = list(m.elements) + [twin]
	if parent is not None:
		key = 'classes'
		elements[elements.index(parent)] = parent.with_slots(
			classes=tuple(Ref(i) for i in parent.refs(key)) + (Ref(twin.id),))
	doubled = m.replace_elements(elements)
	with pytest.raises(ValidationError) as e:
		resolve_id(doubled, element_id(m, cls))
	assert e.value.code == 'E_AMBIGUOUS'
