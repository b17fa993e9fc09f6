import logging
from collections import Counter

import pytest
from hypothesis import given, settings

from aspecis.awm import ModelRoleSet, builtin, load_role_set, open_weaving
from aspecis.errors import ValidationError
from aspecis.model import Element, ModelInstance, Ref, canonical_serialize, check_conformance, resolve_id
from aspecis.pointcut import JoinPoint
from aspecis.weaver import (AdviceApplication, apply_weave, collect_applications, explain_weaving, weave)

from conftest import fixture_file
from strategies import aspect_roles, core_models, empty_weaving, weaving_triples

NEW_SUBSCRIPTION = JoinPoint('M1/Student', 'M1/Student/NewSubscription', 'call')


def read_fixture(name):
	with open(fixture_file(name), 'r', encoding='utf-8') as f:
		return f.read()


def test_collect_fixture(hgs_roles):
	apps = collect_applications(hgs_roles, open_weaving(hgs_roles))
	assert apps == [AdviceApplication(
		NEW_SUBSCRIPTION, 'M2/HoursAspect/advice_addElt', 'before', 0, 0, 'HoursAspect', 'advice_addElt',
		'The number of hours of the second specialty does not exceed 50% of the number of hours of the first '
		'specialty')]


def test_collect_zero_links(m1, m2):
	rs = ModelRoleSet(m1, m2, empty_weaving('M1', 'M2'))
	assert collect_applications(rs, open_weaving(rs)) == []


def test_priority_order(m1):
	rs = aspect_roles(m1, [
		('Low', 3, [('check', 'before', 'Student.NewSubscription', [])]),
		('High', 7, [('check', 'before', 'Student.NewSubscription', [])]),
	], 'M1/Student/NewSubscription')
	apps = collect_applications(rs, open_weaving(rs))
	assert [(a.aspect_name, a.order_index) for a in apps] == [('High', 0), ('Low', 1)]


def test_equal_priorities_order_by_name(m1):
	rs = aspect_roles(m1, [
		('B', 1, [('z', 'after', 'Student.*', []), ('a', 'after', 'Student.*', [])]),
		('A', 1, [('m', 'after', 'Student.*', [])]),
	], 'M1/Student/getName')
	apps = [a for a in collect_applications(rs, open_weaving(rs)) if a.join_point.operation_name == 'getName']
	assert [(a.aspect_name, a.advice_name, a.order_index) for a in apps] == [('A', 'm', 0), ('B', 'a', 1), ('B', 'z', 2)]


def test_kinds_are_grouped(m1):
	rs = aspect_roles(m1, [
		('A', 1, [('after1', 'after', 'Student.getName', []), ('before1', 'before', 'Student.getName', [])]),
	], 'M1/Student/getName')
	apps = collect_applications(rs, open_weaving(rs))
	assert [(a.kind, a.order_index) for a in apps] == [('before', 0), ('after', 0)]


def test_end_not_matched(m1):
	rs = aspect_roles(m1, [('A', 0, [('a', 'before', 'Student.getName', [])])], 'M1/Student/NewSubscription')
	with pytest.raises(ValidationError) as e:
		collect_applications(rs, open_weaving(rs))
	assert e.value.codes == ['E_ENDNOTMATCHED']


def test_end_on_class(m1):
	rs = aspect_roles(m1, [('A', 0, [('a', 'before', 'Student.New*', [])])], 'M1/Student')
	apps = collect_applications(rs, open_weaving(rs))
	assert [a.join_point.operation_name for a in apps] == ['NewSpeciality', 'NewSubscription']


def test_aspect_end_not_an_advice(m1):
	rs = aspect_roles(m1, [('A', 0, [('a', 'before', 'Student.getName', [])])], 'M1/Student/getName')
	end = rs.weaving.get('W/root/L0/endAspect').with_slots(ref='M2/A/pc_a')
	weaving = rs.weaving.replace_elements([end if e.id == end.id else e for e in rs.weaving.elements])
	rs = ModelRoleSet(rs.core, rs.aspect, weaving)
	with pytest.raises(ValidationError) as e:
		collect_applications(rs, open_weaving(rs))
	assert e.value.codes == ['E_NOADVICE']


def test_bad_pointcut_type(m1):
	rs = aspect_roles(m1, [('A', 0, [('a', 'before', 'Student.getName', [])])], 'M1/Student/getName',
					  type_pointcut='cflow')
	with pytest.raises(ValidationError) as e:
		collect_applications(rs, open_weaving(rs))
	assert e.value.codes == ['E_PCTYPE']


def test_advice_without_pointcut(m1):
	rs = aspect_roles(m1, [('A', 0, [('a', 'before', 'Student.getName', [])])], 'M1/Student/getName')
	advice = rs.aspect.get('M2/A/a')
	slots = dict(advice.slots)
	del slots['pointcut']
	aspect = rs.aspect.replace_elements([Element(advice.id, advice.type, slots) if e.id == advice.id else e
										 for e in rs.aspect.elements])
	rs = ModelRoleSet(rs.core, aspect, rs.weaving)
	with pytest.raises(ValidationError) as e:
		collect_applications(rs, open_weaving(rs))
	assert e.value.codes == ['E_NOPOINTCUT']


def test_weave_fixture(hgs_roles):
	woven = weave(hgs_roles)
	assert canonical_serialize(woven.base) == read_fixture('expected_woven.json')
	student = resolve_id(woven.base, 'M1/Student')
	assert student.refs('operations')[-2:] == ['M1/Student/VerifySpecialtyNbreOfHours', 'M1/Student/getSecondSpecialty']
	[binding] = woven.bindings
	assert binding.get('kind') == 'before'
	assert binding.get('joinPointRef') == 'M1/Student/NewSubscription'
	assert binding.get('orderIndex') == 0
	assert '50%' in binding.get('bodyAdvice')
	assert woven.provenance == {
		'M1/Student/VerifySpecialtyNbreOfHours': 'M2/HoursAspect/advice_addElt/VerifySpecialtyNbreOfHours',
		'M1/Student/getSecondSpecialty': 'M2/HoursAspect/advice_addElt/getSecondSpecialty',
	}


def test_weave_twice_is_byte_identical(hgs_roles):
	first = weave(hgs_roles).serialize()
	again = load_role_set(fixture_file('m1_core.json'), fixture_file('m2_aspect.json'),
						  fixture_file('weaving_hgs.json'))
	assert weave(again).serialize() == first


def test_identity_weaving(m1):
	rs = load_role_set(fixture_file('m1_core.json'), fixture_file('empty_aspect.json'),
					   fixture_file('empty_weaving.json'))
	woven = weave(rs)
	assert woven.bindings == []
	assert woven.base.elements == m1.elements
	assert woven.base.conforms_to == 'WovenMM'


def test_apply_zero_applications(hgs_roles):
	woven = apply_weave(hgs_roles, [])
	assert woven.base.elements == hgs_roles.core.elements
	assert woven.provenance == {}


def test_duplicate_injection(m1, caplog):
	rs = aspect_roles(m1, [
		('A', 2, [('first', 'before', 'Student.getName', ['audit'])]),
		('B', 1, [('second', 'after', 'Student.getName', ['audit'])]),
	], 'M1/Student/getName')
	with caplog.at_level(logging.WARNING):
		woven = weave(rs)
	injected = [e for e in woven.base.elements if e.id == 'M1/Student/audit']
	assert len(injected) == 1
	assert Counter(e.type for e in woven.base.elements)['Operation'] == len(m1.elements_of_type('Operation')) + 1
	assert 'audit' in caplog.text
	first, second = sorted(woven.bindings, key=lambda b: b.get('kind'))
	assert second.get('kind') == 'before' and second.get('injected') == (Ref('M1/Student/audit'),)
	assert first.get('injected') is None


def test_same_advice_linked_twice(m1):
	rs = aspect_roles(m1, [('A', 0, [('a', 'before', 'Student.getName', ['audit'])])], 'M1/Student/getName')
	links = rs.weaving.elements_of_type('Pointcut-Core_Aspect', 'EndCore', 'EndAspect')
	copies = [Element(e.id.replace('L0', 'L1'), e.type, dict(
		(k, Ref(v.target.replace('L0', 'L1')) if isinstance(v, Ref) else (v.replace('L0', 'L1') if k == 'name' else v))
		for k, v in e.slots.items())) for e in links]
	root = rs.weaving.get('W/root')
	root = root.with_slots(links=tuple(Ref(i) for i in root.refs('links')) + (Ref('W/root/L1'),))
	weaving = rs.weaving.replace_elements([root] + [e for e in rs.weaving.elements if e.id != root.id] + copies)
	woven = weave(ModelRoleSet(rs.core, rs.aspect, weaving))
	assert len(woven.bindings) == 1
	assert len([e for e in woven.base.elements if e.get('name') == 'audit']) == 1


def test_name_clash():
	rs = load_role_set(fixture_file('m1_core.json'), fixture_file('faults', 'e_nameclash_aspect.json'),
					   fixture_file('weaving_hgs.json'))
	with pytest.raises(ValidationError) as e:
		weave(rs)
	assert e.value.codes == ['E_NAMECLASH']
	assert e.value.exit_code == 1


def test_identical_core_operation_is_kept(m1):
	rs = aspect_roles(m1, [('A', 0, [('a', 'before', 'Student.NewSubscription', ['getName'])])],
					  'M1/Student/NewSubscription')
	core = rs.core.replace_elements([
		e.with_slots(returnType='String') if e.id == 'M1/Student/getName' else e for e in rs.core.elements])
	woven = weave(ModelRoleSet(core, rs.aspect, rs.weaving))
	assert woven.provenance == {}
	assert woven.bindings[0].get('injected') is None


def test_explain_fixture(hgs_roles):
	report = explain_weaving(hgs_roles)
	assert report['weaving'] == 'HGS'
	[link] = report['links']
	assert link['name'] == 'Pointcut1'
	assert link['linkKind'] == ['Operation', 'Advice']
	assert link['joinPoints'] == ['M1/Student/NewSubscription']
	[app] = link['applications']
	assert app['orderIndex'] == 0 and app['kind'] == 'before' and app['priority'] == 0
	assert report['conflicts'] == []


@given(core_models(name='M1', min_classes=0))
@settings(max_examples=100)
def test_identity_law(core):
	rs = ModelRoleSet(core, ModelInstance('M2', 'AspectMM', ()), empty_weaving('M1', 'M2'))
	outputs = [weave(rs).serialize() for _ in range(3)]
	woven = weave(rs)
	assert Counter(e.key() for e in woven.base.elements) == Counter(e.key() for e in core.elements)
	assert outputs[0] == outputs[1] == outputs[2]


@given(weaving_triples())
@settings(max_examples=100)
def test_conformance_closure(rs):
	woven = weave(rs, 'priority')
	assert check_conformance(woven.base, builtin('WovenMM')) == []
	assert len(woven.bindings) == len(woven.applications)
	for binding in woven.bindings:
		resolve_id(woven.base, binding.get('joinPointRef'))
	for op_id in woven.provenance:
		assert woven.base.get(op_id).type == 'Operation'


@given(weaving_triples())
@settings(max_examples=100)
def test_core_preservation(rs):
	woven = weave(rs, 'priority')
	for e in rs.core.elements:
		out = woven.base.get(e.id)
		assert out.type == e.type
		for key, value in e.slots.items():
			if isinstance(value, tuple):
				assert out.get(key)[:len(value)] == value
			else:
				assert out.get(key) == value


@given(weaving_triples())
@settings(max_examples=100)
def test_ordering_law(rs):
	apps = collect_applications(rs, open_weaving(rs))
	groups = {}
	for app in apps:
		groups.setdefault((app.join_point, app.kind), []).append(app)
	for group in groups.values():
		assert sorted(a.order_index for a in group) == list(range(len(group)))
		for a in group:
			for b in group:
				if a.priority > b.priority:
					assert a.order_index < b.order_index


@given(weaving_triples())
@settings(max_examples=50)
def test_weave_is_deterministic(rs):
	assert weave(rs, 'priority').serialize() == weave(rs, 'priority').serialize()
