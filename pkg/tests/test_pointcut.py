import pytest
from hypothesis import given, settings, strategies as st

from aspecis.errors import ValidationError
from aspecis.model import Element, ModelInstance, Ref
from aspecis.pointcut import JoinPoint, Pattern, enumerate_joinpoints, match_pointcut, parse_pattern

from strategies import class_operations, core_models, patterns_for


def wildcard_match(pattern, text):
	""" Character-level backtracking: `*` matches any run, anything else itself """
	if not pattern:
		return not text
	if pattern[0] == '*':
		return any(wildcard_match(pattern[1:], text[i:]) for i in range(len(text) + 1))
	return bool(text) and pattern[0] == text[0] and wildcard_match(pattern[1:], text[1:])


def test_parse_exact():
	p = parse_pattern('Student.NewSubscription')
	assert p == Pattern('Student', 'NewSubscription')
	assert p.is_exact
	assert str(p) == 'Student.NewSubscription'


def test_parse_match_all():
	p = parse_pattern('*.*')
	assert p.matches('Anything', 'at_all')
	assert p.matches('', '')


@pytest.mark.parametrize('text', ['Student', 'Student.', '.op', 'a.b.c', '', 'Stu dent.op', 'A.b?', 'A.[b]'])
def test_bad_patterns(text):
	with pytest.raises(ValidationError) as e:
		parse_pattern(text)
	assert e.value.code == 'E_PATTERN'


@given(st.from_regex(r'[A-Za-z0-9_*]{1,8}\.[A-Za-z0-9_*]{1,8}', fullmatch=True))
def test_pattern_round_trip(text):
	assert str(parse_pattern(text)) == text


def test_fixture_joinpoints(m1):
	jps = enumerate_joinpoints(m1, 'call')
	assert JoinPoint('M1/Student', 'M1/Student/NewSubscription', 'call') in jps
	assert len(jps) == len(m1.elements_of_type('Operation'))
	assert [jp.operation_id for jp in jps] == sorted(jp.operation_id for jp in jps)


def test_no_operations():
	m = ModelInstance('M', 'CoreMM', (Element('c', 'Class', {'name': 'C'}),))
	assert enumerate_joinpoints(m, 'execution') == []


def test_pointcut1(m1):
	jps = match_pointcut(m1, 'call', parse_pattern('Student.NewSubscription'))
	assert jps == [JoinPoint('M1/Student', 'M1/Student/NewSubscription', 'call')]
	assert jps[0].class_name == 'Student'
	assert jps[0].operation_name == 'NewSubscription'


def test_prefix_pattern(m1):
	jps = match_pointcut(m1, 'call', parse_pattern('Student.New*'))
	assert [jp.operation_id for jp in jps] == ['M1/Student/NewSpeciality', 'M1/Student/NewSubscription']


def test_match_all_is_enumeration(m1):
	assert match_pointcut(m1, 'execution', parse_pattern('*.*')) == enumerate_joinpoints(m1, 'execution')


def test_no_match(m1):
	assert match_pointcut(m1, 'call', parse_pattern('Nomatch.*')) == []


def test_bad_type(m1):
	with pytest.raises(ValidationError) as e:
		match_pointcut(m1, 'get', parse_pattern('*.*'))
	assert e.value.code == 'E_PCTYPE'


def test_classes_in_package():
	m = ModelInstance('M', 'CoreMM', (
		Element('p', 'Package', {'name': 'P', 'classes': [Ref('c')]}),
		Element('c', 'Class', {'name': 'C', 'operations': [Ref('o')]}),
		Element('o', 'Operation', {'name': 'run'}),
	))
	assert match_pointcut(m, 'call', parse_pattern('C.run')) == [JoinPoint('M/P/C', 'M/P/C/run', 'call')]


@st.composite
def models_and_patterns(draw):
	m = draw(core_models())
	return m, draw(patterns_for(m)), draw(st.sampled_from(['call', 'execution']))


@given(models_and_patterns())
@settings(max_examples=1000)
def test_oracle_equivalence(case):
	m, text, kind = case
	pattern = parse_pattern(text)
	class_pattern, op_pattern = text.split('.')
	expected = sorted((cls.get('name'), op.get('name')) for cls, op in class_operations(m)
					  if wildcard_match(class_pattern, cls.get('name')) and wildcard_match(op_pattern, op.get('name')))
	got = match_pointcut(m, kind, pattern)
	assert sorted((jp.class_name, jp.operation_name) for jp in got) == expected
	assert all(jp.kind == kind for jp in got)
	assert got == sorted(got, key=JoinPoint.sort_key)


@given(models_and_patterns(), st.data())
@settings(max_examples=200)
def test_widening_never_shrinks(case, data):
	m, text, kind = case
	class_pattern, op_pattern = text.split('.')
	wider = data.draw(st.sampled_from(['*.' + op_pattern, class_pattern + '.*', '*.*']))
	narrow = set(match_pointcut(m, kind, parse_pattern(text)))
	assert narrow <= set(match_pointcut(m, kind, parse_pattern(wider)))


@given(models_and_patterns())
@settings(max_examples=200)
def test_call_and_execution_differ_in_kind_only(case):
	m, text, _ = case
	pattern = parse_pattern(text)
	calls = match_pointcut(m, 'call', pattern)
	executions = match_pointcut(m, 'execution', pattern)
	assert [(jp.class_id, jp.operation_id) for jp in calls] == [(jp.class_id, jp.operation_id) for jp in executions]
	assert match_pointcut(m, 'call', pattern) == calls
