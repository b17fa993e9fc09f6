import os

import pytest

from aspecis import fixturepath, metamodelpath
from aspecis.awm import builtin_metamodels, load_role_set
from aspecis.model import parse_model_file


def fixture_file(*names):
	return os.path.join(fixturepath, *names)


def metamodel_file(name):
	return os.path.join(metamodelpath, name)


@pytest.fixture(scope='session')
def builtins():
	return builtin_metamodels()


@pytest.fixture
def m1():
	return parse_model_file(fixture_file('m1_core.json'))


@pytest.fixture
def m2():
	return parse_model_file(fixture_file('m2_aspect.json'))


@pytest.fixture
def wm_hgs():
	return parse_model_file(fixture_file('weaving_hgs.json'))


@pytest.fixture
def hgs_roles():
	return load_role_set(fixture_file('m1_core.json'), fixture_file('m2_aspect.json'),
						 fixture_file('weaving_hgs.json'))
