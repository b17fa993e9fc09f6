from collections.abc import Iterable, Mapping

import yaml

from ..instance import Element, Ref


def to_yaml(obj):
	""" Simplify yaml representation for pretty printing """
	if obj is None or isinstance(obj, str):
		out = obj
	elif type(obj) in [int, float, bool]:
		return obj
	elif hasattr(obj, 'to_yaml'):
		out = obj.to_yaml()
	elif isinstance(obj, Ref):
		out = {'ref': obj.target}
	elif isinstance(obj, Element):
		out = {'id': obj.id, 'type': obj.type, 'slots': to_yaml(dict(obj.slots))}
	elif isinstance(obj, Mapping):
		out = {}
		for (var, value) in obj.items():
			out[str(var)] = to_yaml(value)
	elif isinstance(obj, Iterable):
		out = [to_yaml(item) for item in obj]
	else:
		out = str(obj)
	return out


def dump_yaml(obj):
	return yaml.safe_dump(to_yaml(obj), default_flow_style=False, sort_keys=False, allow_unicode=True)


class SelectiveReflection(object):
	def get_refl_vars(self):
		return list(vars(self).keys())


class YamlReflection(SelectiveReflection):
	def to_yaml(self):
		raw = dict((var, getattr(self, var)) for var in self.get_refl_vars())
		return to_yaml(raw)

	def __str__(self):
		return dump_yaml(self).rstrip()
