import copy
import logging

from ...errors import ValidationError
from ..instance import Element, Ref
from ..registry import get_metamodel
from .basics import YamlReflection

logger = logging.getLogger(__name__)


def reflect(cls, *args, **kwargs):
	""" Simple wrapper to add element reflection to a reflection.Object class """
	cls.REFL = Reflection(*args, **kwargs)


def on_error(message):
	""" What to do on a recoverable error. This can be changed to raise an exception. """
	logger.warning(message)


def slot_error(message, path):
	return ValidationError('E_SLOT', message, path=path)


# Registering Types
value_types = {}


def add_type(key, value):
	assert key not in value_types
	value_types[key] = value


def get_type(cur_type):
	""" Can wrap value types if needed """
	value_type = value_types.get(cur_type)
	if value_type is None:
		value_type = make_type(cur_type)
		add_type(cur_type, value_type)
	return value_type


def make_type(cur_type):
	if isinstance(cur_type, ValueType):
		return cur_type
	elif cur_type in [str, int, bool]:
		return BasicType(cur_type)
	elif isinstance(cur_type, type) and issubclass(cur_type, Object):
		return ObjectType(cur_type)
	else:
		raise Exception("Invalid type: {}".format(cur_type))


class Context(object):
	def __init__(self, model, mm=None):
		"""
		State of one read over a model: the model, its metamodel and the
		objects already built, by element id.

		:param model: ModelInstance
		:param mm: Metamodel, looked up by model.conforms_to when None
		"""
		self.model = model
		self.mm = mm if mm is not None else get_metamodel(model.conforms_to)
		self.objects = {}

	def path(self, element, slot=None):
		parts = [self.model.name, element.id]
		if slot is not None:
			parts.append(slot)
		return '/'.join(parts)


class ValueType(object):
	""" Slot value type """
	def from_slot(self, context, value, path):
		raise NotImplementedError

	def to_slot(self, value):
		return value


class BasicType(ValueType):
	def __init__(self, cur_type):
		self.type = cur_type

	def from_slot(self, context, value, path):
		valid = isinstance(value, self.type)
		if self.type is int and isinstance(value, bool):
			valid = False
		if not valid:
			raise slot_error('Expected a {} value, got {!r}'.format(self.type.__name__, value), path)
		return value


class RefType(ValueType):
	""" Keeps the target id of a reference, without reading the target """
	def from_slot(self, context, value, path):
		if not isinstance(value, Ref):
			raise slot_error('Expected a reference, got {!r}'.format(value), path)
		return value.target

	def to_slot(self, value):
		return Ref(value)


class ObjectType(ValueType):
	def __init__(self, cur_type):
		self.type = cur_type

	def from_slot(self, context, value, path):
		if not isinstance(value, Ref):
			raise slot_error('Expected a reference, got {!r}'.format(value), path)
		element = context.model.get(value.target)
		if element is None:
			raise slot_error('Dangling reference to {}'.format(value.target), path)
		return self.type.from_element(context.model, element, context=context)

	def to_slot(self, obj):
		return Ref(obj.id)


class FactoryType(ValueType):
	def __init__(self, name, typeMap):
		"""
		Reads a reference with the view registered for the most specific
		MetaClass of the target element.

		:param name: 	used in error messages
		:param typeMap: MetaClass name -> Object subclass
		"""
		self.name = name
		self.typeMap = typeMap

	def from_slot(self, context, value, path):
		if not isinstance(value, Ref):
			raise slot_error('Expected a reference, got {!r}'.format(value), path)
		element = context.model.get(value.target)
		if element is None:
			raise slot_error('Dangling reference to {}'.format(value.target), path)
		chain = context.mm.chain(element.type) if context.mm is not None else [element.type]
		for type_name in chain:
			cur_type = self.typeMap.get(type_name)
			if cur_type is not None:
				return cur_type.from_element(context.model, element, context=context)
		raise slot_error('Invalid {} type: {}'.format(self.name, element.type), path)

	def to_slot(self, obj):
		return Ref(obj.id)


class Param(object):
	"""
	@param slot: Slot (feature) name in the model element
	@param var: Python attribute name. By default it's the same as the slot name
	"""
	def __init__(self, slot, value_type, required=True, default=None, var=None):
		self.slot = slot
		if var is None:
			self.var = slot
		else:
			self.var = var
		self.type = None
		self.value_type = get_type(value_type)
		self.default = default
		if required:
			assert default is None, "Default does not make sense for a required field"
		self.required = required

	def set_default(self, obj, path):
		if self.required:
			raise slot_error('Required {} {} not set'.format(self.type, self.slot), path)
		setattr(obj, self.var, copy.copy(self.default))

	def set_from_slot(self, obj, context, value, path):
		setattr(obj, self.var, self.value_type.from_slot(context, value, path))

	def add_to_slots(self, obj, slots):
		value = getattr(obj, self.var, None)
		if value is None:
			if self.required:
				raise Exception("Required {} not set in object: {}".format(self.type, self.var))
			return
		slots[self.slot] = self.value_type.to_slot(value)


class Attribute(Param):
	def __init__(self, slot, value_type, required=True, default=None, var=None):
		Param.__init__(self, slot, value_type, required, default, var)
		self.type = 'attribute'


class Reference(Param):
	def __init__(self, slot, value_type, required=True, default=None, var=None):
		Param.__init__(self, slot, value_type, required, default, var)
		self.type = 'reference'

	def set_from_slot(self, obj, context, value, path):
		if isinstance(value, tuple):
			if len(value) != 1:
				raise slot_error('Expected exactly one reference, got {}'.format(len(value)), path)
			value = value[0]
		Param.set_from_slot(self, obj, context, value, path)


class AggregateReference(Reference):
	def __init__(self, slot, value_type, var=None):
		Reference.__init__(self, slot, value_type, required=False, default=[], var=var)

	def set_from_slot(self, obj, context, value, path):
		values = value if isinstance(value, tuple) else (value,)
		setattr(obj, self.var, [self.value_type.from_slot(context, v, path) for v in values])

	def add_to_slots(self, obj, slots):
		values = getattr(obj, self.var, None)
		if values:
			slots[self.slot] = tuple(self.value_type.to_slot(v) for v in values)


class Info(object):
	""" Small container for keeping track of what's been consumed """
	def __init__(self, element):
		self.slots = list(element.slots.keys())


class Reflection(object):
	def __init__(self, params=[], parent_cls=None, type=None):
		"""
		Construct an element reflection

		:param params: 		Attribute / Reference / AggregateReference list
		:param parent_cls: 	Parent class, to use its reflection as well
		:param type: 		MetaClass name of the reflected elements
		"""
		if parent_cls is not None:
			self.parent = parent_cls.REFL
		else:
			self.parent = None
		self.type = type
		if self.type is None and self.parent is not None:
			self.type = self.parent.type

		self.params = list(params)
		self.param_map = dict((param.slot, param) for param in self.params)
		self.vars = [param.var for param in self.params]

	@property
	def all_vars(self):
		if self.parent is None:
			return list(self.vars)
		return self.parent.all_vars + self.vars

	def set_from_element(self, obj, context, element, info=None):
		is_final = False
		if info is None:
			is_final = True
			info = Info(element)

		if self.parent:
			self.parent.set_from_element(obj, context, element, info)

		for param in self.params:
			path = context.path(element, param.slot)
			if param.slot in info.slots:
				param.set_from_slot(obj, context, element.slots[param.slot], path)
				info.slots.remove(param.slot)
			else:
				param.set_default(obj, path)

		if is_final:
			for slot in info.slots:
				on_error('Unknown slot {} on {}'.format(slot, context.path(element)))

	def add_to_slots(self, obj, slots):
		if self.parent:
			self.parent.add_to_slots(obj, slots)
		for param in self.params:
			param.add_to_slots(obj, slots)


class Object(YamlReflection):
	""" Python view of a model element """
	REFL = None
	id = None

	def get_refl_vars(self):
		return ['id'] + self.REFL.all_vars

	def check_valid(self):
		pass

	def post_read(self):
		pass

	def read_element(self, context, element):
		self.id = element.id
		self.REFL.set_from_element(self, context, element)
		self.post_read()
		self.check_valid()

	@classmethod
	def accepts(cls, element, mm):
		if cls.REFL.type is None:
			return True
		if mm is None:
			return element.type == cls.REFL.type
		return mm.is_subclass(element.type, cls.REFL.type)

	@classmethod
	def from_element(cls, model, element, mm=None, context=None):
		"""
		Builds the view of `element`, following references to other views.

		:param model: ModelInstance owning element
		:param element: Element
		:param mm: Metamodel of model
		:param context: shared Context, to reuse objects across reads
		"""
		if context is None:
			context = Context(model, mm)
		obj = context.objects.get(element.id)
		if isinstance(obj, cls):
			return obj
		if not cls.accepts(element, context.mm):
			raise slot_error('{} is a {}, not a {}'.format(element.id, element.type, cls.REFL.type),
							 context.path(element))
		obj = cls()
		context.objects[element.id] = obj
		obj.read_element(context, element)
		return obj

	def to_slots(self):
		slots = {}
		self.REFL.add_to_slots(self, slots)
		return slots

	def to_element(self, element_id=None):
		""" Creates an element of the reflected type holding this object's slots """
		self.check_valid()
		if element_id is None:
			element_id = self.id
		return Element(element_id, self.REFL.type, self.to_slots())


add_type('element_ref', RefType())
