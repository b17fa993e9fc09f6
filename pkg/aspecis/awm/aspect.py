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

from ..errors import ValidationError
from ..model import reflection as refl

# Views over Aspectual Requirements models (AspectMM)

ADVICE_KINDS = ('before', 'around', 'after')

name_attribute = refl.Attribute('name', str)


class OperationTemplate(refl.Object):
	""" An operation an advice adds to the classes of its join points """
	def __init__(self, name=None, params=None, return_type=None):
		self.name = name
		self.params = params
		self.return_type = return_type

	def signature(self):
		return (self.name, self.params or '', self.return_type or '')

refl.reflect(OperationTemplate, type='OperationTemplate', params=[
	name_attribute,
	refl.Attribute('params', str, False),
	refl.Attribute('returnType', str, False, var='return_type'),
	])


class Pointcut(refl.Object):
	def __init__(self, name=None, type_pointcut=None, pattern=None):
		self.name = name
		self.type_pointcut = type_pointcut
		self.pattern = pattern

refl.reflect(Pointcut, type='Pointcut', params=[
	name_attribute,
	refl.Attribute('typePointcut', str, var='type_pointcut'),
	refl.Attribute('pattern', str),
	])


class Advice(refl.Object):
	def __init__(self, name=None, kind=None, body_advice=None, pointcut=None):
		self.name = name
		self.kind = kind
		self.body_advice = body_advice
		self.added_operations = []
		self.pointcut = pointcut

	def check_valid(self):
		if self.kind not in ADVICE_KINDS:
			raise ValidationError('E_ADVICEKIND', 'Advice {} has kind {!r}, expected one of {}'.format(
				self.name, self.kind, ', '.join(ADVICE_KINDS)), path=self.id)

refl.reflect(Advice, type='Advice', params=[
	name_attribute,
	refl.Attribute('kind', str),
	refl.Attribute('bodyAdvice', str, False, default='', var='body_advice'),
	refl.AggregateReference('addedOperations', OperationTemplate, var='added_operations'),
	refl.Reference('pointcut', Pointcut, False),
	])


class Aspect(refl.Object):
	def __init__(self, name=None, priority=0):
		self.name = name
		self.priority = priority
		self.advices = []
		self.pointcuts = []

refl.reflect(Aspect, type='Aspect', params=[
	name_attribute,
	refl.Attribute('priority', int, False, default=0),
	refl.AggregateReference('advices', Advice),
	refl.AggregateReference('pointcuts', Pointcut),
	])
