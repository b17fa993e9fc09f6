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

from ..model import reflection as refl

# Views over Core models (CoreMM) and the Core part of woven models (WovenMM)

name_attribute = refl.Attribute('name', str)


class Attribute(refl.Object):
	def __init__(self, name=None, type=None):
		self.name = name
		self.type = type

refl.reflect(Attribute, type='Attribute', params=[
	name_attribute,
	refl.Attribute('type', str, False),
	])


class Operation(refl.Object):
	def __init__(self, name=None, params=None, return_type=None):
		self.name = name
		self.params = params
		self.return_type = return_type

	def signature(self):
		return (self.name, self.params or '', self.return_type or '')

refl.reflect(Operation, type='Operation', params=[
	name_attribute,
	refl.Attribute('params', str, False),
	refl.Attribute('returnType', str, False, var='return_type'),
	])


class Class(refl.Object):
	def __init__(self, name=None):
		self.name = name
		self.attributes = []
		self.operations = []

	def operation(self, name):
		for op in self.operations:
			if op.name == name:
				return op
		return None

refl.reflect(Class, type='Class', params=[
	name_attribute,
	refl.AggregateReference('attributes', Attribute),
	refl.AggregateReference('operations', Operation),
	])
