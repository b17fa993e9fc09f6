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

# Elements the weaver adds to the woven model (WovenMM)

BINDING_TYPE = 'WeaveBinding'


class WeaveBinding(refl.Object):
	"""
	Records one advice application: where, which advice, in which order,
	and the operations it injected.
	"""
	def __init__(self, join_point_ref=None, join_point_kind=None, advice_name=None, advice_ref=None,
				 aspect_name=None, kind=None, order_index=0, priority=0, body_advice=''):
		self.join_point_ref = join_point_ref
		self.join_point_kind = join_point_kind
		self.advice_name = advice_name
		self.advice_ref = advice_ref
		self.aspect_name = aspect_name
		self.kind = kind
		self.order_index = order_index
		self.priority = priority
		self.body_advice = body_advice
		self.injected = []

	@classmethod
	def from_application(cls, app):
		return cls(app.join_point.operation_id, app.join_point.kind, app.advice_name, app.advice_id,
				   app.aspect_name, app.kind, app.order_index, app.priority, app.body_advice)

	@property
	def binding_id(self):
		return 'weave:{}:{}:{}:{}'.format(self.join_point_ref, self.join_point_kind, self.kind, self.order_index)

refl.reflect(WeaveBinding, type=BINDING_TYPE, params=[
	refl.Attribute('joinPointRef', str, var='join_point_ref'),
	refl.Attribute('joinPointKind', str, var='join_point_kind'),
	refl.Attribute('adviceName', str, var='advice_name'),
	refl.Attribute('adviceRef', str, var='advice_ref'),
	refl.Attribute('aspectName', str, var='aspect_name'),
	refl.Attribute('kind', str),
	refl.Attribute('orderIndex', int, var='order_index'),
	refl.Attribute('priority', int, False, default=0),
	refl.Attribute('bodyAdvice', str, False, default='', var='body_advice'),
	refl.AggregateReference('injected', 'element_ref'),
	])
