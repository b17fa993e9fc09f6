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

import logging
from collections import OrderedDict
from typing import Dict, List

from ..awm import ASPECT, WOVEN, ModelRoleSet, builtin, open_weaving
from ..awm import uml
from ..awm.aspect import Advice
from ..errors import Diagnostic, ValidationError
from ..model import reflection as refl
from ..model.conformance import check_conformance
from ..model.identity import SEPARATOR, element_id, index_of, resolve_id
from ..model.instance import ModelInstance, Ref, canonical_serialize
from .application import AdviceApplication, collect_applications
from .binding import BINDING_TYPE, WeaveBinding
from .conflict import DEFAULT_RESOLVE_MODE, resolve_conflicts

logger = logging.getLogger(__name__)

OPERATION_TYPE = 'Operation'


class WovenModel(object):
	def __init__(self, base, applications, provenance):
		"""
		Cooperative Requirements model: the core model, the operations the
		advices injected into it, and one WeaveBinding per application.

		:param base: 			ModelInstance conforming to WovenMM
		:param applications: 	the applications it was woven from
		:param provenance: 		injected operation id -> OperationTemplate identifier
		"""
		self._base = base
		self._applications = list(applications)
		self._provenance = OrderedDict(provenance)

		self._bindings = None

	@property
	def base(self):
		return self._base

	@property
	def applications(self):
		return self._applications

	@property
	def provenance(self) -> Dict[str, str]:
		return self._provenance

	@property
	def bindings(self):
		if self._bindings is None:
			self._bindings = self._base.elements_of_type(BINDING_TYPE)
		return self._bindings

	def serialize(self):
		return canonical_serialize(self._base)


class _Weaving(object):
	""" Working copy of the core model, updated one application at a time """
	def __init__(self, rs):
		self.rs = rs
		self.elements = OrderedDict((e.id, e) for e in rs.core.elements)
		self.core_index = index_of(rs.core)
		self.aspect_context = refl.Context(rs.aspect, builtin(ASPECT))
		self.provenance = OrderedDict()
		self.bindings = []
		self.diagnostics = []

	def children_named(self, class_element, name):
		out = []
		for key in ['attributes', 'operations']:
			for child_id in class_element.refs(key):
				child = self.elements.get(child_id)
				if child is not None and child.get('name') == name:
					out.append(child)
		return out

	def inject(self, class_id, template, template_id):
		"""
		Adds an Operation built from `template` to a class.

		:return: id of the new element, or None when an identical operation is already there
		"""
		class_element = self.elements[class_id]
		existing = self.children_named(class_element, template.name)
		op = uml.Operation(template.name, template.params, template.return_type)
		for child in existing:
			if child.type == OPERATION_TYPE and \
					uml.Operation.from_element(self.rs.core, child, mm=builtin(WOVEN)).signature() == op.signature():
				logger.warning('operation %s already in %s, not injected twice', template.name, class_id)
				return None
		if existing:
			self.diagnostics.append(Diagnostic(
				'E_NAMECLASH', '{}{}{}'.format(self.core_index.name_path(class_id), SEPARATOR, template.name),
				'Injected operation {} differs from the existing {} of the same name'.format(
					template_id, existing[0].id)))
			return None

		op_id = '{}{}{}'.format(class_id, SEPARATOR, template.name)
		if op_id in self.elements:
			self.diagnostics.append(Diagnostic('E_NAMECLASH', op_id, 'Element id {} is already taken'.format(op_id)))
			return None

		self.elements[op_id] = op.to_element(op_id)
		self.elements[class_id] = class_element.with_slots(
			operations=tuple(Ref(i) for i in class_element.refs('operations')) + (Ref(op_id),))
		self.provenance[op_id] = template_id
		logger.debug('injected %s from %s', op_id, template_id)
		return op_id

	def apply(self, app: AdviceApplication):
		advice_element = resolve_id(self.rs.aspect, app.advice_id)
		advice = Advice.from_element(self.rs.aspect, advice_element, context=self.aspect_context)
		class_id = resolve_id(self.rs.core, app.join_point.class_id).id

		binding = WeaveBinding.from_application(app)
		for template in advice.added_operations:
			template_id = element_id(self.rs.aspect, self.rs.aspect.get(template.id))
			op_id = self.inject(class_id, template, template_id)
			if op_id is not None:
				binding.injected.append(op_id)
		self.bindings.append(binding.to_element(binding.binding_id))

	def result(self):
		return list(self.elements.values()) + self.bindings


def apply_weave(rs: ModelRoleSet, apps: List[AdviceApplication]) -> WovenModel:
	"""
	Weaves resolved applications into a copy of the core model. Weaving is
	additive: core elements are kept, a class only gains operations.

	:param rs: ModelRoleSet
	:param apps: applications with conflicts resolved
	:return: WovenModel conforming to WovenMM
	"""
	weaving = _Weaving(rs)
	for app in apps:
		weaving.apply(app)
	if weaving.diagnostics:
		raise ValidationError.from_diagnostics(weaving.diagnostics)

	woven_mm = builtin(WOVEN)
	base = ModelInstance(rs.core.name, woven_mm.name, tuple(weaving.result()))
	diagnostics = check_conformance(base, woven_mm)
	if diagnostics:
		raise ValidationError.from_diagnostics(diagnostics, 'Woven model does not conform to {}'.format(woven_mm.name))

	logger.info('woven %s: %d operations injected, %d bindings', base.name, len(weaving.provenance), len(apps))
	return WovenModel(base, apps, weaving.provenance)


def weave(rs: ModelRoleSet, resolve_mode=DEFAULT_RESOLVE_MODE) -> WovenModel:
	"""
	Full weaving pipeline: open the weaving model, collect the advice
	applications, resolve conflicts, then apply.

	:param rs: ModelRoleSet
	:param resolve_mode: fail | priority
	"""
	view = open_weaving(rs)
	apps = collect_applications(rs, view)
	apps = resolve_conflicts(apps, resolve_mode)
	return apply_weave(rs, apps)
