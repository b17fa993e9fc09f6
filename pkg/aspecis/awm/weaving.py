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
from dataclasses import dataclass

from ..errors import Diagnostic, ValidationError
from ..model import reflection as refl
from ..model.conformance import check_conformance
from ..model.identity import resolve_id
from ..model.instance import ModelInstance, parse_model_file
from .builtin import ASPECT, CORE, WEAVING, builtin

logger = logging.getLogger(__name__)

ROOT_TYPE = 'Weaving-Core_Aspect'
LINK_TYPE = 'Pointcut-Core_Aspect'


class WElement(refl.Object):
	def __init__(self, name=None, description=None):
		self.name = name
		self.description = description

refl.reflect(WElement, type='WElement', params=[
	refl.Attribute('name', str),
	refl.Attribute('description', str, False),
	])


class WModelRef(WElement):
	""" References an entire model, by name, with an optional file hint """
	def __init__(self, name=None, model_name=None, path=None):
		WElement.__init__(self, name)
		self.model_name = model_name
		self.path = path

refl.reflect(WModelRef, parent_cls=WElement, type='WModelRef', params=[
	refl.Attribute('modelName', str, var='model_name'),
	refl.Attribute('path', str, False),
	])


class WLinkEnd(WElement):
	def __init__(self, name=None, ref=None):
		WElement.__init__(self, name)
		self.ref = ref

refl.reflect(WLinkEnd, parent_cls=WElement, type='WLinkEnd', params=[
	refl.Attribute('ref', str),
	])


class EndCore(WLinkEnd):
	pass

refl.reflect(EndCore, parent_cls=WLinkEnd, type='EndCore')


class EndAspect(WLinkEnd):
	pass

refl.reflect(EndAspect, parent_cls=WLinkEnd, type='EndAspect')


class WLink(WElement):
	def __init__(self, name=None):
		WElement.__init__(self, name)
		self.ends = []

refl.reflect(WLink, parent_cls=WElement, type='WLink', params=[
	refl.AggregateReference('ends', refl.FactoryType('end', {
		'WLinkEnd': WLinkEnd,
		'EndCore': EndCore,
		'EndAspect': EndAspect,
		})),
	])


class PointcutLink(WLink):
	""" A Pointcut-Core_Aspect link: one Core end, one Aspect end """
	def __init__(self, name=None, end_core=None, end_aspect=None):
		WLink.__init__(self, name)
		self.end_core = end_core
		self.end_aspect = end_aspect

	@property
	def core_ref(self):
		return self.end_core.ref

	@property
	def aspect_ref(self):
		return self.end_aspect.ref

	def check_valid(self):
		for end in [self.end_core, self.end_aspect]:
			if not end.ref:
				raise ValidationError('E_ENDRESOLVE', 'Link {} has an empty end'.format(self.name), path=end.id)

refl.reflect(PointcutLink, parent_cls=WLink, type=LINK_TYPE, params=[
	refl.Reference('endCore', EndCore, var='end_core'),
	refl.Reference('endAspect', EndAspect, var='end_aspect'),
	])


link_factory = refl.FactoryType('link', {'WLink': WLink, LINK_TYPE: PointcutLink})


class WModel(WElement):
	def __init__(self, name=None):
		WElement.__init__(self, name)
		self.woven_models = []
		self.links = []

refl.reflect(WModel, parent_cls=WElement, type='WModel', params=[
	refl.AggregateReference('wovenModels', WModelRef, var='woven_models'),
	refl.AggregateReference('links', link_factory),
	])


class WeavingCoreAspect(WModel):
	def __init__(self, name=None, core=None, aspect=None):
		WModel.__init__(self, name)
		self.core = core
		self.aspect = aspect

refl.reflect(WeavingCoreAspect, parent_cls=WModel, type=ROOT_TYPE, params=[
	refl.Reference('Core', WModelRef, var='core'),
	refl.Reference('Aspect', WModelRef, var='aspect'),
	])


@dataclass(frozen=True)
class ModelRoleSet(object):
	""" Existing Requirements (core), Aspectual Requirements (aspect) and the weaving model """
	core: ModelInstance
	aspect: ModelInstance
	weaving: ModelInstance


def load_role_set(core_path, aspect_path, weaving_path) -> ModelRoleSet:
	return ModelRoleSet(parse_model_file(core_path), parse_model_file(aspect_path), parse_model_file(weaving_path))


ROLES = [('core', CORE), ('aspect', ASPECT), ('weaving', WEAVING)]


def check_roles(rs: ModelRoleSet):
	"""
	Conformance of the three models to their shipped metamodels.

	:return: diagnostics of all three models
	"""
	diagnostics = []
	for role, mm_name in ROLES:
		m = getattr(rs, role)
		try:
			diagnostics += check_conformance(m, builtin(mm_name))
		except ValidationError as e:
			diagnostics += e.diagnostics
	return diagnostics


class WeavingView(object):
	def __init__(self, root, links):
		"""
		Typed, validated view of a weaving model.

		:param root: 	WeavingCoreAspect
		:param links: 	list of PointcutLink, in model order
		"""
		self._root = root
		self._links = list(links)

	@property
	def root(self):
		return self._root

	@property
	def core_ref(self):
		return self._root.core

	@property
	def aspect_ref(self):
		return self._root.aspect

	@property
	def links(self):
		return self._links

	@property
	def name(self):
		return self._root.name


def _resolve_end(m, ident, link, role):
	try:
		return resolve_id(m, ident)
	except ValidationError as e:
		raise ValidationError('E_ENDRESOLVE', '{} end {} of link {} does not resolve in {}: {}'.format(
			role, ident, link.name, m.name, e.message), path='{}/{}'.format(link.name, role))


def open_weaving(rs: ModelRoleSet) -> WeavingView:
	"""
	Checks the three models and opens the weaving model. No partial view
	is ever returned: every failure raises.

	:param rs: ModelRoleSet
	:return: WeavingView
	"""
	diagnostics = check_roles(rs)
	if diagnostics:
		raise ValidationError.from_diagnostics(diagnostics)

	awm = builtin(WEAVING)
	weaving = rs.weaving
	roots = [e for e in weaving.elements if awm.is_subclass(e.type, ROOT_TYPE)]
	if len(roots) != 1:
		raise ValidationError('E_ROOT', 'Expected one {} element, found {}'.format(ROOT_TYPE, len(roots)),
							  path=weaving.name)

	context = refl.Context(weaving, awm)
	root = WeavingCoreAspect.from_element(weaving, roots[0], context=context)

	for ref, m in [(root.core, rs.core), (root.aspect, rs.aspect)]:
		if ref.model_name != m.name:
			diagnostics.append(Diagnostic('E_MODELREF', '{}/{}'.format(weaving.name, ref.id),
				'{} references model {}, got {}'.format(ref.name, ref.model_name, m.name)))
	if root.core.model_name == root.aspect.model_name:
		diagnostics.append(Diagnostic('E_MODELREF', '{}/{}'.format(weaving.name, roots[0].id),
			'Core and Aspect both reference {}'.format(root.core.model_name)))
	if diagnostics:
		raise ValidationError.from_diagnostics(diagnostics)

	links = [PointcutLink.from_element(weaving, e, context=context)
			 for e in weaving.elements if awm.is_subclass(e.type, LINK_TYPE)]

	for link in links:
		for ident, m, role in [(link.core_ref, rs.core, 'endCore'), (link.aspect_ref, rs.aspect, 'endAspect')]:
			try:
				_resolve_end(m, ident, link, role)
			except ValidationError as e:
				diagnostics += e.diagnostics
	if diagnostics:
		raise ValidationError.from_diagnostics(diagnostics)

	logger.debug('opened weaving %s: %d links', root.name, len(links))
	return WeavingView(root, links)


def link_kind(lk: PointcutLink, rs: ModelRoleSet):
	"""
	MetaClass names of the two resolved ends, e.g. ('Operation', 'Advice')
	"""
	core_end = _resolve_end(rs.core, lk.core_ref, lk, 'endCore')
	aspect_end = _resolve_end(rs.aspect, lk.aspect_ref, lk, 'endAspect')
	return (core_end.type, aspect_end.type)
