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
from dataclasses import dataclass
from typing import List

from ..awm import ASPECT, ModelRoleSet, WeavingView, builtin
from ..awm.aspect import ADVICE_KINDS, Advice, Aspect
from ..errors import ValidationError
from ..model import reflection as refl
from ..model.identity import index_of, parent_of, resolve_id
from ..pointcut import JoinPoint, check_pointcut_type, match_pointcut, parse_pattern

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdviceApplication(object):
	"""
	One advice applied at one join point. order_index counts from 0
	within each (join point, kind) group.
	"""
	join_point: JoinPoint
	advice_id: str
	kind: str
	priority: int
	order_index: int = 0
	aspect_name: str = ''
	advice_name: str = ''
	body_advice: str = ''

	def group(self):
		return (self.join_point, self.kind)

	def rank_key(self):
		return (-self.priority, self.aspect_name, self.advice_name, self.advice_id)

	def sort_key(self):
		return self.join_point.sort_key() + (ADVICE_KINDS.index(self.kind), self.order_index)


@dataclass
class LinkSite(object):
	""" What one PointcutLink designates once its ends are read """
	link: object
	advice_id: str
	advice: Advice
	aspect: Aspect
	join_points: List[JoinPoint]

	@property
	def pointcut(self):
		return self.advice.pointcut


def read_link(rs: ModelRoleSet, link, context=None) -> LinkSite:
	"""
	Resolves the aspect end of a link to an Advice, matches the advice's
	pointcut over the core model and checks that the core end is one of
	the matched sites.

	:param rs: ModelRoleSet
	:param link: PointcutLink view
	:param context: reflection Context over rs.aspect, shared across links
	"""
	aspect_mm = builtin(ASPECT)
	if context is None:
		context = refl.Context(rs.aspect, aspect_mm)

	path = '{}/{}'.format(rs.weaving.name, link.name)
	advice_element = resolve_id(rs.aspect, link.aspect_ref)
	if not aspect_mm.is_subclass(advice_element.type, 'Advice'):
		raise ValidationError('E_NOADVICE', 'endAspect {} is a {}, not an Advice'.format(
			link.aspect_ref, advice_element.type), path=path)
	owner = parent_of(rs.aspect, advice_element, aspect_mm)
	if owner is None or not aspect_mm.is_subclass(owner.type, 'Aspect'):
		raise ValidationError('E_NOADVICE', 'Advice {} is not owned by an Aspect'.format(link.aspect_ref),
							  path=path)

	aspect = Aspect.from_element(rs.aspect, owner, context=context)
	advice = Advice.from_element(rs.aspect, advice_element, context=context)
	if advice.pointcut is None:
		raise ValidationError('E_NOPOINTCUT', 'Advice {} has no pointcut'.format(link.aspect_ref), path=path)

	check_pointcut_type(advice.pointcut.type_pointcut, path)
	pattern = parse_pattern(advice.pointcut.pattern)
	join_points = match_pointcut(rs.core, advice.pointcut.type_pointcut, pattern)

	core_id = index_of(rs.core).name_path(resolve_id(rs.core, link.core_ref).id)
	if not any(core_id in (jp.operation_id, jp.class_id) for jp in join_points):
		raise ValidationError('E_ENDNOTMATCHED', 'endCore {} is not selected by pointcut {} ({} {})'.format(
			core_id, advice.pointcut.name, advice.pointcut.type_pointcut, pattern), path=path)

	return LinkSite(link, link.aspect_ref, advice, aspect, join_points)


def order_applications(apps) -> List[AdviceApplication]:
	"""
	Deduplicates applications and numbers them within each (join point,
	kind) group: priority descending, then aspect name, then advice name.

	:return: applications sorted by join point, kind and order
	"""
	groups = OrderedDict()
	for app in apps:
		group = groups.setdefault(app.group(), OrderedDict())
		group.setdefault(app.advice_id, app)

	out = []
	for group in groups.values():
		for i, app in enumerate(sorted(group.values(), key=AdviceApplication.rank_key)):
			out.append(AdviceApplication(
				app.join_point, app.advice_id, app.kind, app.priority, i,
				app.aspect_name, app.advice_name, app.body_advice))
	return sorted(out, key=AdviceApplication.sort_key)


def site_applications(site: LinkSite) -> List[AdviceApplication]:
	return [AdviceApplication(jp, site.advice_id, site.advice.kind, site.aspect.priority, 0,
							  site.aspect.name, site.advice.name, site.advice.body_advice)
			for jp in site.join_points]


def read_links(rs: ModelRoleSet, view: WeavingView) -> List[LinkSite]:
	""" Reads every link, reporting the failures of all of them at once """
	context = refl.Context(rs.aspect, builtin(ASPECT))
	sites, diagnostics = [], []
	for link in view.links:
		try:
			sites.append(read_link(rs, link, context))
		except ValidationError as e:
			diagnostics += e.diagnostics
	if diagnostics:
		raise ValidationError.from_diagnostics(diagnostics)
	return sites


def collect_applications(rs: ModelRoleSet, view: WeavingView) -> List[AdviceApplication]:
	"""
	:param rs: ModelRoleSet the view was opened over
	:param view: WeavingView from open_weaving
	:return: ordered AdviceApplication list
	"""
	apps = []
	for site in read_links(rs, view):
		apps += site_applications(site)
	apps = order_applications(apps)
	logger.debug('collected %d advice applications from %d links', len(apps), len(view.links))
	return apps
