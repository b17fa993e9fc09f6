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

from ..awm import ModelRoleSet, link_kind, open_weaving
from .application import order_applications, read_links, site_applications
from .conflict import detect_conflicts

logger = logging.getLogger(__name__)


def application_summary(app):
	return OrderedDict([
		('joinPoint', app.join_point.operation_id),
		('joinPointKind', app.join_point.kind),
		('kind', app.kind),
		('advice', app.advice_id),
		('aspect', app.aspect_name),
		('priority', app.priority),
		('orderIndex', app.order_index),
	])


def explain_weaving(rs: ModelRoleSet):
	"""
	Traceability report of a weaving: per link its resolved ends, the
	kind of link, the matched join points and the resulting applications.
	Conflicts are reported, not raised.

	:param rs: ModelRoleSet
	:return: OrderedDict, ready for YAML or JSON rendering
	"""
	view = open_weaving(rs)
	sites = read_links(rs, view)

	apps = []
	for site in sites:
		apps += site_applications(site)
	apps = order_applications(apps)

	links = []
	for site in sites:
		join_points = set(site.join_points)
		pointcut = site.pointcut
		links.append(OrderedDict([
			('name', site.link.name),
			('endCore', site.link.core_ref),
			('endAspect', site.link.aspect_ref),
			('linkKind', list(link_kind(site.link, rs))),
			('pointcut', OrderedDict([
				('name', pointcut.name),
				('typePointcut', pointcut.type_pointcut),
				('pattern', pointcut.pattern),
			])),
			('joinPoints', [jp.operation_id for jp in site.join_points]),
			('applications', [application_summary(a) for a in apps
							  if a.advice_id == site.advice_id and a.join_point in join_points]),
		]))

	conflicts = [OrderedDict([
		('joinPoint', c.path),
		('contenders', [OrderedDict([('advice', x.advice_id), ('priority', x.priority)]) for x in c.contenders]),
		('dominant', c.resolution),
	]) for c in detect_conflicts(apps)]

	logger.debug('explained %s: %d links', view.name, len(links))
	return OrderedDict([
		('weaving', view.name),
		('core', view.core_ref.model_name),
		('aspect', view.aspect_ref.model_name),
		('links', links),
		('conflicts', conflicts),
	])
