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
from typing import List, NamedTuple, Optional, Tuple

from ..errors import ConflictError, Diagnostic, ValidationError
from ..pointcut import JoinPoint
from .application import AdviceApplication, order_applications

logger = logging.getLogger(__name__)

AROUND = 'around'

FAIL = 'fail'
PRIORITY = 'priority'
RESOLVE_MODES = (FAIL, PRIORITY)
DEFAULT_RESOLVE_MODE = FAIL


class Contender(NamedTuple):
	advice_id: str
	priority: int


@dataclass(frozen=True)
class Conflict(object):
	""" Two or more around-advices at one join point """
	join_point: Optional[JoinPoint]
	contenders: Tuple[Contender, ...]
	resolution: Optional[str] = None

	def __post_init__(self):
		# contenders may be given as plain (advice id, priority) pairs
		object.__setattr__(self, 'contenders', tuple(Contender(*x) for x in self.contenders))

	@property
	def path(self):
		return self.join_point.operation_id if self.join_point is not None else ''

	def describe(self):
		return ', '.join('{} (priority {})'.format(c.advice_id, c.priority) for c in self.contenders)

	def diagnostic(self):
		return Diagnostic('E_CONFLICT', self.path, 'No dominant around-advice among {}'.format(self.describe()))


def dominant(contenders) -> Optional[str]:
	""" Advice with the strictly maximal priority, None on a tie at the maximum """
	top = max(c.priority for c in contenders)
	winners = [c.advice_id for c in contenders if c.priority == top]
	return winners[0] if len(winners) == 1 else None


def detect_conflicts(apps) -> List[Conflict]:
	"""
	One Conflict per join point holding at least two around applications.
	Stacked before/after advices are never a conflict.
	"""
	arounds = OrderedDict()
	for app in sorted(apps, key=AdviceApplication.sort_key):
		if app.kind == AROUND:
			arounds.setdefault(app.join_point, []).append(app)

	conflicts = []
	for join_point, group in arounds.items():
		if len(group) < 2:
			continue
		contenders = tuple(sorted([Contender(a.advice_id, a.priority) for a in group],
								  key=lambda c: (-c.priority, c.advice_id)))
		conflicts.append(Conflict(join_point, contenders, dominant(contenders)))
	logger.debug('%d conflicts', len(conflicts))
	return conflicts


def resolve_dominant(c: Conflict) -> str:
	"""
	:param c: Conflict with at least two contenders
	:return: advice id of the dominant contender
	"""
	if len(c.contenders) < 2:
		raise ValueError('A conflict needs two contenders, got {}'.format(len(c.contenders)))
	winner = dominant(c.contenders)
	if winner is None:
		raise ConflictError('E_CONFLICT', 'No dominant around-advice among {}'.format(c.describe()),
							path=c.path, conflicts=[c])
	return winner


def resolve_conflicts(apps, resolve_mode=DEFAULT_RESOLVE_MODE) -> List[AdviceApplication]:
	"""
	Applies the resolution mode to the conflicts of `apps`.

	:param apps: ordered AdviceApplication list
	:param resolve_mode: 	fail: any conflict raises ConflictError;
							priority: the dominant around-advice of each conflict is kept
	:return: surviving applications, renumbered
	"""
	if resolve_mode not in RESOLVE_MODES:
		raise ValidationError('E_USAGE', 'Resolve mode {!r} is not one of {}'.format(
			resolve_mode, ', '.join(RESOLVE_MODES)))

	conflicts = detect_conflicts(apps)
	if not conflicts:
		return list(apps)

	unresolved = conflicts if resolve_mode == FAIL else [c for c in conflicts if c.resolution is None]
	if unresolved:
		raise ConflictError('E_CONFLICT', '{} unresolved conflicts'.format(len(unresolved)),
							conflicts=unresolved, diagnostics=[c.diagnostic() for c in unresolved])

	dropped = set()
	for c in conflicts:
		winner = resolve_dominant(c)
		logger.info('around-advice %s dominates at %s', winner, c.path)
		dropped.update((c.join_point, x.advice_id) for x in c.contenders if x.advice_id != winner)
	kept = [a for a in apps if a.kind != AROUND or (a.join_point, a.advice_id) not in dropped]
	return order_applications(kept)
