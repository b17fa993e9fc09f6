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

import re
from dataclasses import dataclass
from fnmatch import fnmatchcase

from ..errors import ValidationError

WILDCARD = '*'
SEGMENT = re.compile(r'^[A-Za-z0-9_\-*]+$')


@dataclass(frozen=True)
class Pattern(object):
	"""
	`Class.Operation` name pattern. `*` matches any, possibly empty, run
	of characters; every other character matches itself.
	"""
	class_pattern: str
	op_pattern: str

	def matches(self, class_name, op_name):
		return fnmatchcase(class_name, self.class_pattern) and fnmatchcase(op_name, self.op_pattern)

	@property
	def is_exact(self):
		return WILDCARD not in self.class_pattern and WILDCARD not in self.op_pattern

	def __str__(self):
		return '{}.{}'.format(self.class_pattern, self.op_pattern)


def parse_pattern(text) -> Pattern:
	if not isinstance(text, str) or text.count('.') != 1:
		raise ValidationError('E_PATTERN', 'Expected <Class>.<Operation>, got {!r}'.format(text), path=str(text))
	class_pattern, op_pattern = text.split('.')
	for segment in [class_pattern, op_pattern]:
		if not segment:
			raise ValidationError('E_PATTERN', 'Empty segment in {!r}'.format(text), path=text)
		if not SEGMENT.match(segment):
			raise ValidationError('E_PATTERN', 'Invalid characters in segment {!r}'.format(segment), path=text)
	return Pattern(class_pattern, op_pattern)
