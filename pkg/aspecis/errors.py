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

from dataclasses import dataclass
from typing import Iterable, List, Optional


@dataclass(frozen=True)
class Diagnostic(object):
	""" A single finding, located by model/element/feature coordinates """
	code: str
	path: str
	message: str
	line: Optional[int] = None
	column: Optional[int] = None

	def as_dict(self):
		out = {'code': self.code, 'path': self.path, 'message': self.message}
		if self.line is not None:
			out['line'] = self.line
			out['column'] = self.column
		return out

	def sort_key(self):
		return (self.code, self.path, self.message)

	def __str__(self):
		where = self.path
		if self.line is not None:
			where = '{}:{}:{}'.format(self.path, self.line, self.column)
		return '{} {}: {}'.format(self.code, where, self.message)


def sorted_diagnostics(diagnostics: Iterable[Diagnostic]) -> List[Diagnostic]:
	return sorted(diagnostics, key=Diagnostic.sort_key)


class AspecisError(Exception):
	"""
	Base error. Carries one or more diagnostics and the exit code the
	command line reports for it.
	"""
	exit_code = 1

	def __init__(self, code, message, path='', line=None, column=None, diagnostics=None):
		self.code = code
		self.message = message
		self.path = path
		if diagnostics is None:
			diagnostics = [Diagnostic(code, path, message, line, column)]
		self.diagnostics = list(diagnostics)
		Exception.__init__(self, str(self.diagnostics[0]) if self.diagnostics else message)

	@classmethod
	def from_diagnostics(cls, diagnostics, message=None):
		diagnostics = sorted_diagnostics(diagnostics)
		assert len(diagnostics), 'At least one diagnostic is needed'
		first = diagnostics[0]
		return cls(first.code, message or first.message, first.path, diagnostics=diagnostics)

	@property
	def codes(self):
		return [d.code for d in self.diagnostics]


class ParseError(AspecisError):
	""" Malformed input text (KM3 or Model-JSON) """
	exit_code = 3


class ValidationError(AspecisError):
	""" Well-formed input that breaks a structural or weaving rule """
	exit_code = 1


class ConflictError(AspecisError):
	""" Around-advices competing for one join point without a dominant one """
	exit_code = 2

	def __init__(self, code, message, path='', conflicts=(), diagnostics=None):
		AspecisError.__init__(self, code, message, path, diagnostics=diagnostics)
		self.conflicts = list(conflicts)
