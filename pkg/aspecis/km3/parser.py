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

from lark import Lark, Transformer, UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken
from lark.exceptions import VisitError

from ..errors import ParseError
from .metamodel import ATTRIBUTE, REFERENCE, Feature, MetaClass, Metamodel, validate_metamodel

logger = logging.getLogger(__name__)

KM3_GRAMMAR = r"""
start: "package" IDENT "{" klass* "}"

klass: "class" IDENT supers? "{" feature* "}"
supers: "extends" IDENT ("," IDENT)*

?feature: attribute
    | reference
attribute: "attribute" IDENT ":" IDENT ";"
reference: "reference" IDENT CONTAINER? ":" IDENT ";"

CONTAINER: "container"
IDENT: /[A-Za-z][A-Za-z0-9_\-]*/
COMMENT: /--[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

_parser = None


def get_parser():
	global _parser
	if _parser is None:
		_parser = Lark(KM3_GRAMMAR, parser='lalr')
	return _parser


class _Supers(list):
	pass


class Km3Transformer(Transformer):
	""" Builds Metamodel values from the KM3 parse tree """

	def __init__(self, source_name='<km3>'):
		Transformer.__init__(self)
		self.source_name = source_name

	def start(self, children):
		name, classes = children[0], children[1:]
		return Metamodel(str(name), tuple(classes))

	def supers(self, children):
		return _Supers(children)

	def klass(self, children):
		name = children[0]
		super_name = None
		features = []
		for child in children[1:]:
			if isinstance(child, _Supers):
				if len(child) > 1:
					raise ParseError(
						'E_CYCLE', 'Class {} extends several classes, only single inheritance is supported'.format(name),
						path=self.source_name, line=name.line, column=name.column)
				super_name = str(child[0])
			else:
				features.append(child)
		return MetaClass(str(name), super_name, tuple(features), line=name.line)

	def attribute(self, children):
		name, type_name = children
		return Feature(ATTRIBUTE, str(name), str(type_name), False, line=name.line)

	def reference(self, children):
		name, type_name = children[0], children[-1]
		container = len(children) == 3
		return Feature(REFERENCE, str(name), str(type_name), container, line=name.line)


def _describe(e):
	if isinstance(e, UnexpectedToken):
		expected = ', '.join(sorted(e.expected))
		return 'Unexpected token {!r}, expected one of: {}'.format(str(e.token), expected)
	if isinstance(e, UnexpectedCharacters):
		return 'Unexpected character {!r}'.format(e.char)
	if isinstance(e, UnexpectedEOF):
		return 'Unexpected end of input'
	return str(e).splitlines()[0]


def parse_km3(source, source_name='<km3>') -> Metamodel:
	"""
	Parses the KM3 subset (packages, classes, single inheritance,
	attributes, references with optional container).

	:param source: 		KM3 text (str, or UTF-8 bytes)
	:param source_name: used as the path of diagnostics
	:return: Metamodel with classes in source order
	"""
	if isinstance(source, bytes):
		source = source.decode('utf-8')
	source = source.lstrip('\ufeff')

	try:
		tree = get_parser().parse(source)
	except UnexpectedInput as e:
		line, column = getattr(e, 'line', -1), getattr(e, 'column', -1)
		if line is None or line < 0:
			lines = source.split('\n')
			line, column = len(lines), len(lines[-1]) + 1
		raise ParseError('E_PARSE', _describe(e), path=source_name, line=line, column=column)

	try:
		mm = Km3Transformer(source_name).transform(tree)
	except VisitError as e:
		raise e.orig_exc

	diagnostics = validate_metamodel(mm)
	if diagnostics:
		raise ParseError.from_diagnostics(diagnostics)

	logger.debug('parsed metamodel %s from %s (%d classes)', mm.name, source_name, len(mm.classes))
	return mm


def parse_km3_file(file_path) -> Metamodel:
	with open(file_path, 'r', encoding='utf-8') as f:
		return parse_km3(f.read(), source_name=str(file_path))
