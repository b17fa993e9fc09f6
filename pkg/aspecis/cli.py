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

import argparse
import json
import logging
import sys

from .awm import CORE, builtin, load_role_set
from .errors import AspecisError, Diagnostic, ValidationError, sorted_diagnostics
from .km3 import parse_km3_file
from .model import check_conformance, parse_model_file, write_model_file
from .model.reflection import dump_yaml
from .pointcut import match_pointcut, parse_pattern
from .weaver import DEFAULT_RESOLVE_MODE, RESOLVE_MODES, explain_weaving, weave

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CONFLICT = 2
EXIT_IO = 3

FORMATS = ('text', 'json')


class UsageError(ValidationError):
	pass


class ArgumentParser(argparse.ArgumentParser):
	""" Reports bad command lines as E_USAGE diagnostics, exit 1 """
	def error(self, message):
		raise UsageError('E_USAGE', message, path=self.prog)


class Output(object):
	def __init__(self, format='text', out=None, err=None):
		"""
		Where a command writes: data to `out`, diagnostics to `err`.

		:param format: text | json
		"""
		self.format = format
		self.out = out if out is not None else sys.stdout
		self.err = err if err is not None else sys.stderr

	def data(self, text):
		self.out.write(text)
		if not text.endswith('\n'):
			self.out.write('\n')

	def diagnostics(self, diagnostics):
		diagnostics = sorted_diagnostics(diagnostics)
		if self.format == 'json':
			self.err.write(json.dumps([d.as_dict() for d in diagnostics], ensure_ascii=False) + '\n')
		else:
			for d in diagnostics:
				self.err.write(str(d) + '\n')


def cmd_validate(args, output):
	mm = parse_km3_file(args.metamodel)
	m = parse_model_file(args.model)
	diagnostics = check_conformance(m, mm)
	output.diagnostics(diagnostics)
	if diagnostics:
		return EXIT_VALIDATION
	if output.format == 'text':
		output.data('{} conforms to {}'.format(m.name, mm.name))
	return EXIT_OK


def cmd_match(args, output):
	pattern = parse_pattern(args.pattern)
	core = parse_model_file(args.core)
	diagnostics = check_conformance(core, builtin(CORE))
	if diagnostics:
		output.diagnostics(diagnostics)
		return EXIT_VALIDATION

	join_points = match_pointcut(core, args.type, pattern)
	if output.format == 'json':
		output.data(json.dumps([{'classId': jp.class_id, 'operationId': jp.operation_id, 'kind': jp.kind}
								for jp in join_points], indent=2))
		output.diagnostics([])
	else:
		for jp in join_points:
			output.data(jp.operation_id)
	return EXIT_OK


def cmd_weave(args, output):
	rs = load_role_set(args.core, args.aspect, args.weaving)
	woven = weave(rs, args.resolve)
	write_model_file(woven.base, args.out)
	logger.info('wrote %s', args.out)
	if output.format == 'json':
		output.diagnostics([])
	return EXIT_OK


def explain_header(report):
	return 'weaving {}: core {}, aspect {}\n{} links\n'.format(
		report['weaving'], report['core'], report['aspect'], len(report['links']))


def cmd_explain(args, output):
	rs = load_role_set(args.core, args.aspect, args.weaving)
	report = explain_weaving(rs)
	if output.format == 'json':
		output.data(json.dumps(report, indent=2, ensure_ascii=False))
		output.diagnostics([])
	else:
		output.data(explain_header(report) + dump_yaml(report))
	return EXIT_OK


def add_format(p):
	p.add_argument('--format', choices=FORMATS, default='text', help='diagnostics format')


def build_cli() -> ArgumentParser:
	parser = ArgumentParser(
		prog='aspecis',
		description='Weaves Aspectual Requirements into a Core model through an AWM weaving model.')
	parser.add_argument('-v', '--verbose', action='store_true', help='log pipeline steps to stderr')
	sub = parser.add_subparsers(dest='command', metavar='COMMAND', parser_class=ArgumentParser)
	sub.required = True

	p_validate = sub.add_parser('validate', help='check a model against a KM3 metamodel')
	p_validate.add_argument('-m', '--model', required=True, help='Model-JSON file')
	p_validate.add_argument('-M', '--metamodel', required=True, help='KM3 file')
	add_format(p_validate)
	p_validate.set_defaults(func=cmd_validate)

	p_match = sub.add_parser('match', help='list the join points a pointcut selects')
	p_match.add_argument('--core', required=True, help='Core Model-JSON file')
	p_match.add_argument('--type', required=True, help='call | execution')
	p_match.add_argument('--pattern', required=True, help='Class.Operation, with * wildcards')
	add_format(p_match)
	p_match.set_defaults(func=cmd_match)

	p_weave = sub.add_parser('weave', help='weave and write the woven model')
	p_weave.add_argument('--core', required=True)
	p_weave.add_argument('--aspect', required=True)
	p_weave.add_argument('--weaving', required=True)
	p_weave.add_argument('--out', required=True, help='woven Model-JSON file')
	p_weave.add_argument('--resolve', choices=RESOLVE_MODES, default=DEFAULT_RESOLVE_MODE,
						 help='conflicting around-advices: fail, or keep the dominant one')
	add_format(p_weave)
	p_weave.set_defaults(func=cmd_weave)

	p_explain = sub.add_parser('explain', help='report links, join points and applications')
	p_explain.add_argument('--core', required=True)
	p_explain.add_argument('--aspect', required=True)
	p_explain.add_argument('--weaving', required=True)
	add_format(p_explain)
	p_explain.set_defaults(func=cmd_explain)

	return parser


def _format_of(argv):
	argv = list(argv)
	for i, arg in enumerate(argv):
		if arg == '--format' and i + 1 < len(argv):
			return argv[i + 1] if argv[i + 1] in FORMATS else 'text'
		if arg.startswith('--format='):
			value = arg.split('=', 1)[1]
			return value if value in FORMATS else 'text'
	return 'text'


def main(argv=None) -> int:
	"""
	:param argv: arguments without the program name, sys.argv[1:] when None
	:return: 0 success, 1 validation or usage, 2 conflict, 3 I/O or parse
	"""
	if argv is None:
		argv = sys.argv[1:]
	output = Output(_format_of(argv))

	try:
		args = build_cli().parse_args(argv)
	except AspecisError as e:
		output.diagnostics(e.diagnostics)
		return e.exit_code
	except SystemExit as e:
		# --help
		return EXIT_OK if not e.code else EXIT_VALIDATION

	logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
						format='%(levelname)s %(name)s: %(message)s', force=True)

	try:
		return args.func(args, output)
	except AspecisError as e:
		output.diagnostics(e.diagnostics)
		return e.exit_code
	except UnicodeDecodeError as e:
		output.diagnostics([Diagnostic('E_IO', '', 'Input is not UTF-8 text: {}'.format(e.reason))])
		return EXIT_IO
	except OSError as e:
		output.diagnostics([Diagnostic('E_IO', str(e.filename or ''), e.strerror or str(e))])
		return EXIT_IO


if __name__ == '__main__':
	sys.exit(main())
