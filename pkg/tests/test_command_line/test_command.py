import json
from collections import Counter
from typing import Dict, Iterator, Tuple
from unittest import TestCase

import click
from click.testing import CliRunner

from aristo.command_line.command import create_cli
from aristo.report import Report, Verdict
from aristo.version import ARISTO_VERSION_LABEL
from tests.utils import fixture_path, replacing_settings, \
    make_default_settings

COMMAND_INVOCATIONS: Dict[Tuple[str, ...], Tuple[str, ...]] = {
    ('version',): (),
    ('lattice', 'check'): ('-l', 'pentagon'),
    ('lattice', 'meet'): ('-l', 'chain-3', 'a', '1'),
    ('lattice', 'join'): ('-l', fixture_path('boolean4.json'), 'x', 'y'),
    ('lattice', 'implies'): ('-l', 'chain-3', '1', 'a'),
    ('lattice', 'not'): ('-l', 'chain-3', 'a'),
    ('space', 'check'): ('-s', fixture_path('discrete2.json')),
    ('space', 'alexandrov'): ('--points', 'p,q', '--leq', 'p<=q'),
    ('space', 'interior'): ('-s', 'sierpinski', '--set', 'q'),
    ('space', 'closure'): ('-s', 'sierpinski', '--set', 'p'),
    ('space', 'boundary'): ('-s', 'sierpinski', '--set', 'p'),
    ('space', 'connected'): (
        '-s', fixture_path('discrete2.json'), '--open', 'p,q'),
    ('space', 'continuous'): (
        '-s', 'sierpinski', '-t', 'sierpinski',
        '-m', fixture_path('swap.json')),
    ('space', 'opens-lattice'): ('-s', 'sierpinski'),
    ('line', 'meet'): ('(0, 2)', '(1, 3)'),
    ('line', 'join'): ('(0, 1)', '(1, 2)'),
    ('line', 'not'): ('(0, 1)',),
    ('line', 'implies'): ('(0, 2)', '(1, 3)'),
    ('line', 'boundary'): ('(0, 1)',),
    ('line', 'divide'): ('(0, 1)', '--at', '1/2'),
    ('line', 'compact'): ('(0, 1)',),
    ('line', 'germ'): ('--fn', 'abs', '--at', '0'),
    ('line', 'strata'): ('--fn', 'step'),
    ('line', 'ivt'): ('--fn=-1,2', '--a', '0', '--b', '2', '--target', '0'),
    ('line', 'image'): ('--fn=-1,2', '--a', '0', '--b', '2'),
    ('line', 'halving'): ('(0, 1)', '--steps', '3'),
    ('axioms', 'check'): ('--lattice', fixture_path('coarse2.json')),
    ('axioms', 'check-line'): (
        '--samples', fixture_path('halving.json'), '--random', '--count',
        '20'),
    ('axioms', 'check-points'): ('--point', '0', '--point', '1/2'),
    ('sheaf', 'check'): ('-p', fixture_path('constant.json')),
    ('sheaf', 'stalk'): (
        '-p', fixture_path('sierpinski_presheaf.json'), '--point', 'q'),
    ('sheaf', 'topos'): (
        '-p', fixture_path('sierpinski_presheaf.json'), '--closed', 'q'),
    ('sheaf', 'hull'): ('-s', 'sierpinski', '--perm', 'p=p,q=q', '--set', 'q'),
    ('nil', 'arith'): ('3,5', 'mul', '2,7'),
    ('nil', 'lift'): ('--poly', '0,-2,0,1', '--at', '2', '--order', '3'),
    ('nil', 'derive'): ('--poly', '0,-2,0,1', '--at', '2'),
    ('nil', 'leibniz'): ('--y', '3,5', '--z', '2,7'),
    ('logic', 'parse'): ('-F', '~~~p <-> ~p'),
    ('logic', 'eval'): ('-F', 'p | ~p', '-l', 'chain-3', '--assign', 'p=a'),
    ('logic', 'valid'): ('-F', 'p | ~p', '-l', 'chain-3'),
    ('logic', 'counter'): ('-F', '~~p -> p', '--max-size', '3'),
}
# Writes the user settings file, so it is only run in its own tests
UNREPEATABLE_COMMANDS = {('init-settings',)}

MODULE_OPERATIONS: Dict[str, Tuple[str, ...]] = {
    'lattice': (
        'build_lattice', 'meet', 'join', 'implies', 'pseudo_complement'),
    'space': (
        'validate_space', 'alexandrov_from_preorder', 'interior', 'closure',
        'boundary', 'is_connected_open', 'components', 'is_continuous',
        'opens_lattice'),
    'line': (
        'region_meet', 'region_join', 'region_not', 'region_implies',
        'region_boundary', 'divide', 'is_compact_complement', 'germ_at',
        'catastrophe_set', 'strata', 'ivt_witness', 'image_of_interval',
        'halving_chain'),
    'axioms': (
        'check_global_connectivity', 'check_local_connectivity',
        'check_divisibility', 'check_divisibility_line',
        'check_point_divisibility_line'),
    'sheaf': (
        'validate_presheaf', 'check_sheaf', 'stalk_at_point', 'topos_of',
        'invariant_hull'),
    'nil': (
        'add', 'mul', 'neg', 'lift_and_eval', 'derivative', 'leibniz_check'),
    'logic': ('parse', 'eval', 'is_valid', 'find_countermodel'),
}
COMMAND_OPERATIONS: Dict[Tuple[str, ...], Tuple[str, ...]] = {
    ('version',): (),
    ('init-settings',): (),
    ('lattice', 'check'): ('build_lattice',),
    ('lattice', 'meet'): ('meet',),
    ('lattice', 'join'): ('join',),
    ('lattice', 'implies'): ('implies',),
    ('lattice', 'not'): ('pseudo_complement',),
    ('space', 'check'): ('validate_space',),
    ('space', 'alexandrov'): ('alexandrov_from_preorder',),
    ('space', 'interior'): ('interior',),
    ('space', 'closure'): ('closure',),
    ('space', 'boundary'): ('boundary',),
    ('space', 'connected'): ('is_connected_open', 'components'),
    ('space', 'continuous'): ('is_continuous',),
    ('space', 'opens-lattice'): ('opens_lattice',),
    ('line', 'meet'): ('region_meet',),
    ('line', 'join'): ('region_join',),
    ('line', 'not'): ('region_not',),
    ('line', 'implies'): ('region_implies',),
    ('line', 'boundary'): ('region_boundary',),
    ('line', 'divide'): ('divide',),
    ('line', 'compact'): ('is_compact_complement',),
    ('line', 'germ'): ('germ_at',),
    ('line', 'strata'): ('catastrophe_set', 'strata'),
    ('line', 'ivt'): ('ivt_witness',),
    ('line', 'image'): ('image_of_interval',),
    ('line', 'halving'): ('halving_chain',),
    ('axioms', 'check'): (
        'check_global_connectivity', 'check_local_connectivity',
        'check_divisibility'),
    ('axioms', 'check-line'): ('check_divisibility_line',),
    ('axioms', 'check-points'): ('check_point_divisibility_line',),
    ('sheaf', 'check'): ('validate_presheaf', 'check_sheaf'),
    ('sheaf', 'stalk'): ('stalk_at_point',),
    ('sheaf', 'topos'): ('topos_of',),
    ('sheaf', 'hull'): ('invariant_hull',),
    ('nil', 'arith'): ('add', 'mul', 'neg'),
    ('nil', 'lift'): ('lift_and_eval',),
    ('nil', 'derive'): ('derivative',),
    ('nil', 'leibniz'): ('leibniz_check',),
    ('logic', 'parse'): ('parse',),
    ('logic', 'eval'): ('eval',),
    ('logic', 'valid'): ('is_valid',),
    ('logic', 'counter'): ('find_countermodel',),
}


def leaf_commands(group: click.Group, path: Tuple[str, ...] = ()
                  ) -> Iterator[Tuple[Tuple[str, ...], click.Command]]:
    for name, command in group.commands.items():
        if isinstance(command, click.Group):
            yield from leaf_commands(command, path + (name,))
        else:
            yield path + (name,), command


class CommandTestCase(TestCase):
    def setUp(self):
        self.cli = create_cli()
        self.runner = CliRunner()

    def invoke(self, *args):
        with replacing_settings(make_default_settings()):
            return self.runner.invoke(self.cli, list(args))

    def invoke_json(self, *args):
        result = self.invoke('--json', *args)
        return result, json.loads(result.output)


class TestExitCodes(CommandTestCase):
    def test_axioms_fail_on_coarse_space(self):
        result = self.invoke(
            'axioms', 'check', '--lattice', fixture_path('coarse2.json'))
        self.assertEqual(result.exit_code, 1, result.output)
        self.assertIn('witness: {divisibility: ({p,q})}', result.output)

    def test_derivative_is_a_value(self):
        result, report = self.invoke_json(
            'nil', 'derive', '--poly', '0,-2,0,1', '--at', '2')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(report['verdict'], 'value')
        self.assertEqual(report['value'], '10')

    def test_constant_presheaf_is_not_a_sheaf(self):
        result = self.invoke(
            'sheaf', 'check', '-p', fixture_path('constant.json'))
        self.assertEqual(result.exit_code, 1, result.output)
        self.assertIn('{p,q}', result.output)

    def test_malformed_json(self):
        result, report = self.invoke_json(
            'lattice', 'check', '-l', fixture_path('malformed.json'))
        self.assertEqual(result.exit_code, 2, result.output)
        self.assertEqual(report['verdict'], 'error')
        self.assertEqual(report['details'], {'error': 'InputParseError'})

    def test_missing_file(self):
        result = self.invoke(
            'space', 'check', '-s', fixture_path('not_there.json'))
        self.assertEqual(result.exit_code, 2, result.output)

    def test_unknown_command(self):
        result, report = self.invoke_json('nope')
        self.assertEqual(result.exit_code, 2, result.output)
        self.assertEqual(report['details'], {'error': 'UnknownCommand'})
        self.assertEqual(report['witness'], ['nope'])
        result = self.invoke('lattice', 'nope')
        self.assertEqual(result.exit_code, 2, result.output)

    def test_lattice_checks(self):
        self.assertEqual(
            self.invoke('lattice', 'check', '-l', 'pentagon').exit_code, 1)
        result = self.invoke('lattice', 'check', '-l', 'chain-3')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('| a  | 0 | 1 | 1 |', result.output)

    def test_lattice_operations(self):
        result, report = self.invoke_json(
            'lattice', 'implies', '-l', 'chain-3', '1', 'a')
        self.assertEqual(report['value'], 'a')
        result = self.invoke('lattice', 'meet', '-l', 'chain-3', 'a', 'z')
        self.assertEqual(result.exit_code, 2, result.output)

    def test_space_commands(self):
        discrete = fixture_path('discrete2.json')
        self.assertEqual(self.invoke(
            'space', 'connected', '-s', discrete, '--open', 'p,q',
        ).exit_code, 1)
        self.assertEqual(self.invoke(
            'space', 'connected', '-s', 'sierpinski', '--open', 'p,q',
        ).exit_code, 0)
        self.assertEqual(self.invoke(
            'space', 'continuous', '-s', 'sierpinski', '-t', 'sierpinski',
            '-m', fixture_path('swap.json'),
        ).exit_code, 1)
        _, report = self.invoke_json(
            'space', 'closure', '-s', 'sierpinski', '--set', 'p')
        self.assertEqual(report['value'], '{p,q}')

    def test_line_commands(self):
        _, report = self.invoke_json('line', 'divide', '(0, 1)', '--at', '1/2')
        self.assertEqual(report['value'], ['(0, 1/2)', '(1/2, 1)'])
        result = self.invoke('line', 'divide', '(0, 1)', '--at', '2')
        self.assertEqual(result.exit_code, 2, result.output)
        self.assertEqual(
            self.invoke('line', 'compact', '(0, 1)').exit_code, 1)
        _, report = self.invoke_json(
            'line', 'ivt', '--fn=-1,2', '--a', '0', '--b', '2',
            '--target', '0')
        self.assertEqual(report['value'], '1/2')

    def test_logic_commands(self):
        self.assertEqual(self.invoke(
            'logic', 'valid', '-F', 'p | ~p', '-l', 'chain-3').exit_code, 1)
        self.assertEqual(self.invoke(
            'logic', 'valid', '-F', 'p | ~p', '-l', 'boolean-4').exit_code, 0)
        result, report = self.invoke_json('logic', 'counter', '-F', '~~p -> p')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(report['value'], 'chain-3')
        result, report = self.invoke_json(
            'logic', 'counter', '-F', 'p -> p', '--max-size', '3')
        self.assertEqual(report['verdict'], 'holds')
        self.assertEqual(report['note'], 'no countermodel up to size 3')
        result = self.invoke('logic', 'parse', '-F', 'p &')
        self.assertEqual(result.exit_code, 2, result.output)

    def test_version(self):
        result = self.invoke('version')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip(), ARISTO_VERSION_LABEL)


class TestJsonOutput(CommandTestCase):
    def test_same_seed_gives_identical_output(self):
        args = (
            '--json', '--seed', '7', 'axioms', 'check-line', '--random',
            '--count', '30')
        first, second = self.invoke(*args), self.invoke(*args)
        self.assertEqual(first.exit_code, 0, first.output)
        self.assertEqual(first.output, second.output)
        self.assertEqual(json.loads(first.output)['seed'], 7)

    def test_every_command_is_repeatable(self):
        for path, arguments in COMMAND_INVOCATIONS.items():
            args = ('--json', '--seed', '0') + path + arguments
            with self.subTest(command=' '.join(path)):
                first, second = self.invoke(*args), self.invoke(*args)
                self.assertIn(first.exit_code, (0, 1), first.output)
                self.assertEqual(first.exit_code, second.exit_code)
                self.assertEqual(first.output, second.output)

    def test_reports_parse_back(self):
        result, serialised = self.invoke_json(
            'axioms', 'check', '--space', 'sierpinski', '--mode', 'as-written')
        report = Report.deserialise(serialised)
        self.assertEqual(report.exit_code, result.exit_code)
        self.assertEqual(report.mode, 'as-written')
        self.assertEqual(report.verdict, Verdict.Fails)
        self.assertEqual(serialised['schema_version'], 1)


class TestHelp(CommandTestCase):
    def test_every_command_has_help(self):
        result = self.invoke('--help')
        self.assertEqual(result.exit_code, 0, result.output)
        for name, command in self.cli.commands.items():
            result = self.invoke(name, '--help')
            self.assertEqual(result.exit_code, 0, name)
            if not isinstance(command, click.Group):
                continue
            for sub_name in command.commands:
                result = self.invoke(name, sub_name, '--help')
                self.assertEqual(
                    result.exit_code, 0, f"{name} {sub_name}")

    def test_every_command_is_exercised(self):
        paths = {path for path, _ in leaf_commands(self.cli)}
        self.assertEqual(
            paths, set(COMMAND_INVOCATIONS) | UNREPEATABLE_COMMANDS)

    def test_every_operation_has_exactly_one_command(self):
        paths = {path for path, _ in leaf_commands(self.cli)}
        self.assertEqual(paths, set(COMMAND_OPERATIONS))
        counts = Counter(
            operation
            for operations in COMMAND_OPERATIONS.values()
            for operation in operations
        )
        self.assertEqual({
            operation
            for operation, count in counts.items()
            if count != 1
        }, set())
        for module, operations in MODULE_OPERATIONS.items():
            for operation in operations:
                with self.subTest(operation=operation):
                    self.assertEqual(counts[operation], 1)
                    path, = (
                        path
                        for path, served in COMMAND_OPERATIONS.items()
                        if operation in served
                    )
                    self.assertEqual(path[0], module)
        self.assertEqual(
            set(counts),
            {
                operation
                for operations in MODULE_OPERATIONS.values()
                for operation in operations
            })

    def test_module_commands_serve_some_operation(self):
        for path, operations in COMMAND_OPERATIONS.items():
            with self.subTest(command=' '.join(path)):
                self.assertEqual(
                    bool(operations), path[0] in MODULE_OPERATIONS)
