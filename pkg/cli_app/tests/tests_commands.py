import json
import os
import tempfile
from io import StringIO
from unittest import mock

import openpyxl

from django.core.management import CommandError, call_command
from django.test import SimpleTestCase, override_settings

from cli_app.services.identities import SELECTORS, Selector
from schubert_app.services import IdentityReport


def run(command: str, *args, **options) -> str:
    out = StringIO()
    call_command(command, *args, stdout=out, stderr=StringIO(), **options)
    return out.getvalue()


class PolyCommandTest(SimpleTestCase):
    """ Тесты команды poly """

    def assertExitCode(self, code: int, *args, **options):
        with self.assertRaises(CommandError) as raised:
            run('poly', *args, **options)
        self.assertEqual(raised.exception.returncode, code)

    def test_single_polynomial(self):
        self.assertEqual(run('poly', family='A', rank=2, element='1').strip(), 'x1 - t1')

    def test_identity_element(self):
        self.assertEqual(run('poly', family='A', rank=2, element='').strip(), '1')

    def test_one_line_notation(self):
        self.assertEqual(run('poly', family='A', rank=3, element='[2,3,1]').strip(),
                         run('poly', family='A', rank=3, element='1,2').strip())

    def test_full_table_order(self):
        lines = run('poly', family='A', rank=3).strip().splitlines()
        self.assertEqual(len(lines), 6)
        self.assertEqual(lines[0], '[1,2,3]: 1')
        self.assertEqual(lines[1], '[2,1,3]: x1 - t1')
        self.assertTrue(lines[-1].startswith('[3,2,1]: '))

    def test_json_table(self):
        data = json.loads(run('poly', family='A', rank=3, format='json'))
        self.assertEqual(data['family'], 'A')
        self.assertEqual([entry['element'] for entry in data['table']], [[], [1], [2], [1, 2], [2, 1], [1, 2, 1]])
        self.assertEqual(data['table'][3]['one_line'], [2, 3, 1])

    def test_gkm_restriction_table(self):
        lines = run('poly', family='B', rank=2, gkm=True, element='1').strip().splitlines()
        self.assertEqual(len(lines), 2)
        self.assertTrue(lines[0].startswith('w \\ u | e | 1 | 2 | 1,2'))
        self.assertEqual(lines[1].split(' | '), [
            '1', '0', '-t1 + t2', '0', '-t1 + t2', '-t1 - t2', '-2*t1', '-t1 - t2', '-2*t1',
        ])

    def test_latex(self):
        text = run('poly', family='A', rank=2, format='latex')
        self.assertTrue(text.startswith('\\documentclass{standalone}'))
        self.assertIn('\\begin{tabular}{ll}', text)
        self.assertIn('\\end{tabular}', text)

    def test_xlsx(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'table.xlsx')
            run('poly', family='A', rank=3, format='xlsx', output=path)
            sheet = openpyxl.load_workbook(path).active
            self.assertEqual(sheet['A1'].value, 'w')
            self.assertEqual(sheet['B3'].value, 'x1 - t1')
            self.assertEqual(sheet.max_row, 7)

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'table.txt')
            self.assertEqual(run('poly', family='A', rank=2, element='1', output=path), '')
            with open(path) as file:
                self.assertEqual(file.read(), 'x1 - t1\n')

    def test_exit_codes(self):
        self.assertExitCode(2, family='A', rank=6)
        self.assertExitCode(2, family='B', rank=4)
        self.assertExitCode(3, family='A', rank=2, element='7')
        self.assertExitCode(3, family='A', rank=2, element='1,x')
        self.assertExitCode(3, family='B', rank=2)
        self.assertExitCode(3, family='E', rank=6)
        self.assertExitCode(3, family='A', rank=2, format='pdf')
        self.assertExitCode(3, family='A', rank=2, format='xlsx')


class VerifyCommandTest(SimpleTestCase):
    """ Тесты команды verify """

    def verify(self, identity: str, **options) -> dict:
        return json.loads(run('verify', identity, format='json', **options))

    def assertExitCode(self, code: int, *args, **options):
        with self.assertRaises(CommandError) as raised:
            run('verify', *args, **options)
        self.assertEqual(raised.exception.returncode, code)

    def test_coproduct_sweep(self):
        data = self.verify('coproduct', family='A', rank=3)
        self.assertTrue(data['pass'])
        self.assertEqual(data['elements'], 6)
        self.assertEqual([report['substitutions'] for report in data['reports']], [36] * 6)
        self.assertEqual(data['reports'][-1]['element'], [1, 2, 1])

    def test_antipode_sweep(self):
        data = self.verify('antipode', family='A', rank=2)
        self.assertTrue(data['pass'])
        self.assertEqual(data['elements'], 2)

    def test_element_filter(self):
        data = self.verify('specialized', family='A', rank=3, element='2,1')
        self.assertEqual([report['element'] for report in data['reports']], [[2, 1]])

    @override_settings(RANDOM_SAMPLES=5)
    def test_total_leibniz_echoes_seed(self):
        data = self.verify('total-leibniz', family='B', rank=2, seed=42)
        self.assertTrue(data['pass'])
        self.assertEqual(data['seed'], 42)
        self.assertEqual(data['reports'][1]['details']['seed'], 42)
        text = run('verify', 'total-leibniz', family='B', rank=2, seed=42)
        self.assertIn('seed=42', text)
        self.assertIn('total-leibniz [-] PASS', text)
        self.assertIn('total-leibniz B2: PASS, 2 reports', text)

    @override_settings(RANDOM_SAMPLES=3)
    def test_convolution(self):
        data = self.verify('convolution', family='A', rank=2)
        self.assertTrue(data['pass'])
        self.assertEqual(data['reports'][0]['details']['convention'],
                         {'sigma': 'identity', 'tau': 'identity', 'sign': 'plus'})
        self.assertExitCode(2, 'convolution', family='A', rank=4)

    def test_gkm_selectors_any_family(self):
        for identity in ('gkm-antipode', 'gkm-characterization'):
            self.assertTrue(self.verify(identity, family='C', rank=2)['pass'])

    def test_determinism(self):
        first = run('verify', 'antipode', family='A', rank=3, format='json', seed=42)
        second = run('verify', 'antipode', family='A', rank=3, format='json', seed=42)
        self.assertEqual(first, second)

    def test_parallel_sweep_keeps_order(self):
        serial = run('verify', 'delta', family='A', rank=3, format='json', parallelism=1)
        parallel = run('verify', 'delta', family='A', rank=3, format='json', parallelism=3)
        self.assertEqual(serial, parallel)

    def test_failure_exit_code(self):
        failing = Selector('always-fail', True, True, lambda w, config: IdentityReport.for_element(
            w, 'always-fail', passed=False, witnesses=[['forced']],
        ))
        with mock.patch.dict(SELECTORS, {'always-fail': failing}):
            self.assertExitCode(1, 'always-fail', family='A', rank=2)

    def test_exit_codes(self):
        self.assertExitCode(3, 'no-such-identity', family='A', rank=2)
        self.assertExitCode(3, 'coproduct', family='B', rank=2)
        self.assertExitCode(2, 'coproduct', family='A', rank=5)
        self.assertExitCode(3, 'antipode', family='A', rank=2, parallelism=0)

    def test_xlsx_report(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'reports.xlsx')
            run('verify', 'support', family='A', rank=3, format='xlsx', output=path)
            sheet = openpyxl.load_workbook(path).active
            self.assertEqual([cell.value for cell in sheet[1]],
                             ['element', 'identity', 'status', 'substitutions', 'witnesses'])
            self.assertEqual(sheet.max_row, 7)
            self.assertEqual(sheet['C2'].value, 'PASS')


class SelftestCommandTest(SimpleTestCase):
    """ Тесты команды selftest и эталонных файлов """

    def test_shipped_goldens(self):
        self.assertIn('selftest: PASS', run('selftest'))

    def test_regenerate_is_deterministic(self):
        with tempfile.TemporaryDirectory() as first, tempfile.TemporaryDirectory() as second:
            run('selftest', regenerate=True, golden_dir=first)
            run('selftest', regenerate=True, golden_dir=second)
            self.assertEqual(sorted(os.listdir(first)), ['conventions.json', 'gkm_A2.json', 'gkm_B2.json'])
            for name in os.listdir(first):
                with open(os.path.join(first, name)) as a, open(os.path.join(second, name)) as b:
                    self.assertEqual(a.read(), b.read())
            self.assertIn('selftest: PASS', run('selftest', golden_dir=first))

    def test_missing_golden(self):
        with tempfile.TemporaryDirectory() as directory:
            with self.assertRaises(CommandError) as raised:
                run('selftest', golden_dir=directory)
            self.assertEqual(raised.exception.returncode, 4)

    def test_corrupted_sign(self):
        with tempfile.TemporaryDirectory() as directory:
            run('selftest', regenerate=True, golden_dir=directory)
            path = os.path.join(directory, 'conventions.json')
            with open(path) as file:
                data = json.load(file)
            data['gkm']['convention']['sigma'] = 1
            with open(path, 'w') as file:
                json.dump(data, file)
            out = StringIO()
            with self.assertRaises(CommandError) as raised:
                call_command('selftest', golden_dir=directory, stdout=out, stderr=StringIO())
            self.assertEqual(raised.exception.returncode, 1)
            self.assertIn('-      "sigma": 1', out.getvalue())
            self.assertIn('+      "sigma": -1', out.getvalue())
