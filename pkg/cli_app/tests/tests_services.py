import json

from django.test import SimpleTestCase, override_settings

from cli_app.services.goldens import (
    CONVENTIONS_FILE,
    compare_conventions,
    compare_gkm_table,
    gkm_table_payload,
    golden_files,
)
from cli_app.services.identities import SELECTORS, check_scope, get_selector, run_sweep, verify_one
from cli_app.services.renderers import element_label, render_reports, report_label, report_summary
from cli_app.services.run_config import RunConfig, exit_code_for
from config.exceptions import (
    ConfigurationError,
    ConventionError,
    GoldenFileError,
    ResourceLimitError,
    SchubertLabError,
    UsageError,
)
from schubert_app.tasks import verify_element
from weyl_app.services import build_root_system, parse_element


class RunConfigTest(SimpleTestCase):
    """ Тесты параметров запуска """

    def test_from_options(self):
        config = RunConfig.from_options({'family': 'b', 'rank': 2, 'seed': 0, 'format': None}, 'gkm-antipode')
        self.assertEqual(config.family, 'B')
        self.assertEqual(config.seed, 0)
        self.assertEqual(config.output_format, 'text')
        self.assertEqual(config.identity, 'gkm-antipode')

    @override_settings(DEFAULT_SEED=7, DEFAULT_PARALLELISM=2)
    def test_defaults_from_settings(self):
        config = RunConfig.from_options({'family': 'A', 'rank': 3})
        self.assertEqual(config.seed, 7)
        self.assertEqual(config.parallelism, 2)

    def test_family_a_rank_counts_variables(self):
        rs = RunConfig(family='A', rank=3).root_system()
        self.assertEqual(rs.name, 'A2')
        self.assertEqual(rs.ambient_dim, 3)
        self.assertEqual(RunConfig(family='C', rank=3).root_system().name, 'C3')

    def test_validate(self):
        self.assertRaises(UsageError, RunConfig(family='A', rank=3, output_format='html').validate)
        self.assertRaises(UsageError, RunConfig(family='A', rank=3, output_format='xlsx').validate)
        self.assertRaises(UsageError, RunConfig(family='A', rank=3, parallelism=0).validate)
        self.assertRaises(ConfigurationError, RunConfig(family='A', rank=1).validate)
        self.assertRaises(ResourceLimitError, RunConfig(family='D', rank=5).validate)
        RunConfig(family='D', rank=5, allow_large=True).validate()

    def test_elements(self):
        self.assertEqual(len(RunConfig(family='B', rank=2).elements()), 8)
        self.assertEqual([w.word for w in RunConfig(family='A', rank=3, element='[3,2,1]').elements()], [(1, 2, 1)])

    def test_exit_codes(self):
        self.assertEqual(exit_code_for(ResourceLimitError('too big', 10)), 2)
        self.assertEqual(exit_code_for(UsageError('bad')), 3)
        self.assertEqual(exit_code_for(ConfigurationError('bad')), 3)
        self.assertEqual(exit_code_for(GoldenFileError('missing')), 4)
        self.assertEqual(exit_code_for(ConventionError('none')), 1)
        self.assertEqual(exit_code_for(SchubertLabError('fail')), 1)


class SelectorTest(SimpleTestCase):
    """ Тесты реестра проверяемых тождеств """

    def test_registry(self):
        for name in ('coproduct', 'antipode', 'specialized', 'gkm-coproduct', 'gkm-antipode', 'total-leibniz',
                     'convolution', 'support', 'delta', 'characterization', 'demazure-compat', 'symmetrization',
                     'gkm-characterization'):
            self.assertEqual(get_selector(name).name, name)
        self.assertRaises(UsageError, get_selector, 'leibniz')

    def test_scope(self):
        check_scope(SELECTORS['gkm-coproduct'], RunConfig(family='B', rank=2))
        self.assertRaises(UsageError, check_scope, SELECTORS['antipode'], RunConfig(family='C', rank=2))
        self.assertRaises(ResourceLimitError, check_scope, SELECTORS['coproduct'], RunConfig(family='A', rank=5))
        check_scope(SELECTORS['coproduct'], RunConfig(family='A', rank=5, allow_large=True))

    def test_sweep_order(self):
        reports = run_sweep(RunConfig(family='A', rank=3, identity='support'))
        self.assertEqual([report['element'] for report in reports], [[], [1], [2], [1, 2], [2, 1], [1, 2, 1]])
        self.assertTrue(all(report['pass'] for report in reports))

    def test_progress(self):
        messages = []
        run_sweep(RunConfig(family='A', rank=2, identity='antipode'), progress=messages.append)
        self.assertEqual(messages, ['antipode [e] 1/2 PASS', 'antipode [1] 2/2 PASS'])

    def test_verify_one(self):
        report = verify_one('gkm-characterization', 'B', 2, '1,2', False, 42)
        self.assertEqual(report['element'], [1, 2])
        self.assertEqual(report['identity'], 'gkm-characterization')
        self.assertTrue(report['pass'])

    def test_celery_task(self):
        self.assertEqual(verify_element('antipode', 'A', 3, '2,1', False, 42),
                         verify_one('antipode', 'A', 3, '2,1', False, 42))
        result = verify_element.apply(args=('delta', 'A', 3, '1', False, 42))
        self.assertTrue(result.get()['pass'])

    @override_settings(RANDOM_SAMPLES=4)
    def test_total_leibniz_reports(self):
        reports = run_sweep(RunConfig(family='A', rank=3, identity='total-leibniz', seed=3))
        self.assertEqual(len(reports), 2)
        normal_form, random_pairs = reports
        self.assertEqual(normal_form['details'], {'form': 'normal-form', 'max_degree': 3})
        self.assertEqual(normal_form['substitutions'], 20)
        self.assertEqual(random_pairs['substitutions'], 4)
        self.assertEqual(random_pairs['details'], {'form': 'two-polynomial', 'seed': 3})
        self.assertTrue(all(report['pass'] for report in reports))


class RendererTest(SimpleTestCase):
    """ Тесты форматов вывода """

    def test_element_label(self):
        a2 = build_root_system('A', 2)
        self.assertEqual(element_label(parse_element(a2, '1')), '[2,1,3]')
        self.assertEqual(element_label(parse_element(a2, '')), '[1,2,3]')
        b2 = build_root_system('B', 2)
        self.assertEqual(element_label(parse_element(b2, '')), 'e')
        self.assertEqual(element_label(parse_element(b2, '2,1')), '2,1')

    def reports(self):
        return [
            {'element': [], 'identity': 'antipode', 'pass': True, 'witnesses': [], 'substitutions': 2},
            {'element': [1], 'identity': 'antipode', 'pass': False, 'witnesses': [[[1]]], 'substitutions': 2},
        ]

    def test_summary(self):
        summary = report_summary(RunConfig(family='A', rank=2, identity='antipode', seed=5), self.reports())
        self.assertFalse(summary['pass'])
        self.assertEqual(summary['elements'], 2)
        self.assertEqual(summary['substitutions'], 4)
        self.assertEqual(summary['seed'], 5)

    def test_text(self):
        lines = render_reports(RunConfig(family='A', rank=2, identity='antipode'), self.reports()).splitlines()
        self.assertEqual(lines[0], 'antipode [e] PASS substitutions=2')
        self.assertEqual(lines[1], 'antipode [1] FAIL substitutions=2')
        self.assertEqual(lines[2], '    witness: [[1]]')
        self.assertEqual(lines[3], 'antipode A1: FAIL, 2 reports, 4 substitutions')

    def test_json_is_sorted(self):
        text = render_reports(RunConfig(family='A', rank=2, identity='antipode', output_format='json'), self.reports())
        self.assertEqual(json.loads(text)['reports'][1]['witnesses'], [[[1]]])
        self.assertLess(text.index('"elements"'), text.index('"family"'))

    def test_group_reports(self):
        reports = [
            {'element': [], 'identity': 'total-leibniz', 'pass': True, 'witnesses': [], 'substitutions': 210,
             'details': {'form': 'normal-form', 'max_degree': 6}},
            {'element': [], 'identity': 'total-leibniz', 'pass': True, 'witnesses': [], 'substitutions': 3,
             'details': {'form': 'two-polynomial', 'seed': 8}},
        ]
        config = RunConfig(family='A', rank=4, identity='total-leibniz', seed=8)
        self.assertEqual(report_label(reports[0], config), '-')
        self.assertEqual(render_reports(config, reports).splitlines(), [
            'total-leibniz [-] PASS substitutions=210',
            'total-leibniz [-] PASS substitutions=3 seed=8',
            'total-leibniz A3: PASS, 2 reports, 213 substitutions',
        ])
        self.assertEqual(report_label(self.reports()[0], RunConfig(family='A', rank=2, identity='antipode')), 'e')

    def test_latex(self):
        config = RunConfig(family='A', rank=2, identity='antipode', output_format='latex')
        text = render_reports(config, self.reports())
        self.assertIn('\\begin{tabular}{llr}', text)
        self.assertIn('1 & FAIL & 2 \\\\', text)
        self.assertTrue(text.endswith('\\end{document}'))


class GoldenCompareTest(SimpleTestCase):
    """ Тесты сравнения с эталонными файлами """

    def test_file_names(self):
        self.assertEqual(golden_files(), [CONVENTIONS_FILE, 'gkm_A2.json', 'gkm_B2.json'])

    def test_conventions(self):
        computed = {
            'convolution': {'convention': {'sigma': 'identity', 'tau': 'identity', 'sign': 'plus'}, 'n': 2},
            'gkm': {'convention': {'epsilon': 1, 'sigma': -1, 'placement': 'w0'}},
        }
        self.assertEqual(compare_conventions(json.loads(json.dumps(computed)), computed), [])
        drifted = json.loads(json.dumps(computed))
        drifted['convolution']['convention']['sign'] = 'length'
        diff = compare_conventions(drifted, computed)
        self.assertIn('-      "sign": "length",', diff)
        self.assertIn('+      "sign": "plus",', diff)

    def test_table_cells_compare_as_polynomials(self):
        computed = gkm_table_payload(build_root_system('A', 1))
        self.assertEqual(computed['fixed_points'], ['e', '1'])
        self.assertEqual(computed['table']['1'], ['0', '-t1 + t2'])
        golden = json.loads(json.dumps(computed))
        golden['table']['1'][1] = 't2 - t1'
        self.assertEqual(compare_gkm_table(golden, computed, 2), [])
        golden['table']['1'][1] = 't1 - t2'
        self.assertEqual(compare_gkm_table(golden, computed, 2),
                         ["gkm_A1.json: xi_1(1) golden 't1 - t2' != computed '-t1 + t2'"])
        golden['table']['1'][1] = 't1 +'
        self.assertEqual(len(compare_gkm_table(golden, computed, 2)), 1)
        del golden['table']['e']
        self.assertTrue(compare_gkm_table(golden, computed, 2)[0].startswith('---'))
