"""
Вывод таблиц полиномов Шуберта и GKM-ограничений и отчётов проверок: text, json, latex, xlsx
"""
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import openpyxl

from cli_app.services.identities import SELECTORS
from cli_app.services.run_config import RunConfig
from config.exceptions import UsageError
from gkm_app.services import schubert_gkm
from poly_app.services import parse, to_latex, to_text
from schubert_app.services import double_schubert
from weyl_app.services import WeylElement, enumerate_weyl, one_line

logger = logging.getLogger(__name__)


def element_label(w: WeylElement) -> str:
    """ Для типа A однострочная запись перестановки, иначе приведённое слово ('e' для единицы) """
    if w.root_system.family == 'A':
        return '[' + ','.join(map(str, one_line(w))) + ']'
    return ','.join(map(str, w.word)) or 'e'


def dump_json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


@dataclass
class Table:
    """
    Таблица команды poly

    headers: заголовки столбцов, первый подписывает строки
    rows: ячейки в каноническом текстовом виде, для latex полиномы разбираются заново
    payload: JSON представление
    single: единственный полином печатается в text без подписи
    """
    title: str
    headers: List[str]
    rows: List[List[str]]
    payload: Dict[str, Any] = field(default_factory=dict)
    single: bool = False


def schubert_polynomial_table(config: RunConfig) -> Table:
    if config.family != 'A':
        raise UsageError('Double Schubert polynomials are defined for family A; use --gkm for other families')
    elements = config.elements()
    rows, entries = [], []
    for w in elements:
        polynomial = to_text(double_schubert(w).poly)
        rows.append([element_label(w), polynomial])
        entries.append({'element': list(w.word), 'one_line': list(one_line(w)), 'polynomial': polynomial})
    rs = config.root_system()
    return Table(
        title=f'Double Schubert polynomials, {rs.name}',
        headers=['w', 'S_w(x; t)'],
        rows=rows,
        payload={'family': config.family, 'rank': config.rank, 'table': entries},
        single=config.element is not None,
    )


def gkm_restriction_table(config: RunConfig) -> Table:
    rs = config.root_system()
    fixed_points = enumerate_weyl(rs)
    rows, entries = [], []
    for w in config.elements():
        xi = schubert_gkm(w)
        rows.append([element_label(w)] + [to_text(xi(u)) for u in fixed_points])
        entries.append({'element': list(w.word), 'restrictions': xi.to_json()})
    return Table(
        title=f'GKM restrictions of Schubert classes, {rs.name}',
        headers=['w \\ u'] + [element_label(u) for u in fixed_points],
        rows=rows,
        payload={'family': config.family, 'rank': config.rank, 'gkm': True, 'table': entries},
    )


def build_table(config: RunConfig) -> Table:
    return gkm_restriction_table(config) if config.gkm else schubert_polynomial_table(config)


def _latex_cell(text: str, n: int) -> str:
    return f'${to_latex(parse(text, n))}$'


def _latex_escape(text: str) -> str:
    return text.replace('\\', '\\textbackslash{}').replace('_', '\\_')


def render_table(table: Table, output_format: str, n: int) -> str:
    if output_format == 'json':
        return dump_json(table.payload)
    if output_format == 'latex':
        lines = [
            '\\documentclass{standalone}',
            '\\begin{document}',
            '\\begin{tabular}{' + 'l' * len(table.headers) + '}',
            '\\hline',
            ' & '.join(_latex_escape(header) for header in table.headers) + ' \\\\',
            '\\hline',
        ]
        for row in table.rows:
            lines.append(' & '.join([f'${row[0]}$'] + [_latex_cell(cell, n) for cell in row[1:]]) + ' \\\\')
        lines += ['\\hline', '\\end{tabular}', '\\end{document}']
        return '\n'.join(lines)
    if table.single and len(table.headers) == 2:
        return table.rows[0][1]
    if len(table.headers) == 2:
        return '\n'.join(f'{row[0]}: {row[1]}' for row in table.rows)
    return '\n'.join(' | '.join(cells) for cells in [table.headers] + table.rows)


def report_summary(config: RunConfig, reports: List[dict]) -> Dict[str, Any]:
    passed = all(report['pass'] for report in reports)
    return {
        'family': config.family,
        'rank': config.rank,
        'identity': config.identity,
        'seed': config.seed,
        'pass': passed,
        'elements': len(reports),
        'substitutions': sum(report['substitutions'] for report in reports),
        'reports': reports,
    }


def _report_status(report: dict) -> str:
    return 'PASS' if report['pass'] else 'FAIL'


def per_element(config: RunConfig) -> bool:
    selector = SELECTORS.get(config.identity)
    return selector is None or selector.per_element


def report_label(report: dict, config: RunConfig) -> str:
    """ Слово элемента ('e' для единицы); '-' для отчётов, относящихся ко всей группе """
    if not per_element(config):
        return '-'
    return ','.join(map(str, report['element'])) or 'e'


def render_reports(config: RunConfig, reports: List[dict]) -> str:
    summary = report_summary(config, reports)
    if config.output_format == 'json':
        return dump_json(summary)
    if config.output_format == 'latex':
        lines = [
            '\\documentclass{standalone}',
            '\\begin{document}',
            '\\begin{tabular}{llr}',
            '\\hline',
            'element & status & substitutions \\\\',
            '\\hline',
        ]
        for report in reports:
            word = report_label(report, config)
            lines.append(f'{word} & {_report_status(report)} & {report["substitutions"]} \\\\')
        lines += ['\\hline', '\\end{tabular}', '\\end{document}']
        return '\n'.join(lines)

    lines = []
    for report in reports:
        word = report_label(report, config)
        line = f'{report["identity"]} [{word}] {_report_status(report)} substitutions={report["substitutions"]}'
        if 'seed' in report.get('details', {}):
            line += f' seed={report["details"]["seed"]}'
        lines.append(line)
        for witness in report['witnesses']:
            lines.append(f'    witness: {json.dumps(witness)}')
    lines.append(
        f'{config.identity} {config.root_system().name}: {"PASS" if summary["pass"] else "FAIL"}, '
        f'{summary["elements"]} reports, {summary["substitutions"]} substitutions'
    )
    return '\n'.join(lines)


def write_xlsx(path: str, title: str, headers: List[str], rows: List[List[Any]]) -> None:
    book = openpyxl.Workbook()
    sheet = book.active
    sheet.title = title[:31]
    sheet.append(headers)
    for row in rows:
        sheet.append(row)
    book.save(path)
    book.close()
    logger.info('wrote %s rows to %s', len(rows), path)


def table_to_xlsx(table: Table, path: str) -> None:
    write_xlsx(path, 'table', table.headers, table.rows)


def reports_to_xlsx(config: RunConfig, reports: List[dict]) -> None:
    rows = [
        [
            report_label(report, config),
            report['identity'],
            _report_status(report),
            report['substitutions'],
            json.dumps(report['witnesses']),
        ]
        for report in reports
    ]
    write_xlsx(config.output, 'reports', ['element', 'identity', 'status', 'substitutions', 'witnesses'], rows)


def emit(text: Optional[str], output: Optional[str], stdout) -> None:
    """ Пишет в файл --output, если он задан, иначе в stdout """
    if output:
        with open(output, 'w', encoding='utf-8') as file:
            file.write(text + '\n')
    else:
        stdout.write(text)
