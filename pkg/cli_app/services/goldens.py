"""
Эталонные файлы `manage.py selftest`: зафиксированные соглашения и
GKM-таблицы A2 и B2
"""
import difflib
import json
import logging
import os
from typing import Callable, Dict, List, Optional, Tuple

from django.conf import settings

from cli_app.services.renderers import dump_json
from config.exceptions import ConventionError, GoldenFileError, UsageError
from convolution_app.services import psi_basis_rank, search_action_convention
from gkm_app.services import DEFAULT_CONVENTION, GKMConvention, gkm_table, search_convention, verify_type_a_agreement
from poly_app.services import parse, to_text
from schubert_app.services import (
    TWO_BLOCK,
    IdealSpec,
    antipode_difference,
    ideal_member,
    linear_algebra_member,
    nu_star_sign,
    schubert_basis_rank,
    type_a,
)
from weyl_app.services import RootSystem, WeylElement, build_root_system, enumerate_weyl

logger = logging.getLogger(__name__)

CONVENTIONS_FILE = 'conventions.json'
GKM_TABLE_TYPES: Tuple[Tuple[str, int], ...] = (('A', 2), ('B', 2))
CONVOLUTION_SEARCH_N = 2


def gkm_file_name(rs: RootSystem) -> str:
    return f'gkm_{rs.name}.json'


def golden_files() -> List[str]:
    return [CONVENTIONS_FILE] + [gkm_file_name(build_root_system(*key)) for key in GKM_TABLE_TYPES]


def word_label(w: WeylElement) -> str:
    return ','.join(map(str, w.word)) or 'e'


def conventions_payload() -> Tuple[dict, List[dict], List[dict]]:
    """ Зафиксированные соглашения и вердикты кандидатов обоих поисков для журнала """
    gkm_convention, gkm_verdicts = search_convention()
    matches, action_verdicts = search_action_convention(CONVOLUTION_SEARCH_N)
    if len(matches) != 1:
        raise ConventionError(f'Expected one convolution action convention, found {len(matches)}')
    payload = {
        'convolution': {'convention': matches[0].to_json(), 'n': CONVOLUTION_SEARCH_N},
        'gkm': {'convention': gkm_convention.to_json()},
    }
    return payload, gkm_verdicts, action_verdicts


def gkm_table_payload(rs: RootSystem, convention: Optional[GKMConvention] = None) -> dict:
    convention = convention or DEFAULT_CONVENTION
    fixed_points = enumerate_weyl(rs)
    table = gkm_table(rs, convention)
    return {
        'convention': convention.to_json(),
        'fixed_points': [word_label(u) for u in fixed_points],
        'root_system': rs.name,
        'table': {word_label(w): [to_text(table[w](u)) for u in fixed_points] for w in fixed_points},
    }


def golden_path(directory: str, name: str) -> str:
    return os.path.join(directory, name)


def load_golden(directory: str, name: str) -> dict:
    path = golden_path(directory, name)
    if not os.path.exists(path):
        raise GoldenFileError(f'Golden file {path} is missing; run `manage.py selftest --regenerate`')
    with open(path, 'r', encoding='utf-8') as file:
        try:
            return json.load(file)
        except json.JSONDecodeError as error:
            raise GoldenFileError(f'Golden file {path} is not valid JSON: {error}')


def write_golden(directory: str, name: str, payload: dict) -> str:
    os.makedirs(directory, exist_ok=True)
    path = golden_path(directory, name)
    with open(path, 'w', encoding='utf-8') as file:
        file.write(dump_json(payload) + '\n')
    logger.info('wrote golden file %s', path)
    return path


def _diff(name: str, golden: dict, computed: dict) -> List[str]:
    return list(difflib.unified_diff(
        dump_json(golden).splitlines(), dump_json(computed).splitlines(),
        fromfile=f'{name} (golden)', tofile=f'{name} (computed)', lineterm='',
    ))


def compare_conventions(golden: dict, computed: dict) -> List[str]:
    for section in ('gkm', 'convolution'):
        if golden.get(section, {}).get('convention') != computed[section]['convention']:
            return _diff(CONVENTIONS_FILE, golden, computed)
    return []


def compare_gkm_table(golden: dict, computed: dict, n: int) -> List[str]:
    """ Ячейки сравниваются как полиномы, а не как строки """
    name = f'gkm_{computed["root_system"]}.json'
    same_shape = (
        golden.get('fixed_points') == computed['fixed_points']
        and set(golden.get('table', {})) == set(computed['table'])
    )
    if not same_shape or golden.get('convention') != computed['convention']:
        return _diff(name, golden, computed)
    drift = []
    for label, values in computed['table'].items():
        if len(golden['table'][label]) != len(values):
            drift.append(f'{name}: xi_{label} has {len(golden["table"][label])} values, expected {len(values)}')
            continue
        for point, expected, found in zip(computed['fixed_points'], golden['table'][label], values):
            try:
                same = parse(expected, n) == parse(found, n)
            except UsageError:
                same = False
            if not same:
                drift.append(f'{name}: xi_{label}({point}) golden {expected!r} != computed {found!r}')
    return drift


def _oracle_checks() -> List[Tuple[str, Callable[[], bool]]]:
    def two_block_oracles_agree() -> bool:
        rs = type_a(3)
        spec = IdealSpec(TWO_BLOCK, rs)
        samples = [antipode_difference(w) for w in enumerate_weyl(rs)] + [parse('x1 - t2', 3)]
        return all(ideal_member(p, spec) == linear_algebra_member(p, spec) for p in samples)

    def convolution_convention_holds_at_n3() -> bool:
        small, _ = search_action_convention(CONVOLUTION_SEARCH_N)
        large, _ = search_action_convention(3)
        return bool(small) and small[0] in large

    return [
        ('schubert basis rank n=3', lambda: schubert_basis_rank(3) == 6),
        ('psi basis rank n=2', lambda: psi_basis_rank(2) == 2),
        ('gkm agrees with localization on A2', lambda: all(
            verify_type_a_agreement(w).passed for w in enumerate_weyl(build_root_system('A', 2))
        )),
        ('nu* sign on A2', lambda: all(nu_star_sign(w) == 1 for w in enumerate_weyl(type_a(3)))),
        ('localization and linear algebra oracles agree', two_block_oracles_agree),
        ('convolution convention at n=3', convolution_convention_holds_at_n3),
    ]


def run_oracle_checks(progress: Optional[Callable[[str], None]] = None) -> List[str]:
    failures = []
    for name, check in _oracle_checks():
        try:
            passed = check()
        except ConventionError as error:
            passed = False
            logger.warning('%s: %s', name, error)
        if progress:
            progress(f'{name}: {"PASS" if passed else "FAIL"}')
        if not passed:
            failures.append(name)
    return failures


def computed_goldens() -> Tuple[Dict[str, dict], List[dict], List[dict]]:
    conventions, gkm_verdicts, action_verdicts = conventions_payload()
    files = {CONVENTIONS_FILE: conventions}
    for family, rank in GKM_TABLE_TYPES:
        rs = build_root_system(family, rank)
        files[gkm_file_name(rs)] = gkm_table_payload(rs, GKMConvention.from_json(conventions['gkm']['convention']))
    return files, gkm_verdicts, action_verdicts


def regenerate(directory: Optional[str] = None) -> List[str]:
    directory = directory or settings.GOLDEN_DIR
    files, _, _ = computed_goldens()
    return [write_golden(directory, name, payload) for name, payload in files.items()]


def compare(directory: Optional[str] = None, files: Optional[Dict[str, dict]] = None) -> List[str]:
    """
    Расхождения между эталонными файлами и текущим вычислением;
    GoldenFileError, если эталонный файл отсутствует
    """
    directory = directory or settings.GOLDEN_DIR
    goldens = {name: load_golden(directory, name) for name in golden_files()}
    if files is None:
        files, _, _ = computed_goldens()
    drift = compare_conventions(goldens[CONVENTIONS_FILE], files[CONVENTIONS_FILE])
    for family, rank in GKM_TABLE_TYPES:
        rs = build_root_system(family, rank)
        name = gkm_file_name(rs)
        drift += compare_gkm_table(goldens[name], files[name], rs.ambient_dim)
    return drift
