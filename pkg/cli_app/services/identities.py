"""
Селекторы тождеств `manage.py verify` и обход элементов группы
"""
import logging
from dataclasses import dataclass
from random import Random
from typing import Callable, Dict, List, Optional

from celery import group

from django.conf import settings

from cli_app.services.run_config import RunConfig
from config.exceptions import ResourceLimitError, UsageError
from convolution_app.services import ConvolutionClass, verify_demazure_action, verify_total_leibniz_via_convolution
from gkm_app.services import verify_antipode_gkm, verify_characterization, verify_coproduct_gkm
from nilhecke_app.services import total_leibniz_polynomial_check, total_leibniz_sides
from poly_app.services import monomials_up_to, random_poly, to_text
from schubert_app.services import (
    IdentityReport,
    verify_antipode,
    verify_characterization as verify_schubert_characterization,
    verify_coproduct,
    verify_delta,
    verify_demazure_compatibility,
    verify_specialized,
    verify_support,
    verify_symmetrization,
)
from schubert_app.tasks import verify_element
from weyl_app.services import RootSystem, WeylElement, longest_element, parse_element

logger = logging.getLogger(__name__)

ElementCheck = Callable[[WeylElement, RunConfig], IdentityReport]
GroupCheck = Callable[[RootSystem, RunConfig], List[IdentityReport]]


@dataclass(frozen=True)
class Selector:
    """
    name: имя в командной строке
    type_a_only: только полиномиальная модель семейства A
    per_element: обход W (или фильтра --element)
    check: ElementCheck при per_element, иначе GroupCheck
    """
    name: str
    type_a_only: bool
    per_element: bool
    check: Callable


def _total_leibniz(rs: RootSystem, config: RunConfig) -> List[IdentityReport]:
    """ Нормальные формы для всех мономов F степени <= l(w0), затем случайные пары (F, G) по seed """
    n = rs.ambient_dim
    degree = longest_element(rs).length
    failing = []
    monomials = monomials_up_to(n, ('x',), degree)
    for F in monomials:
        lhs, rhs = total_leibniz_sides(rs, F)
        if lhs != rhs:
            failing.append(to_text(F))
    reports = [IdentityReport.for_element(
        None, 'total-leibniz', passed=not failing, witnesses=failing, substitutions=len(monomials),
        details={'form': 'normal-form', 'max_degree': degree},
    )]

    rng = Random(config.seed)
    failing = []
    for _ in range(settings.RANDOM_SAMPLES):
        F = random_poly(rng, n, ('x',), degree=3)
        G = random_poly(rng, n, ('x',), degree=3)
        lhs, rhs = total_leibniz_polynomial_check(rs, F, G)
        if lhs != rhs:
            failing.append([to_text(F), to_text(G)])
    reports.append(IdentityReport.for_element(
        None, 'total-leibniz', passed=not failing, witnesses=failing, substitutions=settings.RANDOM_SAMPLES,
        details={'form': 'two-polynomial', 'seed': config.seed},
    ))
    return reports


def _convolution(rs: RootSystem, config: RunConfig) -> List[IdentityReport]:
    n = rs.ambient_dim
    if n > settings.CONVOLUTION_MAX_N and not config.allow_large:
        raise ResourceLimitError(f'Convolution checks run for n <= {settings.CONVOLUTION_MAX_N}', required=n)
    reports = [verify_demazure_action(n)]
    rng = Random(config.seed)
    failing = []
    for _ in range(settings.RANDOM_SAMPLES):
        f = ConvolutionClass(rs, random_poly(rng, n, ('x', 't'), degree=3))
        g = random_poly(rng, n, ('t',), degree=3)
        if not verify_total_leibniz_via_convolution(f, g).passed:
            failing.append([to_text(f.poly), to_text(g)])
    reports.append(IdentityReport.for_element(
        None, 'total-leibniz-convolution', passed=not failing, witnesses=failing,
        substitutions=settings.RANDOM_SAMPLES, details={'seed': config.seed},
    ))
    return reports


def _schubert(check: Callable[[WeylElement], IdentityReport]) -> ElementCheck:
    return lambda w, config: check(w)


SELECTORS: Dict[str, Selector] = {selector.name: selector for selector in (
    Selector('coproduct', True, True, _schubert(verify_coproduct)),
    Selector('antipode', True, True, _schubert(verify_antipode)),
    Selector('specialized', True, True, _schubert(verify_specialized)),
    Selector('support', True, True, _schubert(verify_support)),
    Selector('delta', True, True, _schubert(verify_delta)),
    Selector('characterization', True, True, _schubert(verify_schubert_characterization)),
    Selector('demazure-compat', True, True, _schubert(verify_demazure_compatibility)),
    Selector('symmetrization', True, True, _schubert(verify_symmetrization)),
    Selector('gkm-coproduct', False, True, lambda w, config: verify_coproduct_gkm(w, allow_large=config.allow_large)),
    Selector('gkm-antipode', False, True, lambda w, config: verify_antipode_gkm(w)),
    Selector('gkm-characterization', False, True, lambda w, config: verify_characterization(w)),
    Selector('total-leibniz', False, False, _total_leibniz),
    Selector('convolution', True, False, _convolution),
)}


def get_selector(name: str) -> Selector:
    try:
        return SELECTORS[name]
    except KeyError:
        raise UsageError(f'Unknown identity {name!r}, expected one of {", ".join(SELECTORS)}')


def check_scope(selector: Selector, config: RunConfig) -> None:
    if selector.type_a_only and config.family != 'A':
        raise UsageError(f'{selector.name} is defined for family A only')
    if selector.type_a_only and selector.per_element:
        n = config.root_system().ambient_dim
        if n > settings.SCHUBERT_SWEEP_MAX_N and not config.allow_large:
            raise ResourceLimitError(
                f'Schubert sweeps run for n <= {settings.SCHUBERT_SWEEP_MAX_N}; use --allow-large', required=n,
            )


def verify_one(name: str, family: str, rank: int, word: Optional[str], allow_large: bool, seed: int) -> dict:
    """ Один элемент обхода в виде JSON; единица работы задачи Celery """
    selector = get_selector(name)
    config = RunConfig(family=family, rank=rank, identity=name, element=word, allow_large=allow_large, seed=seed)
    w = parse_element(config.root_system(), word or '')
    return selector.check(w, config).to_json()


def run_sweep(config: RunConfig, progress: Optional[Callable[[str], None]] = None) -> List[dict]:
    """
    Отчёты в виде JSON словарей в фиксированном порядке на W, независимо от
    порядка завершения воркеров
    """
    selector = get_selector(config.identity)
    check_scope(selector, config)
    rs = config.root_system()
    if not selector.per_element:
        return [report.to_json() for report in selector.check(rs, config)]

    elements = config.elements()
    words = [','.join(map(str, w.word)) for w in elements]
    if config.parallelism > 1:
        jobs = group(
            verify_element.s(config.identity, config.family, config.rank, word, config.allow_large, config.seed)
            for word in words
        )
        results = [result.get() for result in jobs.apply_async().results]
        if progress:
            progress(f'{config.identity}: {len(results)} elements done')
        return results

    results = []
    for index, word in enumerate(words, start=1):
        results.append(verify_one(config.identity, config.family, config.rank, word, config.allow_large, config.seed))
        if progress:
            status = 'PASS' if results[-1]['pass'] else 'FAIL'
            progress(f'{config.identity} [{word or "e"}] {index}/{len(words)} {status}')
    logger.info('%s sweep over %s: %s elements', config.identity, rs.name, len(results))
    return results
