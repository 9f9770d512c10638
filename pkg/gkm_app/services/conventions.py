"""
Поиск знака локализованного оператора Демазюра и нормировки класса точки.

Перебираются все сочетания epsilon, sigma и placement на малых системах
корней; кандидат остаётся, если его таблица всюду удовлетворяет
характеризующим свойствам и совпадает с локализацией двойных полиномов
Шуберта в типе A.
"""
import itertools
import logging
from typing import Iterable, List, Sequence, Tuple

from config.exceptions import ConventionError, InvalidGKMClassError
from gkm_app.services.classes import GKMConvention, build_table
from gkm_app.services.verification import characterization_witnesses, type_a_disagreements
from weyl_app.services import build_root_system, enumerate_weyl

logger = logging.getLogger(__name__)

SEARCH_TYPES: Tuple[Tuple[str, int], ...] = (('A', 1), ('A', 2), ('B', 2), ('C', 2))


def candidate_conventions() -> List[GKMConvention]:
    return [
        GKMConvention(epsilon, sigma, placement)
        for epsilon, sigma, placement in itertools.product((1, -1), (1, -1), ('w0', 'e'))
    ]


def candidate_verdict(convention: GKMConvention, types: Iterable[Tuple[str, int]] = SEARCH_TYPES) -> dict:
    """ {'characterization': bool, 'type_a': bool} для одного кандидата """
    characterization, type_a = True, True
    for family, rank in types:
        rs = build_root_system(family, rank)
        try:
            table = build_table(rs, convention)
        except InvalidGKMClassError:
            return {'characterization': False, 'type_a': False}
        for w in enumerate_weyl(rs):
            if characterization_witnesses(w, table, convention.epsilon):
                characterization = False
            if family == 'A' and type_a_disagreements(w, table):
                type_a = False
    return {'characterization': characterization, 'type_a': type_a}


def search_convention(types: Sequence[Tuple[str, int]] = SEARCH_TYPES) -> Tuple[GKMConvention, List[dict]]:
    """ Единственный кандидат, прошедший обе проверки, и вердикты всех кандидатов """
    verdicts = []
    for convention in candidate_conventions():
        verdict = candidate_verdict(convention, types)
        logger.info('gkm convention %s: %s', convention.key, verdict)
        verdicts.append({**convention.to_json(), **verdict})
    winners = [
        GKMConvention.from_json(verdict) for verdict in verdicts if verdict['characterization'] and verdict['type_a']
    ]
    if len(winners) != 1:
        raise ConventionError(f'Expected one GKM convention, found {len(winners)}')
    return winners[0], verdicts
