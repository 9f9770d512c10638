"""
Элементы группы Вейля как знаковые перестановки объемлющих координат.

Соглашения:
- ``multiply(a, b)`` - композиция a∘b, поэтому ``word_to_element([i1, ..., ir])``
  равно s_{i1} s_{i2} ... s_{ir};
- фиксированный порядок на W: длина, затем лексикографически наименьшее приведённое слово;
- слова - списки индексов образующих, с единицы.
"""
import logging
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from django.conf import settings
from django.core.cache import cache

from config.exceptions import ResourceLimitError, UsageError
from weyl_app.services.root_system import RootSystem, Vector, group_order, reflection_images

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


@dataclass(frozen=True)
class WeylElement:
    root_system: RootSystem
    images: Tuple[int, ...]

    def __repr__(self) -> str:
        return f'WeylElement({self.root_system.name}, {list(reduced_word(self))})'

    def __mul__(self, other: 'WeylElement') -> 'WeylElement':
        return multiply(self, other)

    def apply(self, vector: Sequence) -> tuple:
        """ w(v) для вектора объемлющих координат """
        result = [0] * len(self.images)
        for value, image in zip(vector, self.images):
            if value:
                result[abs(image) - 1] += value if image > 0 else -value
        return tuple(result)

    @cached_property
    def length(self) -> int:
        return sum(1 for root in self.root_system.positive_roots if not RootSystem.is_positive(self.apply(root)))

    @cached_property
    def word(self) -> Word:
        return reduced_word(self)

    @property
    def is_identity(self) -> bool:
        return all(image == k for k, image in enumerate(self.images, start=1))

    @property
    def sort_key(self) -> tuple:
        return self.length, self.word


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, tuple(range(1, rs.ambient_dim + 1)))


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    if i not in rs.indices:
        raise UsageError(f'Generator index {i} is out of range 1..{rs.rank} for {rs.name}')
    return WeylElement(rs, rs.generators[i - 1])


def reflection(rs: RootSystem, root: Vector) -> WeylElement:
    """ Отражение s_root для любого корня ``rs`` """
    return WeylElement(rs, reflection_images(tuple(root)))


def _same_system(a: WeylElement, b: WeylElement) -> None:
    if a.root_system != b.root_system:
        raise UsageError(f'Cannot combine elements of {a.root_system.name} and {b.root_system.name}')


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    _same_system(a, b)
    images = []
    for image in b.images:
        target = a.images[abs(image) - 1]
        images.append(target if image > 0 else -target)
    return WeylElement(a.root_system, tuple(images))


def inverse(a: WeylElement) -> WeylElement:
    images = [0] * len(a.images)
    for k, image in enumerate(a.images, start=1):
        images[abs(image) - 1] = k if image > 0 else -k
    return WeylElement(a.root_system, tuple(images))


def length(a: WeylElement) -> int:
    return a.length


def is_left_descent(w: WeylElement, i: int) -> bool:
    """ l(s_i w) < l(w) """
    return not RootSystem.is_positive(inverse(w).apply(w.root_system.simple_roots[i - 1]))


def is_right_descent(w: WeylElement, i: int) -> bool:
    """ l(w s_i) < l(w) """
    return not RootSystem.is_positive(w.apply(w.root_system.simple_roots[i - 1]))


def left_descents(w: WeylElement) -> List[int]:
    return [i for i in w.root_system.indices if is_left_descent(w, i)]


def right_descents(w: WeylElement) -> List[int]:
    return [i for i in w.root_system.indices if is_right_descent(w, i)]


def reduced_word(w: WeylElement) -> Word:
    """ Лексикографически наименьшее приведённое слово """
    word = []
    current = w
    while not current.is_identity:
        i = next(i for i in current.root_system.indices if is_left_descent(current, i))
        word.append(i)
        current = multiply(simple_reflection(current.root_system, i), current)
    return tuple(word)


def word_to_element(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    element = identity(rs)
    for i in word:
        element = multiply(element, simple_reflection(rs, i))
    return element


def all_reduced_words(w: WeylElement, cap: Optional[int] = None) -> FrozenSet[Word]:
    """
    Все приведённые слова w; ResourceLimitError, если их больше ``cap``
    (по умолчанию settings.REDUCED_WORDS_CAP)
    """
    cap = settings.REDUCED_WORDS_CAP if cap is None else cap
    memo: Dict[WeylElement, Set[Word]] = {}

    def words(element: WeylElement) -> Set[Word]:
        if element.is_identity:
            return {()}
        if element in memo:
            return memo[element]
        result = set()
        for i in left_descents(element):
            shorter = multiply(simple_reflection(element.root_system, i), element)
            result.update((i,) + rest for rest in words(shorter))
            if len(result) > cap:
                raise ResourceLimitError(f'More than {cap} reduced words', required=len(result))
        memo[element] = result
        return result

    return frozenset(words(w))


def extreme_reduced_words(w: WeylElement) -> Tuple[Word, Word]:
    """ Лексикографически наименьшее и наибольшее приведённые слова """
    greatest = []
    current = w
    while not current.is_identity:
        i = max(left_descents(current))
        greatest.append(i)
        current = multiply(simple_reflection(current.root_system, i), current)
    return reduced_word(w), tuple(greatest)


def braid_check_words(w: WeylElement, cap: Optional[int] = None) -> FrozenSet[Word]:
    """ Все приведённые слова w, а при превышении cap только два крайних """
    try:
        return all_reduced_words(w, cap)
    except ResourceLimitError as error:
        logger.info('%r: %s, falling back to the extreme reduced words', w, error)
        return frozenset(extreme_reduced_words(w))


def longest_element(rs: RootSystem) -> WeylElement:
    element = identity(rs)
    grown = True
    while grown:
        grown = False
        for i in rs.indices:
            if not is_left_descent(element, i):
                element = multiply(simple_reflection(rs, i), element)
                grown = True
    return element


def enumerate_weyl(rs: RootSystem, bound: Optional[int] = None) -> List[WeylElement]:
    """
    Вся группа W, каждый элемент один раз, в фиксированном порядке
    """
    bound = settings.WEYL_ENUMERATION_BOUND if bound is None else bound
    required = group_order(rs.family, rs.rank)
    if required > bound:
        raise ResourceLimitError(f'|W({rs.name})| = {required} exceeds the bound {bound}', required=required)

    cache_key = f'weyl:elements:{rs.name}'
    elements = cache.get(cache_key)
    if elements is None:
        start = identity(rs)
        seen = {start}
        queue = deque([start])
        while queue:
            element = queue.popleft()
            for i in rs.indices:
                neighbour = multiply(element, simple_reflection(rs, i))
                if neighbour not in seen:
                    seen.add(neighbour)
                    queue.append(neighbour)
        elements = sorted(seen, key=lambda element: element.sort_key)
        logger.info('enumerated %s elements of W(%s)', len(elements), rs.name)
        cache.set(cache_key, elements, settings.TABLE_CACHE_TIMEOUT)
    return elements


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """
    u <= w в порядке Брюа, по свойству подъёма: для левого спуска s элемента w
    u <= w iff (su < u ? su <= sw : u <= sw)
    """
    _same_system(u, w)
    rs = w.root_system
    while not w.is_identity:
        if u.length > w.length:
            return False
        i = next(i for i in rs.indices if is_left_descent(w, i))
        s = simple_reflection(rs, i)
        if is_left_descent(u, i):
            u = multiply(s, u)
        w = multiply(s, w)
    return u.is_identity


def length_additive_factorizations(w: WeylElement) -> List[Tuple[WeylElement, WeylElement]]:
    """ Пары (u, v) с uv = w и l(u) + l(v) = l(w), упорядоченные по u """
    pairs = []
    for u in enumerate_weyl(w.root_system):
        if u.length > w.length:
            break
        v = multiply(inverse(u), w)
        if u.length + v.length == w.length:
            pairs.append((u, v))
    return pairs


def _check_theta(rs: RootSystem, theta: Iterable[int]) -> FrozenSet[int]:
    theta = frozenset(theta)
    if not theta <= set(rs.indices):
        raise UsageError(f'{sorted(theta)} is not a subset of the generators of {rs.name}')
    return theta


def minimal_coset_reps(rs: RootSystem, theta: Iterable[int]) -> List[WeylElement]:
    """ W^P: элементы с l(ws) = l(w) + 1 для всех s из theta """
    theta = _check_theta(rs, theta)
    return [w for w in enumerate_weyl(rs) if not any(is_right_descent(w, i) for i in theta)]


def parabolic_subgroup(rs: RootSystem, theta: Iterable[int]) -> List[WeylElement]:
    theta = _check_theta(rs, theta)
    start = identity(rs)
    seen = {start}
    queue = deque([start])
    while queue:
        element = queue.popleft()
        for i in theta:
            neighbour = multiply(element, simple_reflection(rs, i))
            if neighbour not in seen:
                seen.add(neighbour)
                queue.append(neighbour)
    return sorted(seen, key=lambda element: element.sort_key)


def one_line(w: WeylElement) -> Tuple[int, ...]:
    """ Однострочная запись w(1) ... w(m); вне типа A со знаками """
    return w.images


_ONE_LINE = re.compile(r'^\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]$')


def parse_element(rs: RootSystem, text: str) -> WeylElement:
    """
    '' -> identity, '1,2,1' -> s1 s2 s1, '[2,3,1]' -> one-line notation (family A)
    """
    text = (text or '').strip()
    if not text:
        return identity(rs)
    if text.startswith('['):
        if rs.family != 'A' or not _ONE_LINE.match(text):
            raise UsageError(f'Bad one-line permutation {text!r} for {rs.name}')
        images = tuple(int(part) for part in text.strip('[] ').split(','))
        if sorted(images) != list(range(1, rs.ambient_dim + 1)):
            raise UsageError(f'{text!r} is not a permutation of 1..{rs.ambient_dim}')
        return WeylElement(rs, images)
    try:
        word = [int(part) for part in text.split(',')]
    except ValueError:
        raise UsageError(f'Bad word {text!r}: expected comma-separated generator indices')
    return word_to_element(rs, word)


def to_json(w: WeylElement) -> List[int]:
    return list(w.word)
