"""
Системы корней классических серий в стандартной реализации.

Корни - целочисленные векторы в объемлющем пространстве (координаты - это
переменные x_1..x_m одного блока). Простые отражения хранятся как знаковые
перестановки: ``images[k - 1] == +j`` переводит e_k в e_j, ``-j`` в -e_j.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Tuple

from config.exceptions import ConfigurationError

FAMILIES = ('A', 'B', 'C', 'D')

Vector = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class RootSystem:
    """
    Данные Картана типа A_n, B_n, C_n или D_n

    family, rank: тип Картана
    ambient_dim: число координат (rank + 1 для A, rank для остальных)
    simple_roots: alpha_1..alpha_n в виде целочисленных векторов
    positive_roots: все положительные корни, отсортированные
    generators: простые отражения в виде знаковых перестановок
    """
    family: str
    rank: int
    ambient_dim: int
    simple_roots: Tuple[Vector, ...]
    positive_roots: Tuple[Vector, ...]
    generators: Tuple[Vector, ...]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootSystem):
            return NotImplemented
        return (self.family, self.rank) == (other.family, other.rank)

    def __hash__(self) -> int:
        return hash((self.family, self.rank))

    def __repr__(self) -> str:
        return f'RootSystem({self.name})'

    @property
    def name(self) -> str:
        return f'{self.family}{self.rank}'

    @property
    def indices(self) -> range:
        """ Индексы образующих, с единицы """
        return range(1, self.rank + 1)

    @staticmethod
    def is_positive(vector: Vector) -> bool:
        """
        Знак корня: у положительных корней первая ненулевая координата
        положительна во всех четырёх реализациях
        """
        for coordinate in vector:
            if coordinate:
                return coordinate > 0
        return False


def _unit(dim: int, i: int, value: int = 1) -> list:
    vector = [0] * dim
    vector[i - 1] = value
    return vector


def _combine(dim: int, i: int, j: int, sign: int) -> Vector:
    vector = _unit(dim, i)
    vector[j - 1] += sign
    return tuple(vector)


def reflect_vector(vector: Vector, root: Vector) -> Vector:
    """ s_root(v) = v - 2 (v, root) / (root, root) * root """
    pairing = Fraction(2 * sum(a * b for a, b in zip(vector, root)), sum(a * a for a in root))
    result = []
    for a, b in zip(vector, root):
        value = a - pairing * b
        if value.denominator != 1:
            raise ConfigurationError(f'{root} is not a root of an integral realization')
        result.append(int(value))
    return tuple(result)


def reflection_images(root: Vector) -> Vector:
    """ Знаковая перестановка координат, задающая отражение в ``root`` """
    dim = len(root)
    images = []
    for k in range(1, dim + 1):
        image = reflect_vector(tuple(_unit(dim, k)), root)
        support = [(j, value) for j, value in enumerate(image, start=1) if value]
        if len(support) != 1 or abs(support[0][1]) != 1:
            raise ConfigurationError(f'reflection in {root} does not permute the coordinates')
        j, value = support[0]
        images.append(j if value > 0 else -j)
    return tuple(images)


def positive_root_count(family: str, rank: int) -> int:
    counts = {
        'A': rank * (rank + 1) // 2,
        'B': rank * rank,
        'C': rank * rank,
        'D': rank * (rank - 1),
    }
    return counts[family]


def group_order(family: str, rank: int) -> int:
    if family == 'A':
        return factorial(rank + 1)
    if family in ('B', 'C'):
        return 2 ** rank * factorial(rank)
    return 2 ** (rank - 1) * factorial(rank)


def _check_type(family: str, rank: int) -> None:
    if family not in FAMILIES:
        raise ConfigurationError(f'Unsupported family {family!r}, expected one of {", ".join(FAMILIES)}')
    if not isinstance(rank, int) or rank < 1:
        raise ConfigurationError(f'Rank must be a positive integer, got {rank!r}')
    if family == 'D' and rank < 2:
        raise ConfigurationError('Family D needs rank >= 2')


def build_root_system(family: str, rank: int) -> RootSystem:
    """
    Стандартные данные Картана:
    A: alpha_i = x_i - x_{i+1}; B: alpha_n = x_n; C: alpha_n = 2x_n; D: alpha_n = x_{n-1} + x_n
    """
    family = str(family).upper()
    _check_type(family, rank)
    dim = rank + 1 if family == 'A' else rank

    simple = [_combine(dim, i, i + 1, -1) for i in range(1, dim)]
    if family == 'B':
        simple.append(tuple(_unit(dim, rank)))
    elif family == 'C':
        simple.append(tuple(_unit(dim, rank, 2)))
    elif family == 'D':
        simple.append(_combine(dim, rank - 1, rank, 1))

    positive = [_combine(dim, i, j, -1) for i in range(1, dim + 1) for j in range(i + 1, dim + 1)]
    if family != 'A':
        positive += [_combine(dim, i, j, 1) for i in range(1, dim + 1) for j in range(i + 1, dim + 1)]
    if family == 'B':
        positive += [tuple(_unit(dim, i)) for i in range(1, dim + 1)]
    elif family == 'C':
        positive += [tuple(_unit(dim, i, 2)) for i in range(1, dim + 1)]

    return RootSystem(
        family=family,
        rank=rank,
        ambient_dim=dim,
        simple_roots=tuple(simple),
        positive_roots=tuple(sorted(positive, reverse=True)),
        generators=tuple(reflection_images(root) for root in simple),
    )
