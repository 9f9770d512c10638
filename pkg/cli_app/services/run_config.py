"""
Параметры запуска команд управления и соответствие ошибок кодам возврата
"""
from dataclasses import dataclass, field
from typing import Optional

from django.conf import settings
from django.core.management import CommandError

from config.exceptions import (
    ConfigurationError,
    GoldenFileError,
    ResourceLimitError,
    SchubertLabError,
    UsageError,
)
from weyl_app.services import RootSystem, build_root_system, enumerate_weyl, parse_element

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_RESOURCE = 2
EXIT_USAGE = 3
EXIT_MISSING_GOLDEN = 4

FORMATS = ('text', 'json', 'latex', 'xlsx')


@dataclass
class RunConfig:
    """
    Параметры запуска команд poly / verify

    family, rank: тип Картана; для семейства A rank равен n, числу переменных (W = S_n)
    identity: селектор verify, None для poly
    output_format: text | json | latex | xlsx
    element: приведённое слово или однострочная перестановка, None для всех элементов
    parallelism: число воркеров Celery, между которыми делятся элементы
    seed: seed случайных проверок
    output: файл для записи вместо stdout
    allow_large: снять ограничения обхода по умолчанию
    gkm: poly печатает таблицы ограничений вместо полиномов
    """
    family: str
    rank: int
    identity: Optional[str] = None
    output_format: str = 'text'
    element: Optional[str] = None
    parallelism: int = field(default_factory=lambda: settings.DEFAULT_PARALLELISM)
    seed: int = field(default_factory=lambda: settings.DEFAULT_SEED)
    output: Optional[str] = None
    allow_large: bool = False
    gkm: bool = False

    @classmethod
    def from_options(cls, options: dict, identity: Optional[str] = None) -> 'RunConfig':
        return cls(
            family=str(options['family']).upper(),
            rank=options['rank'],
            identity=identity,
            output_format=options.get('format') or 'text',
            element=options.get('element'),
            parallelism=settings.DEFAULT_PARALLELISM if options.get('parallelism') is None else options['parallelism'],
            seed=settings.DEFAULT_SEED if options.get('seed') is None else options['seed'],
            output=options.get('output'),
            allow_large=bool(options.get('allow_large')),
            gkm=bool(options.get('gkm')),
        )

    def validate(self) -> 'RunConfig':
        if self.output_format not in FORMATS:
            raise UsageError(f'Unknown format {self.output_format!r}, expected one of {", ".join(FORMATS)}')
        if self.output_format == 'xlsx' and not self.output:
            raise UsageError('--format xlsx needs --output')
        if self.parallelism < 1:
            raise UsageError('--parallelism must be positive')
        self.root_system()
        cap = settings.RANK_CAPS.get(self.family)
        if cap is not None and self.rank > cap and not self.allow_large:
            raise ResourceLimitError(f'{self.family}{self.rank} exceeds the rank cap {self.family}{cap}', self.rank)
        return self

    def root_system(self) -> RootSystem:
        if self.family == 'A':
            return build_root_system('A', self.rank - 1)
        return build_root_system(self.family, self.rank)

    def elements(self):
        """ Выбранные элементы в фиксированном порядке на W """
        rs = self.root_system()
        if self.element is None:
            return enumerate_weyl(rs)
        return [parse_element(rs, self.element)]


def exit_code_for(error: SchubertLabError) -> int:
    if isinstance(error, ResourceLimitError):
        return EXIT_RESOURCE
    if isinstance(error, (UsageError, ConfigurationError)):
        return EXIT_USAGE
    if isinstance(error, GoldenFileError):
        return EXIT_MISSING_GOLDEN
    return EXIT_FAIL


def command_error(error: SchubertLabError) -> CommandError:
    return CommandError(str(error), returncode=exit_code_for(error))
