"""
Исключения, общие для алгебраических приложений.

Команды управления переводят их в коды возврата, см. cli_app.services.run_config.
"""


class SchubertLabError(Exception):
    pass


class ConfigurationError(SchubertLabError):
    """ Неподдерживаемое сочетание семейства и ранга """


class UsageError(SchubertLabError):
    """ Операнды из разных систем корней, неверные блоки, некорректные слова """


class ResourceLimitError(SchubertLabError):

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


class DivisibilityError(SchubertLabError):
    """ Деление на линейную форму дало остаток """


class InvalidGKMClassError(DivisibilityError):
    """ Локализованный оператор Демазюра применён к функции, не являющейся GKM-классом """


class ConventionError(SchubertLabError):
    """ Поиск соглашения не выделил ровно одного кандидата, либо соглашение нарушает характеризацию """


class GoldenFileError(SchubertLabError):
    """ Эталонный файл отсутствует; запустите `manage.py selftest --regenerate` """
