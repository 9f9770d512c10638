from django.core.management.base import BaseCommand

from cli_app.services.renderers import build_table, emit, render_table, table_to_xlsx
from cli_app.services.run_config import RunConfig, command_error
from config.exceptions import SchubertLabError


def add_type_arguments(parser) -> None:
    parser.add_argument('--family', default='A', help='A, B, C or D')
    parser.add_argument('--rank', type=int, required=True, help='number of variables n for A, Cartan rank otherwise')
    parser.add_argument('--element', default=None, help='reduced word "1,2,1" or one-line "[3,2,1]"; "" is e')
    parser.add_argument('--format', default='text', help='text, json, latex or xlsx')
    parser.add_argument('--output', default=None, help='file to write instead of stdout')
    parser.add_argument('--allow-large', action='store_true', help='lift the default rank and sweep caps')


class Command(BaseCommand):
    """ Выводит двойные полиномы Шуберта или таблицу GKM ограничений классов Шуберта """

    help = 'Double Schubert polynomials (family A) or GKM restriction tables (any family)'

    def add_arguments(self, parser):
        add_type_arguments(parser)
        parser.add_argument('--gkm', action='store_true', help='print restrictions to the fixed points')

    def handle(self, *args, **options) -> None:
        try:
            config = RunConfig.from_options(options).validate()
            table = build_table(config)
            if config.output_format == 'xlsx':
                table_to_xlsx(table, config.output)
            else:
                emit(render_table(table, config.output_format, config.root_system().ambient_dim), config.output,
                     self.stdout)
        except SchubertLabError as error:
            raise command_error(error)
