import time

from django.core.management.base import BaseCommand, CommandError

from cli_app.management.commands.poly import add_type_arguments
from cli_app.services.identities import SELECTORS, run_sweep
from cli_app.services.renderers import emit, render_reports, reports_to_xlsx
from cli_app.services.run_config import EXIT_FAIL, RunConfig, command_error
from config.exceptions import SchubertLabError


class Command(BaseCommand):
    """ Проверяет выбранное тождество для всех элементов группы Вейля (или для --element) """

    help = f'Verify an identity: {", ".join(SELECTORS)}'

    def add_arguments(self, parser):
        parser.add_argument('identity')
        add_type_arguments(parser)
        parser.add_argument('--seed', type=int, default=None, help='seed of the randomized checks')
        parser.add_argument('--parallelism', type=int, default=None, help='number of Celery jobs in flight')

    def progress(self, message: str) -> None:
        self.stderr.write(message)

    def handle(self, identity, *args, **options) -> None:
        started = time.perf_counter()
        try:
            config = RunConfig.from_options(options, identity).validate()
            reports = run_sweep(config, progress=self.progress)
            if config.output_format == 'xlsx':
                reports_to_xlsx(config, reports)
            else:
                emit(render_reports(config, reports), config.output, self.stdout)
        except SchubertLabError as error:
            raise command_error(error)
        self.stderr.write(f'{identity}: {time.perf_counter() - started:.2f}s wall-clock')

        failed = [report for report in reports if not report['pass']]
        if failed:
            raise CommandError(f'{identity}: {len(failed)} of {len(reports)} reports FAIL', returncode=EXIT_FAIL)
