import json

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from cli_app.services.goldens import (
    compare,
    computed_goldens,
    golden_files,
    load_golden,
    regenerate,
    run_oracle_checks,
)
from cli_app.services.run_config import EXIT_FAIL, command_error
from config.exceptions import SchubertLabError


class Command(BaseCommand):
    """
    Повторяет поиск соглашений о знаках, сверяет результат с эталонными файлами
    и прогоняет перекрёстные проверки оракулов
    """

    help = 'Re-run the convention searches and oracle cross-checks against the golden files'

    def add_arguments(self, parser):
        parser.add_argument('--regenerate', action='store_true', help='rewrite the golden files')
        parser.add_argument('--golden-dir', default=None, help='directory of the golden files')

    def progress(self, message: str) -> None:
        self.stderr.write(message)

    def handle(self, *args, **options) -> None:
        directory = options['golden_dir'] or settings.GOLDEN_DIR
        try:
            if options['regenerate']:
                for path in regenerate(directory):
                    self.stdout.write(f'wrote {path}')
                return
            for name in golden_files():
                load_golden(directory, name)
            files, gkm_verdicts, action_verdicts = computed_goldens()
            for verdict in gkm_verdicts + action_verdicts:
                self.progress(f'candidate {json.dumps(verdict, sort_keys=True)}')
            drift = compare(directory, files)
            failures = run_oracle_checks(progress=self.progress)
        except SchubertLabError as error:
            raise command_error(error)

        for line in drift:
            self.stdout.write(line)
        for name in failures:
            self.stdout.write(f'oracle check failed: {name}')
        if drift or failures:
            raise CommandError(
                f'selftest: {len(drift)} drift lines, {len(failures)} failed checks', returncode=EXIT_FAIL,
            )
        self.stdout.write(self.style.SUCCESS('selftest: PASS'))
