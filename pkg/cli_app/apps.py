from django.utils.translation import gettext_lazy as _
from django.apps import AppConfig


class CliAppConfig(AppConfig):
    name = 'cli_app'
    verbose_name = _('Command line surface')
