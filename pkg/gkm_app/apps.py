from django.utils.translation import gettext_lazy as _
from django.apps import AppConfig


class GkmAppConfig(AppConfig):
    name = 'gkm_app'
    verbose_name = _('Localization model of flag varieties')
