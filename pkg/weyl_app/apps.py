from django.utils.translation import gettext_lazy as _
from django.apps import AppConfig


class WeylAppConfig(AppConfig):
    name = 'weyl_app'
    verbose_name = _('Root systems and Weyl groups')
