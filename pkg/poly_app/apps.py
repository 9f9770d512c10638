from django.utils.translation import gettext_lazy as _
from django.apps import AppConfig


class PolyAppConfig(AppConfig):
    name = 'poly_app'
    verbose_name = _('Exact polynomial arithmetic')
