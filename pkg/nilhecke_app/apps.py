from django.utils.translation import gettext_lazy as _
from django.apps import AppConfig


class NilheckeAppConfig(AppConfig):
    name = 'nilhecke_app'
    verbose_name = _('Demazure operators and the nil-Hecke algebra')
