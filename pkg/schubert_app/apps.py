from django.utils.translation import gettext_lazy as _
from django.apps import AppConfig


class SchubertAppConfig(AppConfig):
    name = 'schubert_app'
    verbose_name = _('Double Schubert polynomials')
