from django.utils.translation import gettext_lazy as _
from django.apps import AppConfig


class ConvolutionAppConfig(AppConfig):
    name = 'convolution_app'
    verbose_name = _('Convolution algebra of G/B x G/B')
