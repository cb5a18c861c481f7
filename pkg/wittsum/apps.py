from django.apps import AppConfig


class WittSumAppConfig(AppConfig):

    name = "wittsum"
    verbose_name = "Witt Sums"

    def ready(self):
        from . import checks  # NOQA
