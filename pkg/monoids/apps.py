from django.apps import AppConfig


class MonoidsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'monoids'
    verbose_name = 'Partition-preserving transformation monoids'
