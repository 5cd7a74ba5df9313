from django.apps import AppConfig


class BoolfunConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "boolfun"
    verbose_name = "Boolean function analysis"
