from django.apps import AppConfig


class PhCurvesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'ph_curves'
    verbose_name = 'Rational PH curve spaces'
