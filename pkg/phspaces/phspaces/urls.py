from django.urls import path, include

urlpatterns = [
    path("api/", include("ph_curves.api.urls"))   # JSON API
]
