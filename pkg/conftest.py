"""Pytest wiring: configure Django the way manage.py does before tests import it."""
import os
import sys
from pathlib import Path

PROJECT_DIR = Path(__file__).resolve().parent / 'phspaces'
sys.path.insert(0, str(PROJECT_DIR))
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'phspaces.settings')

import django  # noqa: E402

django.setup()
