"""Pytest wiring: configure Django the way manage.py does before collecting the tests."""

import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "www.settings")
django.setup()
