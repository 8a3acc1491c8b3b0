"""Configure Django before pytest collects the matrices test modules."""
import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "assrkit.settings")
django.setup()
