import sys
from pathlib import Path

from hypothesis import settings

# tests import the shared helpers (expected values, property checks) by bare name
sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, derandomize=True)
settings.load_profile("default")
