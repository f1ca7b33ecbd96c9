"""Initial degrees of fat points on line count configurations in the plane."""
from .errors import InputError, RealizationError, ScheduleError

__version__ = "0.1.0"

__all__ = ["InputError", "RealizationError", "ScheduleError"]
