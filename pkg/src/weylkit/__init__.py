"""weylkit: Coxeter groups, right-angled buildings and acylindrical-hyperbolicity witnesses."""

__version__ = "0.1.0"
