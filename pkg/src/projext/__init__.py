"""Constructive projective extension of an affine incidence plane.

Points at infinity are classes of pencils of lines and lines of the
extension are rooted at virtual lines.  Predicates answer with a
three-valued :class:`~projext.decision.Decision` so that questions which
no finite computation settles come back as ``unknown`` rather than a guess.
"""

from .decision import DEFAULT_BUDGET, NO, YES, Decision, unknown
from .plane import GeometryError, Line, Plane, Point

__all__ = ["DEFAULT_BUDGET", "NO", "YES", "Decision", "unknown", "GeometryError", "Line", "Plane", "Point"]
