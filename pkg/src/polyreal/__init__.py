"""Exact realization cones for transitive actions of finite groups.

Submodules:
  cyclo        exact cyclotomic arithmetic in minimal-order normal form
  groups       permutation groups, conjugacy classes, cosets
  chartable    modular character table computation and exact checks
  gsets        transitive actions, layers, compressed invariant matrices
  realization  projections, cosine vectors, cone reports, PSD square roots
  stringc      string C-group verification for reflection-style generators
  psl2         projective two-by-two groups over prime fields
  wreath       rank-two wreath products and the 600-cell pipeline
  h4           quaternion model of the order-14400 reflection group
  cli          command line entry points
"""

__version__ = "0.1.0"

from .cyclo import Cyclo
from .errors import PolyrealError

__all__ = ["Cyclo", "PolyrealError", "__version__"]
