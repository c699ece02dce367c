"""Exact computations for Verma modules over the Lie superalgebra osp(1, 2l)."""

from .errors import ConeError, DomainError, LatticeError, OspError, RankError, ResourceCapError, TruncationError
from .rootdata import Weight, build_root_system, parse_weight
from .oracle import annihilator_centrally_generated, verify_suite

__version__ = "0.1.0"
