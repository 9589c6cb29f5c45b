"""
k3focal computes the index, nullity and Killing nullity of the cubic focal
manifolds `CP2`, `HP2` and `OP2` in spheres, exactly, from the representation
theory of `SU(3)`, `Sp(3)` and `F4`.

Compute a spectrum::

    >>> r = k3focal.compute_spectrum('cp2')
    >>> r.index, r.nullity, r.killing_nullity
    (8, 20, 20)

Casimir eigenvalue of a representation for the induced metric::

    >>> k3focal.jacobi_eigenvalue('op2', k3focal.DominantWeight.of(0, 0, 1, 0))
    Fraction(0, 1)

"""

from .errors import ConfigurationError
from .errors import FocalError
from .errors import InputError
from .errors import InternalError
from .errors import InvariantViolation
from .errors import ResourceError
from .errors import UnsupportedCaseError
from .errors import UsageError

from .root_data import DominantWeight
from .root_data import RootSystem
from .root_data import RootSystemId
from .root_data import WeightVector
from .root_data import build_root_system
from .root_data import inner_product
from .root_data import weight_of

from .normalization import CasimirGroup
from .normalization import FocalSpace
from .normalization import FocalSpaceId
from .normalization import MetricScale
from .normalization import ScaleMeaning
from .normalization import all_focal_spaces
from .normalization import casimir_dual_scale
from .normalization import focal_metric_factor
from .normalization import focal_space
from .normalization import gauss_scalar
from .normalization import literature_scale_factor
from .normalization import restriction_factor
from .normalization import strange_dual_factor

from .rep_core import WeightSystem
from .rep_core import casimir_eigenvalue
from .rep_core import enumerate_dominant
from .rep_core import weight_system
from .rep_core import weyl_dimension

from .branching import BranchingResult
from .branching import KIrrepLabel
from .branching import TorusEmbedding
from .branching import branch
from .branching import slice_multiplicity
from .branching import spherical_multiplicity
from .branching import torus_embedding

from .clifford import CliffordSystem
from .clifford import build_clifford_system
from .clifford import jacobi_curvature_constants
from .clifford import shape_trace_sum

from .jacobi import SpectrumClass
from .jacobi import SpectrumEntry
from .jacobi import SpectrumReport
from .jacobi import TableFamily
from .jacobi import compute_spectrum
from .jacobi import first_laplace_eigenvalue
from .jacobi import jacobi_eigenvalue
from .jacobi import killing_nullity
from .jacobi import slice_casimir
from .jacobi import table_families

from .verify import run_checks

__version__ = "0.1.0"
__name__ = 'k3focal'

__all__ = [
    'ConfigurationError',
    'FocalError',
    'InputError',
    'InternalError',
    'InvariantViolation',
    'ResourceError',
    'UnsupportedCaseError',
    'UsageError',

    'DominantWeight',
    'RootSystem',
    'RootSystemId',
    'WeightVector',
    'build_root_system',
    'inner_product',
    'weight_of',

    'CasimirGroup',
    'FocalSpace',
    'FocalSpaceId',
    'MetricScale',
    'ScaleMeaning',
    'all_focal_spaces',
    'casimir_dual_scale',
    'focal_metric_factor',
    'focal_space',
    'gauss_scalar',
    'literature_scale_factor',
    'restriction_factor',
    'strange_dual_factor',

    'WeightSystem',
    'casimir_eigenvalue',
    'enumerate_dominant',
    'weight_system',
    'weyl_dimension',

    'BranchingResult',
    'KIrrepLabel',
    'TorusEmbedding',
    'branch',
    'slice_multiplicity',
    'spherical_multiplicity',
    'torus_embedding',

    'CliffordSystem',
    'build_clifford_system',
    'jacobi_curvature_constants',
    'shape_trace_sum',

    'SpectrumClass',
    'SpectrumEntry',
    'SpectrumReport',
    'TableFamily',
    'compute_spectrum',
    'first_laplace_eigenvalue',
    'jacobi_eigenvalue',
    'killing_nullity',
    'slice_casimir',
    'table_families',

    'run_checks',
]
