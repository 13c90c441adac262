"""Discrete phase space, curve bundles and Wigner functions for n qubits."""
from .curves import (
    BundleSignature,
    Curve,
    FactorizationPartition,
    bundle_signature,
    classify_regularity,
    curve_points,
    factorization,
    intersect,
    is_stabilizer_curve,
)
from .estimator import DiscreteWignerTransform
from .gf import Field, find_self_dual_basis
from .mubs import (
    MubBasis,
    MubBundle,
    associate_curve,
    preset_bundle,
    rotated_mubs,
    standard_mubs,
    verify_unbiased,
)
from .pauli import displacement, fourier, tensor_factorize, x_op, z_op
from .rotations import CurveFunction, p_op, q_op, solve_coefficients
from .wigner import (
    WignerGrid,
    WignerKernel,
    covariance_check,
    kernel_bundle,
    kernel_standard,
    kernel_transformed,
    marginal_along_curve,
    negativity,
    wigner_function,
)

__version__ = "0.1.0"
