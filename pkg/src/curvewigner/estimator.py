"""scikit-learn style front end.

:class:`DiscreteWignerTransform` maps quantum states to flattened Wigner
grids, so it can sit in a :class:`sklearn.pipeline.Pipeline` in front of any
learner that expects real feature vectors.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_states
from .gf import Field
from .mubs import preset_generators, rotated_mubs
from .rotations import CurveFunction
from .wigner import WignerGrid, kernel_bundle, kernel_report, kernel_transformed, reconstruct_density


class DiscreteWignerTransform(TransformerMixin, BaseEstimator):
    """Discrete Wigner transform of ``n``-qubit states on a curve bundle.

    Parameters
    ----------
    n : int, default=3
        Number of qubits.
    preset : {"standard", "set162", "set234", "set090"} or None, default="standard"
        Named generator triple. Ignored when any of ``f``, ``g``, ``h`` is set.
    f, g, h : sequence of int or None
        Linearized coefficients of the rotation functions; the bundle is
        built from ``P_h Q_g P_f`` applied to the standard bases.
    kernel : {"bundle", "transformed"}, default="bundle"
        ``"bundle"`` sums projectors along the rotated curves; ``"transformed"``
        conjugates the standard kernel pointwise and keeps straight lines.
    irreducible_poly : int or None
        Reduction polynomial bitmask; the package default when None.
    branch : {"principal", "conjugate"}, default="principal"
        Square-root branch used to seed the rotation phases.

    Attributes
    ----------
    field_ : Field
    bundle_ : MubBundle
    kernel_ : WignerKernel
    n_features_out_ : int
        ``4 ** n`` grid values per sample, row-major over ``(alpha, beta)``.
    """

    def __init__(self, n=3, preset="standard", f=None, g=None, h=None, kernel="bundle",
                 irreducible_poly=None, branch="principal"):
        self.n = n
        self.preset = preset
        self.f = f
        self.g = g
        self.h = h
        self.kernel = kernel
        self.irreducible_poly = irreducible_poly
        self.branch = branch

    def _generators(self, field):
        if self.f is None and self.g is None and self.h is None:
            return preset_generators(field, self.preset or "standard")
        zero = [0] * field.n
        return tuple(CurveFunction.linearized(field, c if c is not None else zero)
                     for c in (self.f, self.g, self.h))

    def fit(self, X=None, y=None):
        """Build the field, bundle and kernel. ``X`` and ``y`` are ignored."""
        if self.kernel not in ("bundle", "transformed"):
            raise ValueError(f"kernel must be 'bundle' or 'transformed', got {self.kernel!r}")
        self.field_ = Field(self.n, self.irreducible_poly)
        f, g, h = self._generators(self.field_)
        self.bundle_ = rotated_mubs(self.field_, f, g, h, branch=self.branch,
                                    name=self.preset or "custom")
        if self.kernel == "bundle":
            self.kernel_ = kernel_bundle(self.bundle_)
        else:
            self.kernel_ = kernel_transformed(self.field_, f, g, h, branch=self.branch)
        self.n_features_out_ = self.field_.order ** 2
        return self

    def transform(self, X):
        """Wigner grids of shape ``(m, 4**n)``; see :func:`check_states` for ``X``."""
        check_is_fitted(self, "kernel_")
        rhos = check_states(X, self.field_.order)
        vals = np.einsum("mij,abji->mab", rhos, self.kernel_.operators)
        if np.max(np.abs(vals.imag), initial=0.0) > 1e-10:
            raise ValueError("Wigner values acquired an imaginary part")
        return vals.real.reshape(len(rhos), -1)

    def inverse_transform(self, W):
        """Density matrices ``2^-n sum_p W(p) w(p)``, shape ``(m, d, d)``.

        Only exact when the kernel is orthogonal, see :meth:`kernel_report`.
        """
        check_is_fitted(self, "kernel_")
        q = self.field_.order
        W = np.asarray(W, dtype=float).reshape(-1, q, q)
        return np.stack([reconstruct_density(WignerGrid(self.field_, w), self.kernel_) for w in W])

    def grids(self, X) -> list[WignerGrid]:
        q = self.field_.order
        return [WignerGrid(self.field_, row.reshape(q, q)) for row in self.transform(X)]

    def kernel_report(self):
        check_is_fitted(self, "kernel_")
        return kernel_report(self.kernel_)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "kernel_")
        q = self.field_.order
        return np.array([f"W_{a}_{b}" for a in range(q) for b in range(q)], dtype=object)
