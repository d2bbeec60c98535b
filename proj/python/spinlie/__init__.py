"""Spinor Lie derivatives of Clifford and spinor fields on Lorentzian tetrads."""

import json as _json

from ._spinlie import (
    DomainError,
    Error,
    Expression,
    FlowEscape,
    InputError,
    KillingViolation,
    MathError,
    Multivector,
    PolarForm,
    Scene,
    SceneError,
    SignatureError,
    SingularMetric,
    SingularSpinor,
    SyntaxError,
    TetradMismatch,
    UnknownIdentifier,
    __version__,
    commutator,
    exp_bivector,
    gamma_matrices,
    left_contraction,
    lie,
    lift,
    load_scene,
    max_norm,
    parse_expression,
    parse_scene,
    polar_decompose,
    polar_reconstruct,
    represent,
    scalar_product,
    verify_json,
    wedge,
)


def verify(scene, seed=None, samples=None, tol=None, threads=0):
    """Run the property suite; returns the report as a dict."""
    return _json.loads(verify_json(scene, seed=seed, samples=samples, tol=tol, threads=threads))
