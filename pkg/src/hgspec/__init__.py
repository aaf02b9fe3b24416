"""Spectral quantities and lower-bound certificates of uniform hypergraphs.

A t-uniform hypergraph carries a symmetric order-t adjacency tensor whose
largest eigenvalue (the spectral radius) and J-shifted spectral norm (the
second eigenvalue) generalize the familiar graph quantities under the
t-norm.  This package computes both, evaluates the hypertree threshold
(t/(t-1)) * ((t-1)(k-1))^(1/t), and constructs the certificate vectors
that witness the associated lower bounds: radial decay vectors, their
truncations, multi-center root-of-unity vectors, and strongly orthogonal
families for the higher multilinear values.
"""

from .bounds import (BoundParams, friedman_alternate, g_hat_value, g_value,
                     threshold, verify_g_monotone)
from .constructions import (Certificate, RadialCheckResult,
                            StrongOrthogonalSet,
                            build_strong_orthogonal_family,
                            lambda2_lower_certificate, mu_lower_certificate,
                            multi_center_vector, radial_vector,
                            rho_lower_certificate, verify_radial_inequality)
from .eigensolver import (EigenResult, SolverConfig, lambda2_estimate,
                          spectral_radius)
from .errors import (CertificateError, DiameterTooSmall, DisconnectedError,
                     DomainError, Error, GenerationFailed, InfeasibleParams,
                     NoConvergence, NotConnectedError, NotRegularError,
                     ParseError, SizeOverflow)
from .forms import (FormValue, adjacency_form, apply_adjacency,
                    edge_contributions, form_breakdown, shifted_form, t_norm,
                    t_norm_pow)
from .generators import (GenSpec, complete_uniform, hypertree_ball,
                         random_regular_linear)
from .hypergraph import (UNREACHABLE, DistanceMap, Hypergraph,
                         degree_sequence, diameter_and_path, distances_from,
                         is_acyclic, is_linear, min_eccentricity_vertex,
                         regular_degree)
from .io import emit_hypergraph, parse_hypergraph
from .reports import SpectralReport, dumps_json, emit_sweep_csv

__version__ = "0.1.0"

__all__ = [
    "BoundParams", "Certificate", "DiameterTooSmall", "DisconnectedError",
    "DistanceMap", "DomainError", "EigenResult", "Error", "FormValue",
    "GenSpec", "GenerationFailed", "Hypergraph", "InfeasibleParams",
    "NoConvergence", "NotConnectedError", "NotRegularError", "ParseError",
    "RadialCheckResult", "SizeOverflow", "SolverConfig", "SpectralReport",
    "StrongOrthogonalSet", "UNREACHABLE", "CertificateError",
    "adjacency_form", "apply_adjacency", "build_strong_orthogonal_family",
    "complete_uniform", "degree_sequence", "diameter_and_path",
    "distances_from", "dumps_json", "edge_contributions", "emit_hypergraph",
    "emit_sweep_csv", "form_breakdown", "friedman_alternate", "g_hat_value",
    "g_value", "hypertree_ball", "is_acyclic", "is_linear",
    "lambda2_estimate", "lambda2_lower_certificate",
    "min_eccentricity_vertex", "mu_lower_certificate", "multi_center_vector",
    "parse_hypergraph", "radial_vector", "random_regular_linear",
    "regular_degree", "rho_lower_certificate", "shifted_form",
    "spectral_radius", "t_norm", "t_norm_pow", "threshold",
    "verify_g_monotone", "verify_radial_inequality",
]
