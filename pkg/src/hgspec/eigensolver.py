"""Iterative solvers for the two spectral quantities.

``spectral_radius`` runs the shifted power iteration for nonnegative
symmetric tensors: from a strictly positive start,

    y = A x + shift * x^[t-1],    x <- y^[1/(t-1)] renormalized in t-norm.

Any positive shift makes the iteration map strictly order-preserving, so
it converges on connected hypergraphs; the eigenvalue is recovered as
the adjacency form at the fixed point.

``lambda2_estimate`` maximizes |x^T((A - (t m / n^t) J) x)| over the unit
t-norm sphere by seeded multi-start projected gradient ascent with step
halving.  The shifted map is not nonnegative, so no Perron-style power
iteration applies; the returned value is a certified lower estimate of
the shifted spectral norm (the best feasible point seen), not a claimed
global optimum.  The search runs over real vectors by default; a
complex-phase mode exists behind ``SolverConfig.complex_search``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NotConnectedError
from .forms import _accumulate, _full_products, _partial_products, \
    _scatter_columns, t_norm
from .hypergraph import Hypergraph

#: step size below which ascent is treated as stagnated at a local optimum
_STEP_FLOOR = 1e-17


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances, iteration caps, restart count, seed, and shift."""

    tol: float = 1e-10
    max_iters: int = 100_000
    restarts: int = 32
    seed: int = 0
    shift: float = 1.0
    complex_search: bool = False

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if self.restarts < 1:
            raise ValueError(f"restarts must be >= 1, got {self.restarts}")
        if self.shift < 0:
            raise ValueError(f"shift must be >= 0, got {self.shift}")


@dataclass
class EigenResult:
    """Value estimate with its witness vector and exit diagnostics."""

    value: float
    vector: np.ndarray
    iterations: int
    residual: float


def _require_connected(h: Hypergraph) -> None:
    if not h.is_connected:
        raise NotConnectedError("spectral operations require a connected "
                                "hypergraph")


def spectral_radius(h: Hypergraph, cfg: SolverConfig | None = None) -> EigenResult:
    """Largest eigenvalue of the adjacency tensor, with its Perron vector.

    The returned vector is nonnegative with unit t-norm; the residual is
    the eigen-equation defect max_v |(A x)_v - value * x_v^(t-1)| (the
    additive shift cancels from both sides).
    """
    cfg = cfg or SolverConfig()
    _require_connected(h)
    t, n = h.t, h.n
    edges = h.edge_array
    rng = np.random.default_rng(cfg.seed)
    x = 1.0 + 0.01 * rng.random(n)
    x /= t_norm(x, t)
    residual = np.inf
    for it in range(1, cfg.max_iters + 1):
        if h.m:
            ax = _scatter_columns(n, edges, _partial_products(x[edges]))
        else:
            ax = np.zeros(n)
        lam = float(np.dot(x, ax))
        xt1 = x ** (t - 1)
        residual = float(np.max(np.abs(
            ax + cfg.shift * xt1 - (lam + cfg.shift) * xt1
        )))
        if residual <= cfg.tol:
            return EigenResult(value=lam, vector=x, iterations=it,
                               residual=residual)
        y = ax + cfg.shift * xt1
        x = y ** (1.0 / (t - 1))
        x /= t_norm(x, t)
    raise NoConvergence(cfg.max_iters, residual)


def _shifted_value(x: np.ndarray, edges: np.ndarray, t: int, c: float):
    """Form value of the J-shifted map at x (complex-safe)."""
    total = _accumulate(x)
    if edges.shape[0]:
        form = t * _accumulate(_full_products(x[edges]))
    else:
        form = 0.0
    return form - c * total ** t


def _shifted_value_grad(x: np.ndarray, edges: np.ndarray, t: int, c: float,
                        n: int):
    """Form value and holomorphic gradient t * (A x - c (sum x)^(t-1))."""
    total = _accumulate(x)
    if edges.shape[0]:
        vals = x[edges]
        partial = _partial_products(vals)
        form = t * _accumulate(partial[:, 0] * vals[:, 0])
        ax = _scatter_columns(n, edges, partial)
    else:
        form = 0.0
        ax = np.zeros_like(x)
    grad = t * (ax - c * total ** (t - 1))
    return form - c * total ** t, grad


def _sphere_residual(x, f_abs, sigma_grad, t):
    """KKT defect of |form| on the t-norm sphere at unit-norm x."""
    if np.iscomplexobj(x):
        psi = np.abs(x) ** (t - 2) * x
    else:
        psi = np.sign(x) * np.abs(x) ** (t - 1)
    return float(np.max(np.abs(sigma_grad / t - f_abs * psi)))


@dataclass
class _Restart:
    value: float
    vector: np.ndarray
    iterations: int
    residual: float
    converged: bool


def _ascend(x0: np.ndarray, edges: np.ndarray, t: int, c: float, n: int,
            cfg: SolverConfig) -> _Restart:
    """Projected gradient ascent on |shifted form| over the t-norm sphere.

    Counts every objective evaluation against ``cfg.max_iters``.  A
    restart is converged when the KKT residual drops to ``cfg.tol`` or
    the step underflows (the value is then locally optimal to machine
    precision even though the eigen-defect may still exceed tol).
    """
    x = x0 / t_norm(x0, t)
    f, grad = _shifted_value_grad(x, edges, t, c, n)
    evals = 1
    eta = 0.1
    converged = False
    residual = np.inf
    while evals < cfg.max_iters:
        if abs(f) == 0.0:
            sigma_grad = grad
        elif np.iscomplexobj(x):
            phase = np.conj(f) / abs(f)
            sigma_grad = np.conj(phase * grad)
        else:
            sigma_grad = grad if f >= 0 else -grad
        residual = _sphere_residual(x, abs(f), sigma_grad, t)
        if residual <= cfg.tol:
            converged = True
            break
        gnorm = float(np.linalg.norm(sigma_grad))
        if gnorm == 0.0:
            break
        direction = sigma_grad / gnorm
        accepted = False
        while evals < cfg.max_iters:
            y = x + eta * direction
            y /= t_norm(y, t)
            fy = _shifted_value(y, edges, t, c)
            evals += 1
            if abs(fy) > abs(f):
                x = y
                f, grad = _shifted_value_grad(x, edges, t, c, n)
                eta *= 1.25
                accepted = True
                break
            eta *= 0.5
            if eta < _STEP_FLOOR:
                break
        if not accepted:
            converged = eta < _STEP_FLOOR or residual <= cfg.tol
            break
    return _Restart(value=float(abs(f)), vector=x, iterations=evals,
                    residual=residual, converged=converged)


def lambda2_estimate(h: Hypergraph, cfg: SolverConfig | None = None) -> EigenResult:
    """Best-over-restarts lower estimate of the shifted spectral norm.

    Each restart ascends from a seeded random start; the winner is the
    largest value, ties broken by lowest restart index.  Raises
    ``NoConvergence`` when no restart converged at all.
    """
    cfg = cfg or SolverConfig()
    _require_connected(h)
    t, n = h.t, h.n
    edges = h.edge_array
    c = t * h.m / float(n) ** t
    rng = np.random.default_rng(cfg.seed)
    best: _Restart | None = None
    worst_fail: _Restart | None = None
    any_converged = False
    for _ in range(cfg.restarts):
        if cfg.complex_search:
            x0 = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        else:
            x0 = rng.standard_normal(n)
        run = _ascend(x0, edges, t, c, n, cfg)
        if run.converged:
            any_converged = True
            if best is None or run.value > best.value:
                best = run
        elif worst_fail is None or run.value > worst_fail.value:
            worst_fail = run
    if not any_converged:
        assert worst_fail is not None
        raise NoConvergence(worst_fail.iterations, worst_fail.residual)
    assert best is not None
    return EigenResult(value=best.value, vector=best.vector,
                       iterations=best.iterations, residual=best.residual)
