"""Matrix-free adjacency-tensor operator, multilinear form, and t-norm.

The order-t adjacency tensor of a t-uniform hypergraph carries the entry
1/(t-1)! on every permutation of every edge tuple.  None of that is ever
materialized: the (t-1)! permutations cancel the factorial, so

    (A x)_v   = sum over edges e containing v of  prod_{u in e, u != v} x_u
    x^T(A x)  = t * sum over edges e of  prod_{u in e} x_u

and both are evaluated by streaming over the edge list in O(t*m).
Vectors are plain numpy arrays, one scalar per vertex; complex entries
are supported throughout (the root-of-unity certificates need them),
real float64 is the fast path.

Per-edge products are computed branch-free with prefix/suffix cumulative
products (no sparsity shortcut, no division).  Form accumulation switches
to exact compensated summation once the edge count reaches
``COMPENSATED_SUM_THRESHOLD`` so that certificate slacks near 1e-9 are
not drowned in rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hypergraph import Hypergraph

#: edge count at which form sums switch to exact (fsum) accumulation
COMPENSATED_SUM_THRESHOLD = 10_000


@dataclass(frozen=True)
class FormValue:
    """A form evaluation with its optional per-edge breakdown.

    When ``components`` is kept, ``value == t * components.sum()`` up to
    the accumulation rule above.
    """

    value: float | complex
    components: np.ndarray | None = None


def as_vector(h: Hypergraph, x) -> np.ndarray:
    """Validate and coerce x to a float64/complex128 vector of length n."""
    arr = np.asarray(x)
    if arr.shape != (h.n,):
        raise ValueError(f"vector has shape {arr.shape}, expected ({h.n},)")
    dtype = np.complex128 if np.iscomplexobj(arr) else np.float64
    arr = np.ascontiguousarray(arr, dtype=dtype)
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector has non-finite entries")
    return arr


def _partial_products(values: np.ndarray) -> np.ndarray:
    """Leave-one-out products along axis 1 of an (m, t) array."""
    m, t = values.shape
    prefix = np.ones_like(values)
    suffix = np.ones_like(values)
    if t > 1:
        np.cumprod(values[:, :-1], axis=1, out=prefix[:, 1:])
        np.cumprod(values[:, :0:-1], axis=1, out=suffix[:, -2::-1])
    return prefix * suffix


def _full_products(values: np.ndarray) -> np.ndarray:
    return np.prod(values, axis=1)


def _sum_exact(arr: np.ndarray):
    """Compensated (exactly rounded) sum of a 1-d array."""
    if np.iscomplexobj(arr):
        return complex(math.fsum(arr.real), math.fsum(arr.imag))
    return math.fsum(arr)


def _accumulate(arr: np.ndarray):
    if arr.size >= COMPENSATED_SUM_THRESHOLD:
        return _sum_exact(arr)
    total = arr.sum()
    return complex(total) if np.iscomplexobj(arr) else float(total)


def _scatter_columns(n: int, edges: np.ndarray, contrib: np.ndarray) -> np.ndarray:
    """Sum the (m, t) per-position contributions into a length-n vector."""
    t = edges.shape[1]
    if np.iscomplexobj(contrib):
        out = np.zeros(n, dtype=np.complex128)
        for j in range(t):
            out.real += np.bincount(edges[:, j], weights=contrib[:, j].real,
                                    minlength=n)
            out.imag += np.bincount(edges[:, j], weights=contrib[:, j].imag,
                                    minlength=n)
    else:
        out = np.zeros(n, dtype=np.float64)
        for j in range(t):
            out += np.bincount(edges[:, j], weights=contrib[:, j], minlength=n)
    return out


def apply_adjacency(h: Hypergraph, x) -> np.ndarray:
    """(A x)_v = sum over edges at v of the product of the other entries."""
    x = as_vector(h, x)
    if h.m == 0:
        return np.zeros_like(x)
    edges = h.edge_array
    partial = _partial_products(x[edges])
    return _scatter_columns(h.n, edges, partial)


def edge_contributions(h: Hypergraph, x) -> np.ndarray:
    """Per-edge monomials x^e = prod_{u in e} x_u, in edge-list order."""
    x = as_vector(h, x)
    if h.m == 0:
        return np.zeros(0, dtype=x.dtype)
    return _full_products(x[h.edge_array])


def adjacency_form(h: Hypergraph, x) -> float | complex:
    """x^T(A x) = t * sum over edges of x^e.

    Degree-t homogeneous; for real x it equals the inner product of x
    with ``apply_adjacency(h, x)``.
    """
    contrib = edge_contributions(h, x)
    return h.t * _accumulate(contrib)


def form_breakdown(h: Hypergraph, x) -> FormValue:
    """Like :func:`adjacency_form` but keeping the per-edge components."""
    contrib = edge_contributions(h, x)
    return FormValue(value=h.t * _accumulate(contrib), components=contrib)


def shifted_form(h: Hypergraph, x) -> float | complex:
    """x^T((A - (t m / n^t) J) x) where J is the all-ones multilinear map.

    Uses the identity y^T(J y) = (sum_v y_v)^t, so the value is
    ``adjacency_form(h, x) - (t m / n^t) * (sum x)^t``.  Vanishes on the
    all-ones vector of a regular hypergraph, and coincides with the plain
    adjacency form whenever the entries of x sum to zero.
    """
    x = as_vector(h, x)
    total = _accumulate(x)
    c = h.t * h.m / float(h.n) ** h.t
    return adjacency_form(h, x) - c * total ** h.t


def t_norm(x, t: int) -> float:
    """(sum |x_v|^t)^(1/t), guarded against overflow by max-scaling."""
    if t < 2:
        raise ValueError(f"t-norm needs t >= 2, got {t}")
    arr = np.asarray(x)
    mags = np.abs(arr).astype(np.float64, copy=False)
    peak = mags.max(initial=0.0)
    if peak == 0.0:
        return 0.0
    return float(peak * (np.sum((mags / peak) ** t)) ** (1.0 / t))


def t_norm_pow(x, t: int) -> float:
    """sum |x_v|^t, the t-th power of the t-norm without the root."""
    if t < 2:
        raise ValueError(f"t-norm needs t >= 2, got {t}")
    mags = np.abs(np.asarray(x)).astype(np.float64, copy=False)
    return float(np.sum(mags ** t))
