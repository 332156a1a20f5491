"""Independent brute-force oracles for the test suite.

Everything here works on a dense array rebuilt from the canonical entries
with raw index loops, deliberately avoiding the multiplicity-weighted
summation paths used by the library.
"""

import itertools

import numpy as np

from coposim import SymmetricTensor, canonical_keys


def dense_of(A: SymmetricTensor) -> np.ndarray:
    """Dense array filled position by position via sorted lookup."""
    m, n = A.order, A.dim
    dense = np.zeros((n,) * m)
    entries = dict(A.entries)
    for idx in itertools.product(range(1, n + 1), repeat=m):
        dense[tuple(i - 1 for i in idx)] = entries.get(tuple(sorted(idx)), 0.0)
    return dense


def brute_form(dense: np.ndarray, x) -> float:
    m, n = dense.ndim, dense.shape[0]
    total = 0.0
    for idx in itertools.product(range(n), repeat=m):
        term = dense[idx]
        for i in idx:
            term *= x[i]
        total += term
    return total


def brute_gradient(dense: np.ndarray, x) -> np.ndarray:
    m, n = dense.ndim, dense.shape[0]
    out = np.zeros(n)
    for first in range(n):
        total = 0.0
        for rest in itertools.product(range(n), repeat=m - 1):
            term = dense[(first,) + rest]
            for i in rest:
                term *= x[i]
            total += term
        out[first] = total
    return out


def brute_mixed(dense: np.ndarray, x, k: int, y) -> float:
    m, n = dense.ndim, dense.shape[0]
    total = 0.0
    for idx in itertools.product(range(n), repeat=m):
        term = dense[idx]
        for slot, i in enumerate(idx):
            term *= x[i] if slot < k else y[i]
        total += term
    return total


def brute_multilinear(dense: np.ndarray, factors) -> float:
    m, n = dense.ndim, dense.shape[0]
    total = 0.0
    for idx in itertools.product(range(n), repeat=m):
        term = dense[idx]
        for factor, i in zip(factors, idx):
            term *= factor[i]
        total += term
    return total


def brute_inner(d1: np.ndarray, d2: np.ndarray) -> float:
    return float(np.sum(d1 * d2))


def random_symmetric(rng: np.random.Generator, order: int, dim: int,
                     lo: float = -1.0, hi: float = 1.0) -> SymmetricTensor:
    """Random tensor with canonical entries uniform on [lo, hi)."""
    entries = {key: rng.uniform(lo, hi) for key in canonical_keys(order, dim)}
    return SymmetricTensor(order, dim, entries)


def random_simplex_point(rng: np.random.Generator, dim: int) -> np.ndarray:
    return rng.dirichlet(np.ones(dim))


def close(a: float, b: float, tol: float = 1e-10) -> bool:
    return abs(a - b) <= tol * (1.0 + max(abs(a), abs(b)))
