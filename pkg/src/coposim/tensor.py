"""Symmetric tensors stored by canonical multi-index, plus the multilinear
evaluations everything else builds on.

An order-``m``, dimension-``n`` symmetric tensor keeps one coefficient per
sorted multi-index ``(i_1 <= ... <= i_m)`` with entries ``i_j in {1, ..., n}``.
The remaining ``n**m - C(n+m-1, m)`` logical entries follow by symmetry, and
every sum over the dense index space is carried out over canonical keys
weighted by the multinomial multiplicity ``m! / (c_1! ... c_n!)``, where
``c_i`` counts how often index ``i`` appears in the key.

Summations that feed sign decisions (form values, inner products) use
``math.fsum`` so accumulation error cannot flip a comparison against zero.
"""

from __future__ import annotations

import itertools
import json
import math
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

import numpy as np

__all__ = [
    "SymmetricTensor",
    "canonical_key",
    "canonical_keys",
    "multiplicity",
]


def canonical_key(idx: Iterable[int]) -> tuple[int, ...]:
    """Sort a multi-index into its canonical (nondecreasing) form."""
    return tuple(sorted(int(i) for i in idx))


def canonical_keys(order: int, dim: int) -> Iterator[tuple[int, ...]]:
    """All canonical multi-indices of the given shape, in lexicographic order."""
    return itertools.combinations_with_replacement(range(1, dim + 1), order)


def multiplicity(key: tuple[int, ...]) -> int:
    """Number of distinct permutations of a sorted multi-index."""
    count = math.factorial(len(key))
    for _, group in itertools.groupby(key):
        count //= math.factorial(sum(1 for _ in group))
    return count


def _run_lengths(key: tuple[int, ...]) -> Iterator[tuple[int, int, int]]:
    """Yield (index value, first position, run length) for a sorted key."""
    start = 0
    m = len(key)
    while start < m:
        value = key[start]
        end = start
        while end < m and key[end] == value:
            end += 1
        yield value, start, end - start
        start = end


class SymmetricTensor:
    """Immutable symmetric tensor in canonical sparse storage.

    Parameters
    ----------
    order:
        Number of indices ``m`` (at least 1).
    dim:
        Index range ``n``; every index runs over ``1..n``.
    entries:
        Mapping (or iterable of pairs) from multi-index to coefficient.
        Multi-indices may arrive in any order and are canonicalized; two
        entries that collide on the same canonical key are rejected.
        Exact zeros are dropped; absent keys read as zero.
    """

    __slots__ = ("_order", "_dim", "_entries", "_dense")

    def __init__(self, order, dim, entries=None):
        order = int(order)
        dim = int(dim)
        if order < 1:
            raise ValueError(f"order must be a positive integer, got {order}")
        if dim < 1:
            raise ValueError(f"dim must be a positive integer, got {dim}")
        canonical: dict[tuple[int, ...], float] = {}
        if entries is not None:
            pairs = entries.items() if isinstance(entries, Mapping) else entries
            for idx, value in pairs:
                key = canonical_key(idx)
                self._check_key_static(key, order, dim)
                if key in canonical:
                    raise ValueError(f"duplicate canonical key {key}")
                value = float(value)
                if value != 0.0:
                    canonical[key] = value
        self._order = order
        self._dim = dim
        self._entries = dict(sorted(canonical.items()))
        self._dense = None

    @staticmethod
    def _check_key_static(key: tuple[int, ...], order: int, dim: int) -> None:
        if len(key) != order:
            raise ValueError(f"multi-index {key} has length {len(key)}, expected {order}")
        if key and (key[0] < 1 or key[-1] > dim):
            raise ValueError(f"multi-index {key} out of range 1..{dim}")

    @property
    def order(self) -> int:
        return self._order

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def entries(self) -> Mapping[tuple[int, ...], float]:
        """Read-only view of the canonical entries (zeros omitted)."""
        return MappingProxyType(self._entries)

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def __getitem__(self, idx) -> float:
        """Coefficient at a multi-index given in any order."""
        key = canonical_key(idx)
        self._check_key_static(key, self._order, self._dim)
        return self._entries.get(key, 0.0)

    def __repr__(self) -> str:
        return f"SymmetricTensor(order={self._order}, dim={self._dim}, nnz={self.nnz})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymmetricTensor):
            return NotImplemented
        return (
            self._order == other._order
            and self._dim == other._dim
            and self._entries == other._entries
        )

    __hash__ = None

    def allclose(self, other: "SymmetricTensor", rtol: float = 1e-12, atol: float = 1e-12) -> bool:
        """Entrywise closeness over the union of stored keys."""
        self._check_shape(other)
        keys = self._entries.keys() | other._entries.keys()
        return all(
            math.isclose(self._entries.get(k, 0.0), other._entries.get(k, 0.0), rel_tol=rtol, abs_tol=atol)
            for k in keys
        )

    # -- shape and argument checks ------------------------------------------

    def _check_shape(self, other: "SymmetricTensor") -> None:
        if self._order != other._order or self._dim != other._dim:
            raise ValueError(
                f"shape mismatch: ({self._order}, {self._dim}) vs ({other._order}, {other._dim})"
            )

    def _check_vector(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != (self._dim,):
            raise ValueError(f"vector of shape {x.shape} does not match dim {self._dim}")
        return x

    # -- vector space ---------------------------------------------------------

    def __add__(self, other: "SymmetricTensor") -> "SymmetricTensor":
        if not isinstance(other, SymmetricTensor):
            return NotImplemented
        self._check_shape(other)
        merged = dict(self._entries)
        for key, value in other._entries.items():
            merged[key] = merged.get(key, 0.0) + value
        return SymmetricTensor(self._order, self._dim, merged)

    def __sub__(self, other: "SymmetricTensor") -> "SymmetricTensor":
        if not isinstance(other, SymmetricTensor):
            return NotImplemented
        return self + (-1.0) * other

    def __neg__(self) -> "SymmetricTensor":
        return (-1.0) * self

    def __mul__(self, t) -> "SymmetricTensor":
        if not isinstance(t, (int, float)):
            return NotImplemented
        t = float(t)
        return SymmetricTensor(
            self._order, self._dim, {k: t * v for k, v in self._entries.items()}
        )

    __rmul__ = __mul__

    # -- evaluations ----------------------------------------------------------

    def form(self, x) -> float:
        """Value of the homogeneous form: the full contraction against ``x``."""
        x = self._check_vector(x)
        return math.fsum(
            multiplicity(key) * value * math.prod(x[i - 1] for i in key)
            for key, value in self._entries.items()
        )

    def gradient_form(self, x) -> np.ndarray:
        """One-slot contraction: component ``i`` sums the coefficient times
        ``x`` over the remaining ``m - 1`` slots of every entry with a leading
        index ``i``.  Satisfies ``x @ gradient_form(x) == form(x)``."""
        x = self._check_vector(x)
        m = self._order
        terms: list[list[float]] = [[] for _ in range(self._dim)]
        for key, value in self._entries.items():
            mult = multiplicity(key)
            for i, start, count in _run_lengths(key):
                rest = key[:start] + key[start + 1 :]
                weight = value * mult * count / m
                terms[i - 1].append(weight * math.prod(x[j - 1] for j in rest))
        return np.array([math.fsum(t) for t in terms])

    def mixed_form(self, x, k: int, y) -> float:
        """Partial contraction with ``k`` slots filled by ``x`` and the
        remaining ``m - k`` by ``y``."""
        m = self._order
        k = int(k)
        if not 0 <= k <= m:
            raise ValueError(f"k must lie in 0..{m}, got {k}")
        x = self._check_vector(x)
        y = self._check_vector(y)
        fact_k = math.factorial(k)
        fact_r = math.factorial(m - k)
        total: list[float] = []
        for key, value in self._entries.items():
            support = [(i, c) for i, _, c in _run_lengths(key)]
            counts = [c for _, c in support]
            for split in itertools.product(*(range(c + 1) for c in counts)):
                if sum(split) != k:
                    continue
                ways_x = fact_k
                ways_y = fact_r
                term = value
                for (i, c), p in zip(support, split):
                    ways_x //= math.factorial(p)
                    ways_y //= math.factorial(c - p)
                    term *= x[i - 1] ** p * y[i - 1] ** (c - p)
                total.append(term * ways_x * ways_y)
        return math.fsum(total)

    def multilinear(self, factors) -> float:
        """Inner product against the rank-one tensor built from ``factors``
        (one vector per slot); invariant under permuting the factors."""
        vs = [self._check_vector(f) for f in factors]
        if len(vs) != self._order:
            raise ValueError(f"expected {self._order} factors, got {len(vs)}")
        total: list[float] = []
        for key, value in self._entries.items():
            for perm in set(itertools.permutations(key)):
                total.append(value * math.prod(v[i - 1] for v, i in zip(vs, perm)))
        return math.fsum(total)

    def inner(self, other: "SymmetricTensor") -> float:
        """Entrywise inner product over the full dense index space
        (multiplicities counted)."""
        self._check_shape(other)
        keys = self._entries.keys() & other._entries.keys()
        return math.fsum(
            multiplicity(k) * self._entries[k] * other._entries[k] for k in sorted(keys)
        )

    def norm(self) -> float:
        """Frobenius norm over the dense index space."""
        return math.sqrt(self.inner(self))

    def min_coefficient(self) -> float:
        """Smallest coefficient over all canonical multi-indices, implicit
        zeros included."""
        stored = min(self._entries.values(), default=0.0)
        if self.nnz < math.comb(self._dim + self._order - 1, self._order):
            return min(stored, 0.0)
        return stored

    # -- structural operations --------------------------------------------------

    def principal_subtensor(self, J) -> "SymmetricTensor":
        """Restriction to the index subset ``J`` (1-based), relabeled to
        ``1..len(J)`` in increasing order of the original indices."""
        J = sorted({int(j) for j in J})
        if not J:
            raise ValueError("index subset must be nonempty")
        if J[0] < 1 or J[-1] > self._dim:
            raise ValueError(f"index subset {J} out of range 1..{self._dim}")
        relabel = {j: t + 1 for t, j in enumerate(J)}
        keep = set(J)
        entries = {
            tuple(relabel[i] for i in key): value
            for key, value in self._entries.items()
            if keep.issuperset(key)
        }
        return SymmetricTensor(self._order, len(J), entries)

    def congruence(self, V) -> "SymmetricTensor":
        """Coefficients of the form in the coordinates spanned by the columns
        of ``V``: entry ``(i_1 .. i_m)`` equals the multilinear value against
        columns ``i_1, ..., i_m``.  Satisfies
        ``congruence(V).form(lam) == form(V @ lam)``."""
        V = np.asarray(V, dtype=float)
        if V.shape != (self._dim, self._dim):
            raise ValueError(f"expected a {self._dim}x{self._dim} matrix, got {V.shape}")
        dense = self.to_dense()
        for _ in range(self._order):
            dense = np.tensordot(dense, V, axes=([0], [0]))
        entries = {
            key: dense[tuple(i - 1 for i in key)]
            for key in canonical_keys(self._order, self._dim)
        }
        return SymmetricTensor(self._order, self._dim, entries)

    def to_dense(self) -> np.ndarray:
        """Dense read-only array of shape ``(n,) * m`` (cached)."""
        if self._dense is None:
            dense = np.zeros((self._dim,) * self._order)
            for key, value in self._entries.items():
                for perm in set(itertools.permutations(key)):
                    dense[tuple(i - 1 for i in perm)] = value
            dense.setflags(write=False)
            self._dense = dense
        return self._dense

    # -- interchange format -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "order": self._order,
            "dim": self._dim,
            "entries": [
                {"idx": list(key), "val": value} for key, value in self._entries.items()
            ],
        }

    def to_json(self, **dumps_kwargs) -> str:
        return json.dumps(self.to_json_dict(), **dumps_kwargs)

    @classmethod
    def from_json_dict(cls, obj: Mapping) -> "SymmetricTensor":
        try:
            order = obj["order"]
            dim = obj["dim"]
            raw = obj["entries"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed tensor object: missing {exc}") from exc
        if not isinstance(raw, list):
            raise ValueError("'entries' must be a list")
        pairs = []
        for item in raw:
            try:
                pairs.append((item["idx"], item["val"]))
            except (KeyError, TypeError) as exc:
                raise ValueError(f"malformed entry {item!r}") from exc
        return cls(order, dim, pairs)

    @classmethod
    def from_json(cls, text: str) -> "SymmetricTensor":
        return cls.from_json_dict(json.loads(text))
