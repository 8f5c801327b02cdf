"""Prime-field modular arithmetic and the integer <-> digit-vector codec.

Every dense vector in this package is indexed by integers a in [0, p^k),
read as p-ary digit vectors with the least significant digit first:

    a = sum_j a_j * p^j,   a_j in [0, p).

All modules share this one convention, so spectra, codeword enumerations
and probability vectors line up without reindexing.
"""

from __future__ import annotations

import numpy as np

from .errors import CapacityError

# Index spaces larger than 2^CAPACITY_BITS are refused so that flat
# indices always fit comfortably in int64.
CAPACITY_BITS = 40


def is_prime(p: int) -> bool:
    """Trial-division primality test; adequate at desk scale."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def ensure_prime(p: int) -> int:
    p = int(p)
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")
    return p


def ensure_capacity(p: int, k: int) -> int:
    """Return p**k, refusing index spaces beyond 2^40."""
    if k < 0:
        raise ValueError(f"dimension must be non-negative, got {k}")
    size = int(p) ** int(k)
    if size > 1 << CAPACITY_BITS:
        raise CapacityError(
            f"index space p^k = {p}^{k} exceeds the 2^{CAPACITY_BITS} capacity guard"
        )
    return size


def to_digits(a: int, p: int, k: int) -> np.ndarray:
    """p-ary digits of a, least significant first, as a length-k int array."""
    size = ensure_capacity(p, k)
    a = int(a)
    if not 0 <= a < size:
        raise ValueError(f"index {a} out of range [0, {p}^{k})")
    powers = p ** np.arange(k, dtype=np.int64)
    return (a // powers) % p


def from_digits(digits, p: int) -> int:
    """Inverse of to_digits: sum_j d_j * p^j."""
    d = np.asarray(digits, dtype=np.int64)
    if d.ndim != 1:
        raise ValueError("digit vector must be one-dimensional")
    if d.size and (d.min() < 0 or d.max() >= p):
        raise ValueError(f"digit out of range [0, {p})")
    ensure_capacity(p, d.size)
    powers = p ** np.arange(d.size, dtype=np.int64)
    return int(d @ powers)


def digit_matrix(p: int, k: int) -> np.ndarray:
    """All of (F_p)^k as a (p^k, k) digit matrix, row a = to_digits(a)."""
    size = ensure_capacity(p, k)
    powers = p ** np.arange(k, dtype=np.int64)
    return (np.arange(size, dtype=np.int64)[:, None] // powers) % p


def dot_mod(u, v, p: int) -> int:
    """Dot product of two digit vectors mod p."""
    u = np.asarray(u)
    v = np.asarray(v)
    if u.shape != v.shape or u.ndim != 1:
        raise ValueError(f"length mismatch: {u.shape} vs {v.shape}")
    # exact integer arithmetic; these vectors are short
    return sum(int(a) * int(b) for a, b in zip(u, v)) % p


def matvec_mod(G, b, p: int) -> np.ndarray:
    """Row-vector-times-matrix c = b^T G over F_p; c has one entry per column."""
    G = np.asarray(G, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if G.ndim != 2 or b.ndim != 1 or b.size != G.shape[0]:
        raise ValueError(f"shape mismatch: G is {G.shape}, b has length {b.size}")
    if b.size * p * p < 2**62:
        return (b @ G) % p
    # huge p: keep products exact with Python integers
    return np.array(
        [sum(int(bi) * int(gij) for bi, gij in zip(b, col)) % p for col in G.T],
        dtype=np.int64,
    )
