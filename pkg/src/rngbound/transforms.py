"""Walsh-Hadamard and Kronecker-factorized Fourier transforms on (F_p)^k.

The forward transform of a probability vector is its spectrum: the vector
of eigenvalues of the group circulant matrix the distribution generates.
Entry b of the spectrum is sum_j omega^(b.j mod p) mu(j) with
omega = exp(2 pi i / p), so for p = 2 it is the real Walsh characteristic
vector and the transform reduces to the Hadamard butterfly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .field_vec import ensure_capacity, ensure_prime
from .pmf import Pmf


@dataclass
class Spectrum:
    """Complex eigenvalue vector of a distribution on (F_p)^k.

    For spectra of valid Pmfs: entry 0 is 1, every modulus is <= 1, and
    the entry at -b is the conjugate of the entry at b.
    """

    p: int
    k: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.p = ensure_prime(self.p)
        size = ensure_capacity(self.p, self.k)
        v = np.array(self.values, dtype=np.complex128)
        if v.ndim != 1 or v.size != size:
            raise ValueError(f"expected {size} = {self.p}^{self.k} entries, got shape {v.shape}")
        v.flags.writeable = False
        self.values = v

    @property
    def size(self) -> int:
        return self.values.size


def wht(v) -> np.ndarray:
    """Walsh-Hadamard transform in natural (Hadamard) order.

    out(a) = sum_b (-1)^(a.b) v(b), computed by the in-place radix-2
    butterfly in k passes over a length-2^k vector. Applying it twice
    multiplies by 2^k.
    """
    a = np.array(v)
    if a.ndim != 1 or a.size == 0 or a.size & (a.size - 1):
        raise ValueError(f"length must be a power of two, got shape {a.shape}")
    if not np.iscomplexobj(a):
        a = a.astype(np.float64)
    n = a.size
    h = 1
    while h < n:
        a = a.reshape(-1, 2, h)
        diff = a[:, 0, :] - a[:, 1, :]
        a[:, 0, :] += a[:, 1, :]
        a[:, 1, :] = diff
        a = a.reshape(n)
        h *= 2
    return a


@lru_cache(maxsize=None)
def _fourier_matrix(p: int, inverse: bool) -> np.ndarray:
    """p-point DFT matrix omega^(r s), built from one precomputed root table."""
    sign = -1 if inverse else 1
    roots = np.exp(sign * 2j * np.pi * np.arange(p) / p)
    return roots[np.outer(np.arange(p), np.arange(p)) % p]


def _infer_k(length: int, p: int) -> int:
    k = 0
    size = 1
    while size < length:
        size *= p
        k += 1
    if size != length:
        raise ValueError(f"length {length} is not a power of {p}")
    return k


def _axis_transform(v: np.ndarray, p: int, k: int, inverse: bool = False) -> np.ndarray:
    arr = np.asarray(v, dtype=np.complex128).reshape((p,) * k)
    F = _fourier_matrix(p, inverse)
    for axis in range(k):
        arr = np.moveaxis(np.tensordot(F, arr, axes=(1, axis)), 0, axis)
    return arr.reshape(-1)


def fourier(v, p: int, k: int | None = None) -> Spectrum:
    """Discrete Fourier transform on (F_p)^k: out(b) = sum_j omega^(b.j) v(j).

    One p-point pass per digit axis (the Kronecker factorization of the
    transform matrix), so the cost is O(k p^(k+1)). The p = 2 case runs
    through the real Hadamard butterfly instead of the complex path.
    """
    p = ensure_prime(p)
    v = np.asarray(v)
    if v.ndim != 1:
        raise ValueError("expected a one-dimensional vector")
    if k is None:
        k = _infer_k(v.size, p)
    elif v.size != ensure_capacity(p, k):
        raise ValueError(f"length {v.size} does not match p^k = {p}^{k}")
    if p == 2:
        return Spectrum(p, k, wht(v))
    return Spectrum(p, k, _axis_transform(v, p, k))


def inverse_fourier(s: Spectrum) -> np.ndarray:
    """Inverse transform: out(j) = p^-k sum_b conj(omega^(b.j)) s(b).

    Returns the complex vector; a spectrum that came from a Pmf round-trips
    with imaginary residue at float-dust level.
    """
    scale = 1.0 / s.size
    if s.p == 2:
        return wht(s.values) * scale
    return _axis_transform(s.values, s.p, s.k, inverse=True) * scale


def spectrum_of(m: Pmf) -> Spectrum:
    """Eigenvalues of the circulant convolution operator generated by m."""
    return fourier(m.values, m.p, m.k)


def lambda_star(s: Spectrum) -> float:
    """Largest modulus over the non-trivial (b != 0) spectrum entries."""
    if s.size < 2:
        raise ValueError("lambda_star needs a spectrum of length >= 2")
    return float(np.abs(s.values[1:]).max())
