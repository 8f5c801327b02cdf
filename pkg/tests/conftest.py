"""Shared helpers: independent brute-force oracles and random generators.

The oracles here are deliberately written from the definitions (plain
Python loops, O(N^2) where N = p^k) and never call the fast paths they
are used to check.
"""

from __future__ import annotations

import cmath

import numpy as np
import pytest

from rngbound.codes import LinearCode
from rngbound.errors import RankError
from rngbound.pmf import Pmf


def digits_of(a: int, p: int, k: int) -> list[int]:
    return [(a // p**j) % p for j in range(k)]


def index_of(digits, p: int) -> int:
    return sum(int(d) * p**j for j, d in enumerate(digits))


def dft_direct(vals, p: int, k: int) -> np.ndarray:
    """out(b) = sum_j omega^(b.j mod p) v(j), straight from the definition."""
    size = p**k
    out = np.empty(size, dtype=np.complex128)
    for b in range(size):
        db = digits_of(b, p, k)
        acc = 0j
        for j in range(size):
            dj = digits_of(j, p, k)
            e = sum(x * y for x, y in zip(db, dj)) % p
            acc += vals[j] * cmath.exp(2j * cmath.pi * e / p)
        out[b] = acc
    return out


def convolve_direct(a, b, p: int, k: int) -> np.ndarray:
    """out(r) = sum_j a(j) b(r - j), digitwise mod p, by double loop."""
    size = p**k
    out = np.zeros(size)
    for r in range(size):
        dr = digits_of(r, p, k)
        for j in range(size):
            dj = digits_of(j, p, k)
            diff = [(x - y) % p for x, y in zip(dr, dj)]
            out[r] += a[j] * b[index_of(diff, p)]
    return out


def random_pmf(rng, p: int, k: int) -> Pmf:
    v = rng.random(p**k) + 1e-3
    return Pmf(p, k, v / v.sum())


def random_full_rank_code(rng, p: int, n: int, k: int) -> LinearCode:
    while True:
        G = rng.integers(0, p, size=(k, n))
        try:
            return LinearCode(p, n, k, G)
        except RankError:
            continue


HAMMING74_ROWS = [
    [1, 0, 0, 0, 1, 1, 0],
    [0, 1, 0, 0, 1, 0, 1],
    [0, 0, 1, 0, 0, 1, 1],
    [0, 0, 0, 1, 1, 1, 1],
]


@pytest.fixture
def hamming74() -> LinearCode:
    return LinearCode(2, 7, 4, HAMMING74_ROWS)


@pytest.fixture
def rep31() -> LinearCode:
    return LinearCode(2, 3, 1, [[1, 1, 1]])
