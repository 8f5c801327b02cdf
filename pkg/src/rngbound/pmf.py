"""Probability mass functions on (F_p)^k.

A Pmf is a dense float64 vector of length p^k in the package-wide digit
index order. Construction validates and renormalizes, so every Pmf in
circulation sums to exactly 1 with non-negative entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._format import content_lines, parse_header
from .errors import CapacityError, FormatError
from .field_vec import digit_matrix, ensure_capacity, ensure_prime, to_digits

# Entries below -NEG_TOL are rejected; entries in [-NEG_TOL, 0) are float
# dust from inverse transforms and get clamped to 0 before renormalizing.
NEG_TOL = 1e-12
SUM_TOL = 1e-9

# group_circulant materializes a dense p^k x p^k matrix; test-oracle scale only
CIRCULANT_CAP = 4096


@dataclass
class Pmf:
    """Distribution of a random vector in (F_p)^k.

    values[a] = P(X = digit vector of a). Treated as immutable after
    construction; the backing array is marked read-only.
    """

    p: int
    k: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.p = ensure_prime(self.p)
        size = ensure_capacity(self.p, self.k)
        v = np.array(self.values, dtype=np.float64)
        if v.ndim != 1 or v.size != size:
            raise ValueError(f"expected {size} = {self.p}^{self.k} values, got shape {v.shape}")
        if v.min(initial=0.0) < -NEG_TOL:
            raise ValueError(f"negative probability {v.min()} below tolerance {-NEG_TOL}")
        np.clip(v, 0.0, None, out=v)
        s = v.sum()
        if abs(s - 1.0) > SUM_TOL:
            raise ValueError(f"probabilities sum to {s}, outside 1 +/- {SUM_TOL}")
        v /= s
        v.flags.writeable = False
        self.values = v

    @property
    def size(self) -> int:
        return self.values.size


def uniform(p: int, k: int) -> Pmf:
    """Uniform distribution on (F_p)^k."""
    size = ensure_capacity(ensure_prime(p), k)
    return Pmf(p, k, np.full(size, 1.0 / size))


def point_mass(p: int, k: int, at: int) -> Pmf:
    """Deterministic distribution concentrated on index `at`."""
    size = ensure_capacity(ensure_prime(p), k)
    if not 0 <= at < size:
        raise ValueError(f"index {at} out of range [0, {size})")
    v = np.zeros(size)
    v[at] = 1.0
    return Pmf(p, k, v)


def from_bias(epsilon: float, one_heavy: bool = False) -> Pmf:
    """Binary distribution with bias epsilon = |P(0) - P(1)|.

    Defaults to the zero-heavy orientation P(0) = (1+eps)/2; every bound
    downstream depends only on |eps|, so the orientation only matters when
    comparing exact output distributions.
    """
    epsilon = float(epsilon)
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"bias must lie in [0, 1], got {epsilon}")
    v = np.array([(1.0 + epsilon) / 2.0, (1.0 - epsilon) / 2.0])
    if one_heavy:
        v = v[::-1].copy()
    return Pmf(2, 1, v)


def bias(m: Pmf) -> float:
    """|P(0) - P(1)| of a single bit."""
    if m.p != 2 or m.k != 1:
        raise ValueError(f"bias is defined for p=2, k=1 distributions, got p={m.p}, k={m.k}")
    return abs(float(m.values[0] - m.values[1]))


def l1_from_uniform(m: Pmf) -> float:
    """Full l1 distance delta = sum_j |m(j) - p^-k|; TVD is half of this."""
    return float(np.abs(m.values - 1.0 / m.size).sum())


def tvd_from_uniform(m: Pmf) -> float:
    return 0.5 * l1_from_uniform(m)


def _roll_shift(j: int, p: int, k: int) -> tuple[int, ...]:
    # reshape to (p,)*k is C-ordered: axis m holds digit k-1-m
    return tuple(int(d) for d in to_digits(j, p, k)[::-1])


def convolve(a: Pmf, b: Pmf) -> Pmf:
    """Distribution of X + Y (componentwise mod p) for independent X ~ a, Y ~ b.

    Direct summation out(r) = sum_j a(j) b(r - j); this is the reference
    route that the spectral machinery is tested against, so it must not
    itself go through a Fourier transform.
    """
    if (a.p, a.k) != (b.p, b.k):
        raise ValueError(f"shape mismatch: ({a.p},{a.k}) vs ({b.p},{b.k})")
    p, k = a.p, a.k
    bn = b.values.reshape((p,) * k)
    out = np.zeros_like(bn)
    axes = tuple(range(k))
    for j, w in enumerate(a.values):
        if w == 0.0:
            continue
        out += w * np.roll(bn, _roll_shift(j, p, k), axis=axes)
    return Pmf(p, k, out.reshape(-1))


def group_circulant(m: Pmf) -> np.ndarray:
    """Dense transition matrix with entry (r, j) = m(r - j mod p componentwise).

    Multiplying it by a probability vector equals convolve(m, .); the matrix
    is the convolution operator whose eigenvalues the Fourier transform
    computes. Capped at p^k <= 4096: this is a test oracle, not a fast path.
    """
    p, k = m.p, m.k
    size = m.size
    if size > CIRCULANT_CAP:
        raise CapacityError(f"group_circulant is capped at p^k <= {CIRCULANT_CAP}, got {size}")
    D = digit_matrix(p, k)
    idx = np.zeros((size, size), dtype=np.int64)
    for u in range(k):
        idx += ((D[:, u][:, None] - D[:, u][None, :]) % p) * p**u
    return m.values[idx]


def tensor(parts) -> Pmf:
    """Joint distribution of independent per-digit variables.

    parts[u] is the distribution of digit u; the joint lives on (F_p)^k
    with k = len(parts).
    """
    parts = list(parts)
    if not parts:
        raise ValueError("tensor needs at least one part")
    p = parts[0].p
    for m in parts:
        if m.p != p or m.k != 1:
            raise ValueError("tensor parts must all be k=1 distributions over one prime")
    ensure_capacity(p, len(parts))
    joint = parts[-1].values
    for m in parts[-2::-1]:
        joint = np.kron(joint, m.values)
    # np.kron makes the right factor's index vary fastest, so folding from
    # the highest digit down puts digit 0 in the least significant slot
    return Pmf(p, len(parts), joint)


def product_bernoulli(a: Pmf, b: Pmf) -> Pmf:
    """Distribution of the product of two independent bits.

    The zero outcome absorbs: out(0) = a(0) + a(1) b(0), out(1) = a(1) b(1).
    Repeated products drift toward the point mass at 0, which is why
    non-linear conditioning degrades where linear conditioning smooths.
    """
    for m in (a, b):
        if m.p != 2 or m.k != 1:
            raise ValueError("product_bernoulli needs two p=2, k=1 distributions")
    p1 = float(a.values[1] * b.values[1])
    return Pmf(2, 1, np.array([1.0 - p1, p1]))


# --- .pmf text format -------------------------------------------------------
#
# line 1: "p=<int> k=<int>"
# then p^k whitespace-separated probabilities in index order, any line layout
# lines whose first non-blank character is '#' are comments


def parse_pmf_records(text: str) -> list[Pmf]:
    """Parse one or more .pmf records from a single text blob."""
    records = []
    lines = list(content_lines(text))
    pos = 0
    while pos < len(lines):
        num, line = lines[pos]
        p, k = parse_header(line, num, ("p", "k"))
        try:
            size = ensure_capacity(ensure_prime(p), k)
        except CapacityError:
            raise
        except ValueError as exc:
            raise FormatError(str(exc), num) from None
        pos += 1
        vals: list[float] = []
        while pos < len(lines) and len(vals) < size:
            num, line = lines[pos]
            for tok in line.split():
                try:
                    vals.append(float(tok))
                except ValueError:
                    raise FormatError(f"not a number: '{tok}'", num) from None
            pos += 1
        if len(vals) < size:
            raise FormatError(f"expected {size} probabilities, found {len(vals)}", num)
        if len(vals) > size:
            raise FormatError(f"expected {size} probabilities, found {len(vals)}", num)
        records.append(Pmf(p, k, np.array(vals)))
    if not records:
        raise FormatError("no pmf record found")
    return records


def parse_pmf(text: str) -> Pmf:
    """Parse exactly one .pmf record."""
    records = parse_pmf_records(text)
    if len(records) != 1:
        raise FormatError(f"expected a single pmf record, found {len(records)}")
    return records[0]


def format_pmf(m: Pmf, per_line: int = 8) -> str:
    """Serialize to the .pmf text format with round-trip-exact floats."""
    lines = [f"p={m.p} k={m.k}"]
    for start in range(0, m.size, per_line):
        lines.append(" ".join(repr(float(x)) for x in m.values[start : start + per_line]))
    return "\n".join(lines) + "\n"
