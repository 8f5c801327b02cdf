"""Linear codes over F_p given by generator matrices.

Weight data is computed by exhaustively enumerating all p^k codewords;
brute enumeration doubles as the oracle for every bound downstream, so no
MacWilliams-style shortcut is used anywhere. Enumeration runs in chunks to
keep memory flat even at the capacity limits.
"""

from __future__ import annotations

import numpy as np

from ._format import content_lines, parse_header
from .errors import CapacityError, FormatError, RankError
from .field_vec import ensure_capacity, ensure_prime

# Enumeration-backed operations walk all p^k codewords; this matches the
# spectral analysis cap. Construction itself only enforces the 2^40 guard.
ENUM_CAP = 1 << 20

# caps on dense tables: full codeword matrix (p^k * n) and CWE scratch (p^k * p)
MATRIX_CAP = 1 << 24
CWE_CAP = 1 << 24

_CHUNK = 1 << 22  # elements per enumeration chunk


class LinearCode:
    """(n, k) code over F_p with generator matrix G (k rows, n columns).

    G must have rank k over F_p; the rows then form a basis of the code and
    message vectors b map to distinct codewords c = b^T G.
    """

    def __init__(self, p: int, n: int, k: int, G):
        self.p = ensure_prime(p)
        ensure_capacity(self.p, k)
        if n < 1 or k < 1:
            raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
        G = np.array(G, dtype=np.int64)
        if G.shape != (k, n):
            raise ValueError(f"generator must be {k}x{n}, got {G.shape}")
        if G.min() < 0 or G.max() >= self.p:
            raise ValueError(f"generator entries must lie in [0, {self.p})")
        rank = _rank_mod(G, self.p)
        if rank < k:
            raise RankError(f"rank-deficient generator: rank {rank} < k = {k}")
        G.flags.writeable = False
        self.n = int(n)
        self.k = int(k)
        self.G = G
        self._cache: dict[str, object] = {}

    def __repr__(self):
        return f"LinearCode(p={self.p}, n={self.n}, k={self.k})"

    @property
    def size(self) -> int:
        """Number of codewords, p^k."""
        return self.p**self.k


def _rank_mod(G: np.ndarray, p: int) -> int:
    """Rank over F_p by Gaussian elimination."""
    M = np.array(G % p, dtype=np.int64)
    rows, cols = M.shape
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if M[r, col] % p != 0), None)
        if pivot is None:
            continue
        M[[rank, pivot]] = M[[pivot, rank]]
        inv = pow(int(M[rank, col]), p - 2, p)
        M[rank] = (M[rank] * inv) % p
        for r in range(rows):
            if r != rank and M[r, col] != 0:
                M[r] = (M[r] - M[r, col] * M[rank]) % p
        rank += 1
        if rank == rows:
            break
    return rank


def _ensure_enumerable(code: LinearCode) -> int:
    size = code.size
    if size > ENUM_CAP:
        raise CapacityError(f"enumeration over p^k = {size} codewords exceeds cap {ENUM_CAP}")
    return size


def iter_codeword_chunks(code: LinearCode):
    """Yield (start, codeword_block) covering all p^k codewords in index order.

    Block row i holds the codeword of message start+i. Codewords come from a
    float64 matmul with the generator, which is exact here: entries are
    bounded by k (p-1)^2, far below 2^53.
    """
    size = _ensure_enumerable(code)
    powers = code.p ** np.arange(code.k, dtype=np.int64)
    Gf = code.G.astype(np.float64)
    rows_per_chunk = max(1, _CHUNK // code.n)
    for start in range(0, size, rows_per_chunk):
        stop = min(start + rows_per_chunk, size)
        msgs = np.arange(start, stop, dtype=np.int64)
        B = ((msgs[:, None] // powers) % code.p).astype(np.float64)
        yield start, np.rint(B @ Gf).astype(np.int64) % code.p


def codeword_matrix(code: LinearCode) -> np.ndarray:
    """All codewords as one dense (p^k, n) matrix, cached on the instance."""
    cached = code._cache.get("codeword_matrix")
    if cached is None:
        size = _ensure_enumerable(code)
        if size * code.n > MATRIX_CAP:
            raise CapacityError(
                f"dense codeword matrix p^k * n = {size * code.n} exceeds cap {MATRIX_CAP};"
                " use iter_codeword_chunks"
            )
        C = np.empty((size, code.n), dtype=np.int64)
        for start, block in iter_codeword_chunks(code):
            C[start : start + block.shape[0]] = block
        C.flags.writeable = False
        cached = code._cache["codeword_matrix"] = C
    return cached


def codewords(code: LinearCode):
    """Yield all (message, codeword) digit-vector pairs in index order."""
    powers = code.p ** np.arange(code.k, dtype=np.int64)
    for start, block in iter_codeword_chunks(code):
        msgs = np.arange(start, start + block.shape[0], dtype=np.int64)
        B = (msgs[:, None] // powers) % code.p
        yield from zip(B, block)


def weight_distribution(code: LinearCode) -> np.ndarray:
    """A(l) = number of codewords of Hamming weight l, for l = 0..n."""
    cached = code._cache.get("weight_distribution")
    if cached is None:
        A = np.zeros(code.n + 1, dtype=np.int64)
        for _, block in iter_codeword_chunks(code):
            weights = np.count_nonzero(block, axis=1)
            A += np.bincount(weights, minlength=code.n + 1)
        A.flags.writeable = False
        cached = code._cache["weight_distribution"] = A
    return cached


def complete_weight_enumerator(code: LinearCode) -> dict[tuple[int, ...], int]:
    """Count codewords by full symbol composition.

    Keys are p-tuples (s_0, ..., s_{p-1}) with s_j the number of coordinates
    equal to j; values count the codewords with that composition. Keys sum
    to n, counts sum to p^k, and marginalizing on n - s_0 recovers the
    weight distribution.
    """
    cached = code._cache.get("cwe")
    if cached is None:
        size = _ensure_enumerable(code)
        if size * code.p > CWE_CAP:
            raise CapacityError(
                f"complete weight enumerator table p^k * p = {size * code.p} exceeds cap {CWE_CAP}"
            )
        totals: dict[tuple[int, ...], int] = {}
        for _, block in iter_codeword_chunks(code):
            comp = np.empty((block.shape[0], code.p), dtype=np.int64)
            for v in range(code.p):
                comp[:, v] = (block == v).sum(axis=1)
            uniq, counts = np.unique(comp, axis=0, return_counts=True)
            for row, c in zip(uniq, counts):
                key = tuple(int(x) for x in row)
                totals[key] = totals.get(key, 0) + int(c)
        cached = code._cache["cwe"] = dict(sorted(totals.items()))
    return cached


def minimum_distance(code: LinearCode) -> int:
    """Smallest Hamming weight among the non-zero codewords."""
    A = weight_distribution(code)
    nonzero = np.nonzero(A[1:])[0]
    return int(nonzero[0]) + 1


# --- .code text format ------------------------------------------------------
#
# optional '#' comment lines; header "p=<int> n=<int> k=<int>"; then k lines
# of n whitespace-separated integers in [0, p)


def parse_code(text: str) -> LinearCode:
    """Parse and validate a .code file."""
    lines = list(content_lines(text))
    if not lines:
        raise FormatError("empty code file")
    num, header = lines[0]
    p, n, k = parse_header(header, num, ("p", "n", "k"))
    try:
        ensure_prime(p)
    except ValueError as exc:
        raise FormatError(str(exc), num) from None
    if len(lines) - 1 < k:
        raise FormatError(f"expected {k} generator rows, found {len(lines) - 1}", num)
    if len(lines) - 1 > k:
        raise FormatError("unexpected content after generator rows", lines[k + 1][0])
    rows = []
    for num, line in lines[1 : k + 1]:
        toks = line.split()
        if len(toks) != n:
            raise FormatError(f"expected {n} entries, found {len(toks)}", num)
        try:
            row = [int(t) for t in toks]
        except ValueError:
            raise FormatError(f"non-integer generator entry in '{line}'", num) from None
        bad = next((t for t in row if not 0 <= t < p), None)
        if bad is not None:
            raise FormatError(f"entry {bad} out of range [0, {p})", num)
        rows.append(row)
    return LinearCode(p, n, k, rows)


def format_code(code: LinearCode) -> str:
    """Serialize to the .code text format."""
    lines = [f"p={code.p} n={code.n} k={code.k}"]
    for row in code.G:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"
