"""Exact generalized Hamming weights by exhaustive search.

Two independent routes:

* ``ghw_subset_rank`` uses the column-rank reformulation
  delta_r = m - max{|T| : rank(G_T) <= kappa - r}, searched by branch and
  bound over column sets (columns already in the span of the chosen set are
  taken for free; branching happens only on rank-increasing columns).
  The same search on a parity-check matrix gives
  delta_r = min{|S| : |S| - rank(H_S) >= r}, which is far cheaper for
  high-rate codes.
* ``min_distance_enum`` enumerates one codeword per projective class.
"""

from __future__ import annotations

import itertools
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .errors import (
    DependentRows,
    DimensionTooLargeForOracle,
    LengthTooLargeForOracle,
    RankOutOfRange,
)
from .evalcode import EvalCode, dual_code
from .linalg import MatGF, matmul, nullspace, rank, rref

MAX_SUBSET_LENGTH = 24
MAX_ENUM_CLASSES = 200_000_000
_ENUM_TABLE_CELLS = 1 << 22


def worker_count() -> int:
    env = os.environ.get("RMGHW_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _generator(C: EvalCode | MatGF) -> MatGF:
    return C.gen_basis if isinstance(C, EvalCode) else C


def support(basis: MatGF) -> set[int]:
    """Coordinates where some vector of the row space is nonzero."""
    if rank(basis) != basis.nrows:
        raise DependentRows("support() expects linearly independent rows")
    return {int(i) for i in np.flatnonzero(basis.entries.any(axis=0))}


@dataclass
class GhwReport:
    code: dict
    weights: dict[int, int]
    method: dict[int, str]
    witness_support: dict[int, list[int]] = dc_field(default_factory=dict)
    witness_basis: dict[int, MatGF] = dc_field(default_factory=dict, repr=False)

    def check_monotone(self) -> None:
        rs = sorted(self.weights)
        for a, b in zip(rs, rs[1:]):
            if b == a + 1 and not self.weights[a] < self.weights[b]:
                raise AssertionError(f"GHWs not strictly increasing at r={a}: {self.weights}")

    def to_json(self) -> dict:
        methods = sorted(set(self.method.values()))
        return {
            "schema": 1,
            "code": self.code,
            "method": methods[0] if len(methods) == 1 else methods,
            "methods": [[r, self.method[r]] for r in sorted(self.method)],
            "weights": [[r, self.weights[r]] for r in sorted(self.weights)],
            "witness_support": [[r, self.witness_support[r]] for r in sorted(self.witness_support)],
        }


def _code_id(C: EvalCode | MatGF) -> dict:
    if isinstance(C, EvalCode):
        return C.describe()
    return {"q": C.field.q, "e": C.field.e, "m": C.ncols, "kappa": C.nrows}


# -- subset-rank route -------------------------------------------------------


def _max_flat(G: np.ndarray, F, max_rank: int) -> tuple[int, list[int]]:
    """Largest column set T with rank(G_T) <= max_rank, and one such T.

    ``G`` is kappa x m. The search state keeps every column reduced modulo
    the span of the chosen columns, so "column i lies in the span" is just
    "residue i is zero".
    """
    cols = G.T.copy()  # m x kappa
    m = cols.shape[0]
    best = [-1, []]

    def dfs(i: int, res: np.ndarray, count: int, r: int, chosen: list[int]):
        zero = ~res.any(axis=1)
        if r == max_rank:
            extra = [j for j in range(i, m) if zero[j]]
            if count + len(extra) > best[0]:
                best[0], best[1] = count + len(extra), chosen + extra
            return
        while i < m and zero[i]:
            chosen = chosen + [i]
            count += 1
            i += 1
        if i == m:
            if count > best[0]:
                best[0], best[1] = count, chosen
            return
        if count + (m - i) <= best[0]:
            return
        v = res[i]
        p = int(np.flatnonzero(v)[0])
        b = F.vmul(F.inv(int(v[p])), v)
        tail = res[i + 1 :]
        reduced = res.copy()
        reduced[i + 1 :] = F.vsub(tail, F.vmul(tail[:, p][:, None], b[None, :]))
        reduced[i] = 0
        dfs(i + 1, reduced, count + 1, r + 1, chosen + [i])
        dfs(i + 1, res, count, r, chosen)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * m + 100))
    try:
        dfs(0, cols, 0, 0, [])
    finally:
        sys.setrecursionlimit(limit)
    return best[0], best[1]


def _parity_matrix(G: MatGF) -> np.ndarray:
    H = nullspace(G).entries
    return H.reshape(-1, G.ncols)


def _primal_weight(G: MatGF, r: int) -> tuple[int, MatGF]:
    F = G.field
    kappa, m = G.shape
    size, T = _max_flat(G.entries, F, kappa - r)
    # codewords vanishing on T: messages x with x G_T = 0
    GT = MatGF(F, G.entries[:, T].T) if T else MatGF.zeros(F, 1, kappa)
    msgs = nullspace(GT)
    return m - size, matmul(MatGF(F, msgs.entries[:r]), G)


def _parity_weight(G: MatGF, H: np.ndarray, r: int, flats: dict) -> tuple[int, MatGF]:
    """delta_r = min{|S| : |S| - rank(H_S) >= r} over the parity-check columns.

    A smallest S sits inside a flat of H: if some rank-j flat has at least
    r + j columns, then j independent columns of it plus r more give
    nullity exactly r, and the codewords supported on S form the witness.
    """
    F = G.field
    m = G.ncols
    for j in range(H.shape[0] + 1):
        if j not in flats:
            flats[j] = _max_flat(H, F, j)
        size, T = flats[j]
        if size < r + j:
            continue
        HT = H[:, T]
        if j:
            _, _, piv = rref(MatGF(F, HT))
            basis = [T[i] for i in piv]
        else:
            basis = []
        rest = [t for t in T if t not in set(basis)][:r]
        S = sorted(basis + rest)
        HS = MatGF(F, H[:, S]) if H.shape[0] else MatGF.zeros(F, 1, len(S))
        local = nullspace(HS).entries
        words = np.zeros((local.shape[0], m), dtype=np.int64)
        words[:, S] = local
        return r + j, MatGF(F, words[:r])
    raise AssertionError("no parity flat reached the requested nullity")


def ghw_subset_rank(
    C: EvalCode | MatGF, r: int, route: str = "auto", _cache: dict | None = None
) -> tuple[int, MatGF]:
    """Exact delta_r with a witness r-dimensional subcode of that support size.

    ``route="primal"`` searches column sets of the generator,
    ``"parity"`` searches column sets of a parity-check matrix (matroid
    duality), and ``"auto"`` picks the side of smaller dimension.
    """
    G = _generator(C)
    kappa, m = G.shape
    if not 1 <= r <= kappa:
        raise RankOutOfRange(f"r must lie in [1, {kappa}], got {r}")
    if m > MAX_SUBSET_LENGTH:
        raise LengthTooLargeForOracle(f"length {m} exceeds the subset-oracle guard {MAX_SUBSET_LENGTH}")
    if route == "auto":
        route = "parity" if m - kappa < kappa else "primal"
    if route == "primal":
        return _primal_weight(G, r)
    if route != "parity":
        raise ValueError(f"unknown route {route!r}")
    cache = {} if _cache is None else _cache
    if "H" not in cache:
        cache["H"] = _parity_matrix(G)
    return _parity_weight(G, cache["H"], r, cache.setdefault("flats", {}))


# -- codeword enumeration route ---------------------------------------------


def projective_class_count(q: int, kappa: int) -> int:
    return (q**kappa - 1) // (q - 1)


def _span_table(F, rows: np.ndarray) -> np.ndarray:
    """All q^len(rows) linear combinations of ``rows``."""
    table = np.zeros((1, rows.shape[1]), dtype=np.int64)
    for g in rows[::-1]:
        multiples = F.vmul(np.arange(F.q)[:, None], g[None, :])
        table = F.vadd(multiples[:, None, :], table[None, :, :]).reshape(-1, rows.shape[1])
    return table


def _projective_messages(F, a: int) -> np.ndarray:
    """Message vectors of length a whose first nonzero entry is 1."""
    out = [
        (0,) * lead + (1,) + tail
        for lead in range(a)
        for tail in itertools.product(range(F.q), repeat=a - lead - 1)
    ]
    return np.array(out, dtype=np.int64).reshape(-1, a)


def min_distance_enum(C: EvalCode | MatGF, threads: int | None = None) -> tuple[int, np.ndarray]:
    """Minimum weight over one nonzero codeword per projective class."""
    G = _generator(C)
    F = G.field
    kappa, m = G.shape
    if kappa == 0:
        raise RankOutOfRange("the zero code has no minimum distance")
    # weight 1 is the floor; a unit vector in the row space settles it at once
    R, rk, piv = rref(G)
    for i, j in enumerate(piv):
        if np.count_nonzero(R.entries[i]) == 1:
            word = np.zeros(m, dtype=np.int64)
            word[j] = 1
            return 1, word
    classes = projective_class_count(F.q, kappa)
    if classes > MAX_ENUM_CLASSES:
        raise DimensionTooLargeForOracle(f"{classes} projective classes exceeds {MAX_ENUM_CLASSES}")
    g = G.entries
    b = kappa
    while b > 0 and F.q**b * m > _ENUM_TABLE_CELLS:
        b -= 1
    a = kappa - b
    table = _span_table(F, g[a:])
    weights = np.count_nonzero(table, axis=1)
    weights[0] = m + 1
    best_w = int(weights.min())
    best_word = table[int(weights.argmin())]
    if a == 0:
        return best_w, best_word

    prefixes = _projective_messages(F, a)
    words = matmul(MatGF(F, prefixes), MatGF(F, g[:a])).entries
    small = np.uint8 if F.q <= 256 else np.uint16 if F.q <= 1 << 16 else np.int64
    targets = F.vneg(words).astype(small)
    table = table.astype(small)

    def scan(lo: int, hi: int):
        bw, bword = m + 1, None
        for t in range(lo, hi):
            # (prefix + suffix)_j == 0  iff  suffix_j == -prefix_j
            w = np.count_nonzero(table != targets[t], axis=1)
            j = int(w.argmin())
            if w[j] < bw:
                bw, bword = int(w[j]), F.vadd(words[t], table[j].astype(np.int64))
        return bw, bword

    n = len(prefixes)
    workers = threads or worker_count()
    if workers > 1 and n > 64:
        bounds = np.linspace(0, n, workers + 1, dtype=int)
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda lh: scan(*lh), zip(bounds[:-1], bounds[1:])))
    else:
        parts = [scan(0, n)]
    for w, word in parts:
        if word is not None and w < best_w:
            best_w, best_word = w, word
    return best_w, best_word


# -- drivers ------------------------------------------------------------------


def ghw_spectrum(
    C: EvalCode | MatGF, rmax: int | None = None, with_witness: bool = True, route: str = "auto"
) -> GhwReport:
    """delta_1..delta_rmax by the cheapest exact method that fits the guards."""
    G = _generator(C)
    kappa, m = G.shape
    rmax = kappa if rmax is None else rmax
    if not 1 <= rmax <= kappa:
        raise RankOutOfRange(f"rmax must lie in [1, {kappa}], got {rmax}")
    report = GhwReport(_code_id(C), {}, {})
    cache: dict = {}
    for r in range(1, rmax + 1):
        small_enum = projective_class_count(G.field.q, kappa) <= 50_000
        if r == 1 and (small_enum or m > MAX_SUBSET_LENGTH):
            w, word = min_distance_enum(G)
            report.weights[r] = w
            report.method[r] = "CodewordEnum"
            report.witness_support[r] = [int(i) for i in np.flatnonzero(word)]
            continue
        w, basis = ghw_subset_rank(G, r, route, cache)
        report.weights[r] = w
        report.method[r] = "SubsetRank"
        if with_witness:
            report.witness_support[r] = sorted(support(basis))
            report.witness_basis[r] = basis
    report.check_monotone()
    if rmax == kappa and report.weights[kappa] != m and G.entries.any(axis=0).all():
        raise AssertionError("delta_kappa must equal the length when no column is zero")
    return report


def full_spectrum(G: MatGF, route: str = "auto") -> list[int]:
    if G.nrows == 0:
        return []
    rep = ghw_spectrum(G, with_witness=False, route=route)
    return [rep.weights[r] for r in range(1, G.nrows + 1)]


def wei_duality_check(C: EvalCode | MatGF) -> bool:
    """{delta_r(C)} and {m + 1 - delta_r(C^perp)} partition {1, ..., m}."""
    G = _generator(C)
    m = G.ncols
    if m > MAX_SUBSET_LENGTH:
        raise LengthTooLargeForOracle(f"length {m} exceeds the subset-oracle guard {MAX_SUBSET_LENGTH}")
    # both sides searched on their own generators, so the identity is not
    # built into the computation
    primal = full_spectrum(G, route="primal")
    dual = full_spectrum(dual_code(G).basis, route="primal")
    values = primal + [m + 1 - w for w in dual]
    return sorted(values) == list(range(1, m + 1))


def check_witness(basis: MatGF, r: int, weight: int) -> bool:
    return rank(basis) == basis.nrows == r and len(support(basis)) == weight


def spectra_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    return list(a) == list(b)
