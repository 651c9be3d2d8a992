"""Dense linear algebra over GF(q) on int-encoded numpy matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import FieldMismatch, LengthMismatch
from .gf import FieldSpec


@dataclass(frozen=True, eq=False)
class MatGF:
    field: FieldSpec
    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=np.int64)
        if a.ndim == 1:
            a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
        if a.ndim != 2:
            raise ValueError("entries must be two-dimensional")
        if a.size and (a.min() < 0 or a.max() >= self.field.q):
            raise ValueError(f"entries out of range for {self.field!r}")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]], ncols: int | None = None) -> MatGF:
        rows = [list(r) for r in rows]
        if not rows:
            return cls(field, np.zeros((0, ncols or 0), dtype=np.int64))
        return cls(field, np.array(rows, dtype=np.int64))

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> MatGF:
        return cls(field, np.zeros((nrows, ncols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> MatGF:
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def nrows(self) -> int:
        return self.entries.shape[0]

    @property
    def ncols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def rows(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in r) for r in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatGF):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.field, self.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"MatGF({self.field!r}, {self.nrows}x{self.ncols})"


def _check_same_field(a: MatGF, b: MatGF) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")


def rref(M: MatGF) -> tuple[MatGF, int, list[int]]:
    """Reduced row echelon form with first-nonzero pivoting.

    Returns ``(R, rank, pivots)``; ``R`` has the same shape as ``M``.
    """
    F = M.field
    A = M.entries.copy()
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        lead = int(A[r, c])
        if lead != 1:
            A[r] = F.vmul(F.inv(lead), A[r])
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if others.size:
            A[others] = F.vsub(A[others], F.vmul(A[others, c][:, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return MatGF(F, A), r, pivots


def rank(M: MatGF) -> int:
    return rref(M)[1]


def row_basis(M: MatGF) -> MatGF:
    """The nonzero rows of rref(M)."""
    R, r, _ = rref(M)
    return MatGF(M.field, R.entries[:r])


def nullspace(M: MatGF) -> MatGF:
    """Basis (as rows) of the right nullspace {v : M v^T = 0}."""
    F = M.field
    R, r, pivots = rref(M)
    n = M.ncols
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = F.neg(int(R.entries[row, f]))
    assert r + len(free) == n, "rank-nullity violated"
    return MatGF(F, basis)


def matmul(A: MatGF, B: MatGF) -> MatGF:
    _check_same_field(A, B)
    if A.ncols != B.nrows:
        raise LengthMismatch(f"cannot multiply {A.shape} by {B.shape}")
    F = A.field
    if F.e == 1 and F.p < (1 << 20) and A.ncols * F.p * F.p < (1 << 62):
        return MatGF(F, (A.entries @ B.entries) % F.p)
    out = np.zeros((A.nrows, B.ncols), dtype=np.int64)
    for j in range(A.ncols):
        out = F.vadd(out, F.vmul(A.entries[:, j][:, None], B.entries[j][None, :]))
    return MatGF(F, out)


def vstack(A: MatGF, B: MatGF) -> MatGF:
    _check_same_field(A, B)
    if A.ncols != B.ncols:
        raise LengthMismatch(f"column counts differ: {A.ncols} vs {B.ncols}")
    return MatGF(A.field, np.vstack([A.entries, B.entries]))


def rowspace_contains(M: MatGF, v: Sequence[int]) -> bool:
    v = np.asarray(v, dtype=np.int64).reshape(1, -1)
    if v.shape[1] != M.ncols:
        raise LengthMismatch(f"vector length {v.shape[1]} != {M.ncols} columns")
    return rank(M) == rank(vstack(M, MatGF(M.field, v)))


def orthogonal(A: MatGF, B: MatGF) -> bool:
    """Every row of A is orthogonal to every row of B."""
    if A.nrows == 0 or B.nrows == 0:
        return True
    prod = matmul(A, MatGF(B.field, B.entries.T))
    return not prod.entries.any()
