"""Reed-Muller-type codes C_X(d), their duals, and the Veronese checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence

import numpy as np

from .errors import DegreeCapExceeded, DegreeZero, LengthMismatch, ZeroScale
from .gf import FieldSpec, field_of_order
from .linalg import MatGF, nullspace, rank, rref, row_basis, rowspace_contains
from .varieties import (
    Monomial,
    PointSet,
    leading_index,
    monomial_values,
    monomials_of_degree,
    num_monomials,
    veronese_embed,
)

MAX_MONOMIAL_ROWS = 100_000

# A homogeneous polynomial as {exponent tuple: coefficient}.
Polynomial = Mapping[Monomial, int]


@dataclass(frozen=True, eq=False)
class EvalCode:
    field: FieldSpec
    X: PointSet
    d: int
    eval_matrix: MatGF
    gen_basis: MatGF

    @property
    def kappa(self) -> int:
        return self.gen_basis.nrows

    @property
    def m(self) -> int:
        return self.X.m

    @property
    def s(self) -> int:
        return self.X.s

    def describe(self) -> dict:
        return {
            "q": self.field.q,
            "e": self.field.e,
            "s": self.s,
            "kind": self.X.tag,
            "d": self.d,
            "m": self.m,
            "kappa": self.kappa,
        }

    def __repr__(self) -> str:
        return f"EvalCode({self.field!r}, {self.X.tag}, d={self.d}, [{self.m}, {self.kappa}])"


@dataclass(frozen=True, eq=False)
class DualCode:
    basis: MatGF

    @property
    def dim(self) -> int:
        return self.basis.nrows


def _poly_values(F: FieldSpec, poly: Polynomial, pts: np.ndarray) -> np.ndarray:
    mons = list(poly)
    vals = monomial_values(F, mons, pts)
    coeffs = np.array([int(poly[M]) % F.q if F.e == 1 else int(poly[M]) for M in mons])
    out = np.zeros(pts.shape[0], dtype=np.int64)
    for j in range(len(mons)):
        out = F.vadd(out, F.vmul(coeffs[j], vals[j]))
    return out


def evaluation_matrix(
    X: PointSet,
    d: int,
    *,
    representatives: Sequence[int] | None = None,
    normalizers: Sequence[Polynomial] | None = None,
) -> MatGF:
    """Rows M_j(P_i)/h_i(P_i) for the degree-d monomials in descending lex.

    By default every P_i is its standard-form representative and h_i is
    t_j^d for the first nonzero coordinate j, so h_i(P_i) = 1. The optional
    ``representatives`` rescale point i by a nonzero scalar and
    ``normalizers`` supply arbitrary degree-d forms with h_i(P_i) != 0.
    """
    if d < 0:
        raise DegreeZero(f"degree must be nonnegative, got {d}")
    rows = num_monomials(X.s, d)
    if rows > MAX_MONOMIAL_ROWS:
        raise DegreeCapExceeded(f"{rows} monomials of degree {d} exceeds the cap {MAX_MONOMIAL_ROWS}")
    F = X.field
    pts = X.as_array()
    if representatives is not None:
        mu = np.asarray(representatives, dtype=np.int64)
        if mu.shape != (X.m,):
            raise LengthMismatch(f"need {X.m} representative scales")
        if not mu.all():
            raise ZeroScale(int(np.flatnonzero(mu == 0)[0]))
        pts = F.vmul(mu[:, None], pts)
    vals = monomial_values(F, monomials_of_degree(X.s, d), pts)
    if normalizers is None:
        if representatives is None:
            return MatGF(F, vals)
        lead = np.array([leading_index(P) for P in X.points])
        h = F.vpow(pts[np.arange(X.m), lead], d)
    else:
        if len(normalizers) != X.m:
            raise LengthMismatch(f"need {X.m} normalizers")
        h = np.array([_poly_values(F, hi, pts[i : i + 1])[0] for i, hi in enumerate(normalizers)])
        if not h.all():
            raise ZeroScale(int(np.flatnonzero(h == 0)[0]))
    return MatGF(F, F.vmul(vals, F.vinv(h)[None, :]))


def build_code(X: PointSet, d: int, **kwargs) -> EvalCode:
    """C_X(d), the image of the degree-d evaluation map."""
    if d < 1:
        raise DegreeZero(f"degree must be at least 1, got {d}")
    E = evaluation_matrix(X, d, **kwargs)
    return EvalCode(X.field, X, d, E, row_basis(E))


def hilbert_function(X: PointSet, d: int) -> int:
    if d == 0:
        return 1
    return rank(evaluation_matrix(X, d))


class Regularity(NamedTuple):
    regularity: int
    a_invariant: int


def regularity(X: PointSet) -> Regularity:
    """Smallest d with H_X(d) = |X|, and the a-invariant (one less)."""
    d = 0
    while hilbert_function(X, d) < X.m:
        d += 1
    return Regularity(d, d - 1)


def hilbert_series(X: PointSet, dmax: int) -> list[int]:
    return [hilbert_function(X, d) for d in range(dmax + 1)]


def dual_code(C: EvalCode | MatGF) -> DualCode:
    G = C.gen_basis if isinstance(C, EvalCode) else C
    return DualCode(nullspace(G))


def scale_code(basis: MatGF, lam: Sequence[int]) -> MatGF:
    """Coordinatewise product of every row with ``lam``."""
    lam = np.asarray(lam, dtype=np.int64)
    if lam.shape != (basis.ncols,):
        raise LengthMismatch(f"scale vector has length {lam.size}, code length is {basis.ncols}")
    zero = np.flatnonzero(lam == 0)
    if zero.size:
        raise ZeroScale(int(zero[0]))
    return MatGF(basis.field, basis.field.vmul(basis.entries, lam[None, :]))


def codes_equal(A: MatGF, B: MatGF) -> bool:
    """Whether the row spaces of A and B coincide."""
    if A.ncols != B.ncols:
        raise LengthMismatch(f"lengths differ: {A.ncols} vs {B.ncols}")
    Ra, ra, _ = rref(A)
    Rb, rb, _ = rref(B)
    return ra == rb and bool(np.array_equal(Ra.entries[:ra], Rb.entries[:rb]))


def veronese_lambda(
    X: PointSet, k: int, d: int, normalizers: Sequence[Polynomial] | None = None
) -> list[int]:
    """The scaling with C_X(kd) = lambda * C_{rho_k(X)}(d).

    lambda_i = f_i(Q_i) where Q_i is the raw Veronese image of the standard
    representative P_i and f_i is the normalizer used for the Veronese code
    (default: y_j^d at the first nonzero coordinate of the standardized Q_i).
    """
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    F = X.field
    image, scales = veronese_embed(X, k)
    if normalizers is None:
        return [F.pow(c, d) for c in scales]
    raw = F.vmul(np.asarray(scales)[:, None], image.as_array())
    return [int(_poly_values(F, f, raw[i : i + 1])[0]) for i, f in enumerate(normalizers)]


@dataclass(frozen=True)
class VeroneseReport:
    k: int
    d: int
    m: int
    kappa_base: int
    kappa_veronese: int
    same_length: bool
    same_dimension: bool
    codes_scaled_equal: bool
    duals_scaled_equal: bool
    lam: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return self.same_length and self.same_dimension and self.codes_scaled_equal and self.duals_scaled_equal

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "d": self.d,
            "m": self.m,
            "kappa_base": self.kappa_base,
            "kappa_veronese": self.kappa_veronese,
            "same_length": self.same_length,
            "same_dimension": self.same_dimension,
            "codes_scaled_equal": self.codes_scaled_equal,
            "duals_scaled_equal": self.duals_scaled_equal,
            "passed": self.passed,
        }


def verify_veronese_theorem(
    X: PointSet, k: int, d: int, normalizers: Sequence[Polynomial] | None = None
) -> VeroneseReport:
    """Build C_X(kd) and C_{rho_k(X)}(d) and check they agree up to lambda.

    Checks equal length and dimension, C_X(kd) = lambda * C_rho(d), and
    dual(C_rho(d)) = lambda * dual(C_X(kd)).
    """
    image, _ = veronese_embed(X, k)
    base = build_code(X, k * d)
    ver = build_code(image, d, normalizers=normalizers)
    lam = veronese_lambda(X, k, d, normalizers)
    same_code = codes_equal(base.gen_basis, scale_code(ver.gen_basis, lam))
    dual_base = dual_code(base).basis
    dual_ver = dual_code(ver).basis
    same_dual = dual_base.nrows == dual_ver.nrows and codes_equal(dual_ver, scale_code(dual_base, lam))
    return VeroneseReport(
        k=k,
        d=d,
        m=X.m,
        kappa_base=base.kappa,
        kappa_veronese=ver.kappa,
        same_length=image.m == X.m,
        same_dimension=base.kappa == ver.kappa,
        codes_scaled_equal=same_code,
        duals_scaled_equal=same_dual,
        lam=tuple(lam),
    )


def all_ones_augmented(G: MatGF) -> MatGF:
    """Row basis of span(G) + span(1, ..., 1)."""
    ones = MatGF(G.field, np.ones((1, G.ncols), dtype=np.int64))
    if G.nrows and rowspace_contains(G, ones.entries[0]):
        return G
    return row_basis(MatGF(G.field, np.vstack([G.entries, ones.entries])))


# -- text serialization -----------------------------------------------------


def dumps_code(C: EvalCode) -> str:
    lines = [f"{C.field.q} {C.s} {C.d} {C.m} {C.kappa}"]
    lines += [" ".join(map(str, row)) for row in C.gen_basis.rows()]
    return "\n".join(lines) + "\n"


def loads_matrix(text: str) -> tuple[dict, MatGF]:
    """Parse the ``q s d m kappa`` header and the generator rows."""
    rows = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    q, s, d, m, kappa = (int(x) for x in rows[0][:5])
    F = field_of_order(q)
    G = MatGF.from_rows(F, [[int(x) for x in r] for r in rows[1:]], ncols=m)
    if G.nrows != kappa or G.ncols != m:
        raise ValueError(f"header says {kappa}x{m}, body is {G.nrows}x{G.ncols}")
    return {"q": q, "s": s, "d": d, "m": m, "kappa": kappa}, G
