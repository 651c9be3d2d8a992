"""Point sets in projective space, the Veronese embedding, and monomials.

Points are tuples of int-encoded field elements. A point is in standard form
when its first nonzero coordinate is 1. Monomials are exponent tuples; the
builtin tuple ordering is exactly lex order (t^a > t^b iff the first nonzero
entry of a - b is positive).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .errors import ArityMismatch, ArityTooSmall, FactorTooSmall, FieldTooSmall
from .gf import FieldSpec, field_of_order

ProjPoint = tuple[int, ...]
Monomial = tuple[int, ...]


def standardize(F: FieldSpec, coords: Sequence[int]) -> ProjPoint:
    """Scale ``coords`` so the first nonzero coordinate is 1."""
    coords = tuple(int(c) for c in coords)
    lead = next((c for c in coords if c), 0)
    if lead == 0:
        raise ValueError("the zero vector is not a projective point")
    if lead == 1:
        return coords
    inv = F.inv(lead)
    return tuple(F.mul(inv, c) for c in coords)


def leading_index(P: Sequence[int]) -> int:
    return next(i for i, c in enumerate(P) if c)


def point_order_key(P: ProjPoint) -> tuple:
    # leading-one position first, then the coordinates themselves
    return (leading_index(P), P)


@dataclass(frozen=True)
class PointSet:
    """An ordered set of distinct standard-form points of P^{s-1}.

    ``kind`` is one of projective, cartesian, torus, veronese, custom. Cartesian
    sets keep the size-sorted factor sets in ``factors`` and the permutation
    that sorted the user's factors in ``permutation``; Veronese images keep
    their ``base`` set and degree ``k`` and list points in the base order.
    """

    field: FieldSpec
    s: int
    points: tuple[ProjPoint, ...]
    kind: str = "custom"
    factors: tuple[tuple[int, ...], ...] = ()
    permutation: tuple[int, ...] = ()
    base: PointSet | None = dc_field(default=None, compare=False)
    k: int | None = None
    label: str | None = None

    def __post_init__(self):
        if not self.points:
            raise ValueError("a point set needs at least one point")
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be distinct")
        for P in self.points:
            if len(P) != self.s:
                raise ArityMismatch(f"point {P} does not have {self.s} coordinates")

    @property
    def m(self) -> int:
        return len(self.points)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(A) for A in self.factors)

    @property
    def tag(self) -> str:
        """Single-token kind description used in text headers and reports."""
        if self.label:
            return self.label
        if self.kind == "cartesian":
            return "cartesian[" + ",".join(map(str, self.dims)) + "]"
        if self.kind == "veronese":
            return f"veronese[{self.base.tag if self.base else 'custom'};{self.k}]"
        return self.kind

    def as_array(self) -> np.ndarray:
        return np.array(self.points, dtype=np.int64)

    def __len__(self) -> int:
        return self.m

    def __iter__(self):
        return iter(self.points)


def custom_set(F: FieldSpec, points: Iterable[Sequence[int]]) -> PointSet:
    """Standardize, deduplicate, and canonically order arbitrary points."""
    pts = {standardize(F, P) for P in points}
    pts = sorted(pts, key=point_order_key)
    s = len(pts[0])
    return PointSet(F, s, tuple(pts), "custom")


def projective_space(F: FieldSpec, s: int) -> PointSet:
    """All (q^s - 1)/(q - 1) points of P^{s-1}."""
    if s < 2:
        raise ArityTooSmall(f"need s >= 2, got {s}")
    pts = []
    for lead in range(s):
        for tail in itertools.product(range(F.q), repeat=s - lead - 1):
            pts.append((0,) * lead + (1,) + tail)
    return PointSet(F, s, tuple(pts), "projective")


def cartesian_set(F: FieldSpec, factors: Sequence[Iterable[int]]) -> PointSet:
    """The projective closure [A_1 x ... x A_n x {1}] in P^n."""
    sets = [tuple(sorted({int(a) for a in A})) for A in factors]
    if not sets:
        raise ArityTooSmall("need at least one factor set")
    for i, A in enumerate(sets):
        if len(A) < 2:
            raise FactorTooSmall(f"factor {i} has {len(A)} element(s); need at least 2")
        if any(not 0 <= a < F.q for a in A):
            raise ValueError(f"factor {i} contains values outside {F!r}")
    perm = tuple(sorted(range(len(sets)), key=lambda i: len(sets[i])))
    ordered = tuple(sets[i] for i in perm)
    pts = {standardize(F, a + (1,)) for a in itertools.product(*ordered)}
    pts = tuple(sorted(pts, key=point_order_key))
    return PointSet(F, len(sets) + 1, pts, "cartesian", factors=ordered, permutation=perm)


def projective_torus(F: FieldSpec, s: int) -> PointSet:
    """Points of P^{s-1} with every coordinate nonzero."""
    if s < 2:
        raise ArityTooSmall(f"need s >= 2, got {s}")
    if F.q < 3:
        raise FieldTooSmall("the projective torus over GF(2) is a single point")
    pts = tuple((1,) + t for t in itertools.product(range(1, F.q), repeat=s - 1))
    return PointSet(F, s, pts, "torus")


def monomials_of_degree(s: int, d: int) -> list[Monomial]:
    """All exponent vectors of length s summing to d, descending lex."""
    if s < 1 or d < 0:
        raise ValueError("need s >= 1 and d >= 0")
    if s == 1:
        return [(d,)]
    out = []
    for a in range(d, -1, -1):
        out.extend((a,) + rest for rest in monomials_of_degree(s - 1, d - a))
    return out


def num_monomials(s: int, d: int) -> int:
    return comb(d + s - 1, s - 1)


def eval_monomial(F: FieldSpec, M: Monomial, P: Sequence[int]) -> int:
    if len(M) != len(P):
        raise ArityMismatch(f"monomial arity {len(M)} != point arity {len(P)}")
    v = 1
    for x, a in zip(P, M):
        if a:
            v = F.mul(v, F.pow(int(x), a))
    return v


def monomial_values(F: FieldSpec, monomials: Sequence[Monomial], points: np.ndarray) -> np.ndarray:
    """Matrix of M_j(P_i): one row per monomial, one column per point."""
    exps = np.array(monomials, dtype=np.int64).reshape(len(monomials), -1)
    pts = np.asarray(points, dtype=np.int64)
    dmax = int(exps.max()) if exps.size else 0
    powers = np.ones((F.q, dmax + 1), dtype=np.int64)
    for a in range(1, dmax + 1):
        powers[:, a] = F.vmul(powers[:, a - 1], np.arange(F.q))
    out = np.ones((exps.shape[0], pts.shape[0]), dtype=np.int64)
    for c in range(exps.shape[1]):
        out = F.vmul(out, powers[pts[None, :, c], exps[:, c][:, None]])
    return out


def veronese_embed(X: PointSet, k: int) -> tuple[PointSet, list[int]]:
    """Image of X under the k-th Veronese map, plus the raw scales.

    Q_i^raw = (M_1(P_i), ..., M_N(P_i)) for the degree-k monomials in
    descending lex; the returned points are standardized and ``scales[i]``
    is the first nonzero entry of Q_i^raw, so Q_i^raw = scales[i] * Q_i.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    F = X.field
    if k == 1:
        return X, [1] * X.m
    mons = monomials_of_degree(X.s, k)
    raw = monomial_values(F, mons, X.as_array()).T
    pts, scales = [], []
    for row in raw:
        c = int(row[np.flatnonzero(row)[0]])
        scales.append(c)
        pts.append(standardize(F, row))
    if len(set(pts)) != len(pts):
        raise AssertionError("Veronese embedding failed to be injective")
    image = PointSet(F, len(mons), tuple(pts), "veronese", base=X, k=k)
    return image, scales


# -- text serialization -----------------------------------------------------


def dumps_points(X: PointSet) -> str:
    lines = [f"{X.field.q} {X.s} {X.m} {X.tag}"]
    lines += [" ".join(map(str, P)) for P in X.points]
    return "\n".join(lines) + "\n"


def loads_points(text: str) -> PointSet:
    """Inverse of dumps_points; point order is preserved as written."""
    rows = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    q, s, m = (int(x) for x in rows[0][:3])
    tag = rows[0][3] if len(rows[0]) > 3 else "custom"
    F = field_of_order(q)
    pts = tuple(tuple(int(x) for x in r) for r in rows[1:])
    if len(pts) != m:
        raise ValueError(f"header announces {m} points, found {len(pts)}")
    kind = tag.split("[", 1)[0]
    if kind not in {"projective", "torus"}:
        kind = "custom"
    return PointSet(F, s, pts, kind, label=tag)
