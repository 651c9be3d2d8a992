"""Parameter tables: H_X(d) and delta_r per degree, with the method used per cell.

Four fixtures reproduce the worked examples (projective plane over F_8, its
degree-2 Veronese image, the torus in P^2 over F_5 and its degree-2
Veronese image). Every cell is computed by the cheapest exact method that
applies: a closed form, then the exhaustive oracle, then the footprint
evaluator. Cells where none applies are marked ``Unavailable``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from . import formulas as fm
from .errors import DegreeOutOfRange, GuardViolation, RankOutOfTheoremRange, RmghwError
from .evalcode import EvalCode, build_code, regularity
from .gf import field_of_order
from .oracle import (
    MAX_SUBSET_LENGTH,
    ghw_subset_rank,
    min_distance_enum,
    projective_class_count,
)
from .varieties import PointSet, cartesian_set, projective_space, projective_torus, veronese_embed

KINDS = ("projective", "torus", "cartesian")
METHODS = ("ClosedForm", "SubsetRank", "CodewordEnum", "Footprint", "Unavailable")
TABLE_ENUM_BUDGET = 1_000_000


@dataclass(frozen=True)
class CodeParams:
    """A point set family: base kind over GF(q) in P^{s-1}, optionally Veronese-embedded."""

    q: int
    s: int
    kind: str
    factors: tuple[tuple[int, ...], ...] = ()
    k: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.k < 1:
            raise ValueError(f"Veronese degree must be >= 1, got {self.k}")
        if self.kind == "cartesian" and len(self.factors) != self.s - 1:
            raise ValueError(f"cartesian sets in P^{self.s - 1} need {self.s - 1} factors, got {len(self.factors)}")

    def base_set(self) -> PointSet:
        F = field_of_order(self.q)
        if self.kind == "projective":
            return projective_space(F, self.s)
        if self.kind == "torus":
            return projective_torus(F, self.s)
        return cartesian_set(F, self.factors)

    def point_set(self) -> PointSet:
        X = self.base_set()
        return X if self.k == 1 else veronese_embed(X, self.k)[0]

    def cartesian(self) -> fm.CartesianParams | None:
        """Factor sizes when the base set is an affine cartesian set (the torus is one)."""
        if self.kind == "torus":
            return fm.CartesianParams([self.q - 1] * (self.s - 1))
        if self.kind == "cartesian":
            return fm.CartesianParams([len(A) for A in self.factors])
        return None

    def base_regularity(self) -> int:
        if self.kind == "projective":
            return fm.prm_regularity(self.q, self.s)
        return self.cartesian().c0


@dataclass
class Cell:
    value: int | None
    method: str
    note: str = ""


@dataclass
class Row:
    d: int
    m: int
    H: int
    delta: dict[int, Cell] = dc_field(default_factory=dict)


# -- per-cell methods ---------------------------------------------------------


def closed_form(p: CodeParams, d: int, r: int) -> int:
    """Closed-form delta_r of the degree-d code; raises outside every theorem range.

    A Veronese code of degree d has the parameters of the base code of
    degree k*d, so the formulas are applied at k*d.
    """
    D = p.k * d
    if D >= p.base_regularity():
        # the code is all of K^m
        return r
    if p.kind == "projective":
        if r != 1:
            raise RankOutOfTheoremRange("projective Reed-Muller codes have a closed form for r = 1 only")
        return fm.prm_min_distance(p.q, p.s, D)
    if p.kind == "torus":
        if r == 1:
            return fm.torus_min_distance(p.q, p.s, D)
        return fm.torus_ghw(p.q, p.s, D, r)
    return fm.cartesian_ghw(p.cartesian(), D, r)


def formula_weight(p: CodeParams, d: int, r: int) -> int | None:
    try:
        return closed_form(p, d, r)
    except (RankOutOfTheoremRange, DegreeOutOfRange):
        return None


def footprint_weight(p: CodeParams, d: int, r: int) -> int | None:
    P = p.cartesian()
    D = p.k * d
    if P is None or not 1 <= D <= P.c0:
        return None
    try:
        return fm.footprint_ghw(P, D, r)
    except RmghwError:
        return None


def oracle_weight(C: EvalCode, r: int, enum_budget: int = TABLE_ENUM_BUDGET, cache: dict | None = None) -> Cell:
    """Exhaustive delta_r if some oracle guard passes, else an Unavailable cell."""
    if r > C.kappa:
        return Cell(None, "Unavailable", f"r={r} exceeds the dimension {C.kappa}")
    if r == 1 and projective_class_count(C.field.q, C.kappa) <= min(enum_budget, 50_000):
        return Cell(min_distance_enum(C)[0], "CodewordEnum")
    if C.m <= MAX_SUBSET_LENGTH:
        return Cell(ghw_subset_rank(C, r, "auto", cache)[0], "SubsetRank")
    if r == 1 and projective_class_count(C.field.q, C.kappa) <= enum_budget:
        return Cell(min_distance_enum(C)[0], "CodewordEnum")
    return Cell(None, "Unavailable", f"length {C.m} and dimension {C.kappa} exceed the oracle guards")


def compute_cell(
    p: CodeParams,
    C: EvalCode,
    r: int,
    method: str = "auto",
    enum_budget: int = TABLE_ENUM_BUDGET,
    cache: dict | None = None,
) -> Cell:
    """One delta_r cell. ``method`` is auto, formula, oracle or footprint."""
    if method in ("auto", "formula"):
        v = formula_weight(p, C.d, r)
        if v is not None:
            return Cell(v, "ClosedForm")
        if method == "formula":
            return Cell(None, "Unavailable", "outside the closed-form range")
    if method in ("auto", "oracle"):
        try:
            cell = oracle_weight(C, r, enum_budget, cache)
        except GuardViolation as exc:
            cell = Cell(None, "Unavailable", str(exc))
        if cell.value is not None or method == "oracle":
            return cell
    if method in ("auto", "footprint"):
        v = footprint_weight(p, C.d, r)
        if v is not None:
            return Cell(v, "Footprint")
        return Cell(None, "Unavailable", "no footprint description")
    raise ValueError(f"unknown method {method!r}")


def build_table(
    p: CodeParams,
    degrees: Sequence[int] | None = None,
    rmax: int = 1,
    method: str = "auto",
    enum_budget: int = TABLE_ENUM_BUDGET,
) -> list[Row]:
    """Rows for each degree; the default range is 1..regularity."""
    X = p.point_set()
    if degrees is None:
        degrees = range(1, max(1, regularity(X).regularity) + 1)
    rows = []
    for d in degrees:
        C = build_code(X, d)
        row = Row(d, C.m, C.kappa)
        cache: dict = {}
        for r in range(1, rmax + 1):
            row.delta[r] = compute_cell(p, C, r, method, enum_budget, cache)
        rows.append(row)
    return rows


# -- fixtures -----------------------------------------------------------------


@dataclass(frozen=True)
class Fixture:
    name: str
    params: CodeParams
    dmax: int
    regularity: int
    m: int
    H: tuple[int, ...]
    delta: dict[int, tuple[int, ...]]

    @property
    def rmax(self) -> int:
        return max(self.delta)


FIXTURES: dict[str, Fixture] = {
    f.name: f
    for f in [
        Fixture(
            "f8-p2",
            CodeParams(8, 3, "projective"),
            dmax=15,
            regularity=15,
            m=73,
            H=(3, 6, 10, 15, 21, 28, 36, 45, 52, 58, 63, 67, 70, 72, 73),
            delta={1: (64, 56, 48, 40, 32, 24, 16, 8, 7, 6, 5, 4, 3, 2, 1)},
        ),
        Fixture(
            "f8-veronese-k2",
            CodeParams(8, 3, "projective", k=2),
            dmax=8,
            regularity=8,
            m=73,
            H=(6, 15, 28, 45, 58, 67, 72, 73),
            delta={1: (56, 40, 24, 8, 6, 4, 2, 1)},
        ),
        Fixture(
            "f5-torus",
            CodeParams(5, 3, "torus"),
            dmax=6,
            regularity=6,
            m=16,
            H=(3, 6, 10, 13, 15, 16),
            delta={
                1: (12, 8, 4, 3, 2, 1),
                2: (15, 11, 7, 4, 3, 2),
                3: (16, 12, 8, 6, 4, 3),
            },
        ),
        Fixture(
            "f5-veronese-torus",
            CodeParams(5, 3, "torus", k=2),
            dmax=3,
            regularity=3,
            m=16,
            H=(6, 13, 16),
            delta={1: (8, 3, 1), 2: (11, 4, 2), 3: (12, 6, 3)},
        ),
    ]
}


def fixture_table(name: str, method: str = "auto") -> list[Row]:
    f = FIXTURES[name]
    return build_table(f.params, range(1, f.dmax + 1), f.rmax, method)


def check_fixture(name: str, rows: Sequence[Row]) -> list[str]:
    """Cell-by-cell differences from the reference table; empty when it matches."""
    f = FIXTURES[name]
    bad = []
    if [row.d for row in rows] != list(range(1, f.dmax + 1)):
        bad.append(f"degrees {[row.d for row in rows]} != 1..{f.dmax}")
        return bad
    for i, row in enumerate(rows):
        if row.m != f.m:
            bad.append(f"d={row.d}: m={row.m}, expected {f.m}")
        if row.H != f.H[i]:
            bad.append(f"d={row.d}: H={row.H}, expected {f.H[i]}")
        for r, col in f.delta.items():
            got = row.delta.get(r)
            if got is None or got.value != col[i]:
                bad.append(f"d={row.d}: delta_{r}={got.value if got else None}, expected {col[i]}")
    return bad
