"""Closed-form parameters of projective, torus and affine cartesian codes.

All evaluators are exact integer arithmetic. Cartesian sets are described by
their sorted factor sizes d_1 <= ... <= d_n (n = s - 1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Literal, NamedTuple, Sequence

from .errors import DegreeOutOfRange, FieldTooSmall, RankOutOfRange, RankOutOfTheoremRange

Direction = Literal["ascending-high", "descending-low"]


@dataclass(frozen=True)
class CartesianParams:
    dims: tuple[int, ...]

    def __init__(self, dims: Sequence[int]):
        dims = tuple(sorted(int(x) for x in dims))
        if not dims:
            raise ValueError("need at least one factor size")
        if dims[0] < 2:
            raise ValueError(f"factor sizes must be at least 2, got {dims}")
        object.__setattr__(self, "dims", dims)

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def c0(self) -> int:
        return sum(x - 1 for x in self.dims)

    @property
    def length(self) -> int:
        return prod(self.dims)


class DegreeDecomposition(NamedTuple):
    k: int
    ell: int


def _span(dims: Sequence[int], i: int, j: int) -> int:
    """d_i * ... * d_j with 1-based indices; 1 when i > j or i < 1."""
    if i > j or i < 1:
        return 1
    return prod(dims[i - 1 : j])


def decompose_degree(params: CartesianParams, d: int) -> DegreeDecomposition:
    """The unique (k, l) with d = sum_{i<=k}(d_i - 1) + l and 1 <= l <= d_{k+1} - 1."""
    if d < 1 or d > params.c0:
        raise DegreeOutOfRange(f"degree {d} has no decomposition for dims {params.dims}")
    k, rest = 0, d
    while rest > params.dims[k] - 1:
        rest -= params.dims[k] - 1
        k += 1
    return DegreeDecomposition(k, rest)


def cartesian_ghw(params: CartesianParams, d: int, r: int) -> int:
    """delta_r of the affine cartesian code, valid for 1 <= r <= n - k."""
    k, ell = decompose_degree(params, d)
    n, D = params.n, params.dims
    if not 1 <= r <= n - k:
        raise RankOutOfTheoremRange(f"r={r} outside 1..{n - k} for d={d}, dims={D}")
    head = (D[k] - ell + 1) * _span(D, k + 2, k + r) - 1
    return _span(D, k + r + 1, n) * head


def cartesian_min_distance(params: CartesianParams, d: int) -> int:
    """(d_{k+1} - l) d_{k+2} ... d_n below c0, and 1 from c0 on."""
    if d < 1:
        raise DegreeOutOfRange(f"need d >= 1, got {d}")
    if d >= params.c0:
        return 1
    k, ell = decompose_degree(params, d)
    return (params.dims[k] - ell) * _span(params.dims, k + 2, params.n)


def cartesian_regularity(params: CartesianParams) -> int:
    return params.c0


def _torus_decompose(q: int, d: int) -> DegreeDecomposition:
    k, ell = divmod(d - 1, q - 2)
    return DegreeDecomposition(k, ell + 1)


def torus_ghw(q: int, s: int, d: int, r: int) -> int:
    """[(q-1)^(r-1) (q-l) - 1] (q-1)^(s-k-r-1) with d = k(q-2) + l."""
    if q < 3:
        raise FieldTooSmall("the torus formula needs q >= 3")
    if d < 1 or d > (q - 2) * (s - 1):
        raise DegreeOutOfRange(f"degree {d} outside 1..{(q - 2) * (s - 1)}")
    k, ell = _torus_decompose(q, d)
    if not 1 <= r <= s - k - 1:
        raise RankOutOfTheoremRange(f"r={r} outside 1..{s - k - 1} for d={d}")
    return ((q - 1) ** (r - 1) * (q - ell) - 1) * (q - 1) ** (s - k - r - 1)


def torus_regularity(q: int, s: int) -> int:
    return (q - 2) * (s - 1)


def torus_length(q: int, s: int) -> int:
    return (q - 1) ** (s - 1)


def torus_min_distance(q: int, s: int, d: int) -> int:
    if q < 3:
        raise FieldTooSmall("the projective torus needs q >= 3")
    if s < 2 or d < 1:
        raise DegreeOutOfRange("need s >= 2 and d >= 1")
    if d >= torus_regularity(q, s):
        return 1
    k, ell = _torus_decompose(q, d)
    return (q - 1) ** (s - k - 2) * (q - 1 - ell)


def prm_regularity(q: int, s: int) -> int:
    return (s - 1) * (q - 1) + 1


def prm_length(q: int, s: int) -> int:
    return (q**s - 1) // (q - 1)


def prm_min_distance(q: int, s: int, d: int) -> int:
    """Minimum distance of the projective Reed-Muller code on P^{s-1}."""
    if s < 2 or d < 1:
        raise DegreeOutOfRange("need s >= 2 and d >= 1")
    if d >= prm_regularity(q, s):
        return 1
    k, ell = divmod(d - 1, q - 1)
    ell += 1
    return (q - ell + 1) * q ** (s - k - 2)


def _footprint_set(params: CartesianParams, d: int, direction: Direction):
    D = params.dims
    if direction == "ascending-high":
        floor = params.c0 - d
        return (a for a in itertools.product(*(range(x) for x in D)) if sum(a) >= floor)
    if direction == "descending-low":
        return (a for a in itertools.product(*(range(x - 1, -1, -1) for x in D)) if sum(a) <= d)
    raise ValueError(f"unknown direction {direction!r}")


def footprint_size(params: CartesianParams, d: int) -> int:
    return sum(1 for _ in _footprint_set(params, d, "ascending-high"))


def proof_monomial(params: CartesianParams, d: int, r: int) -> tuple[int, ...]:
    """Closed-form r-th ascending monomial of exponents with total >= c0 - d.

    For r >= 2 this is t_{k+1}^{d_{k+1}-l} t_{k+r}^{d_{k+r}-2} times
    t_i^{d_i-1} for every other i > k+1. For r = 1 the top exponent is
    d_{k+1}-l-1 and the rest are maximal.
    """
    k, ell = decompose_degree(params, d)
    D, n = params.dims, params.n
    if not 1 <= r <= n - k:
        raise RankOutOfTheoremRange(f"r={r} outside 1..{n - k}")
    a = [0] * k + [D[i] - 1 for i in range(k, n)]
    if r == 1:
        a[k] = D[k] - ell - 1
    else:
        a[k] = D[k] - ell
        a[k + r - 1] = D[k + r - 1] - 2
    return tuple(a)


def footprint_rth_monomial(
    params: CartesianParams, d: int, r: int, direction: Direction = "ascending-high"
) -> tuple[int, ...]:
    """r-th standard monomial of R/(t_1^{d_1}, ..., t_n^{d_n}) in lex order.

    ``ascending-high`` ranks exponent vectors with total degree >= c0 - d in
    ascending lex; ``descending-low`` ranks those with total <= d in
    descending lex.
    """
    if d < 1 or d > params.c0:
        raise DegreeOutOfRange(f"degree {d} outside 1..{params.c0}")
    if r < 1:
        raise RankOutOfRange(f"r must be positive, got {r}")
    found = next(itertools.islice(_footprint_set(params, d, direction), r - 1, None), None)
    if found is None:
        raise RankOutOfRange(f"fewer than {r} standard monomials for d={d}")
    if direction == "ascending-high":
        k, _ = decompose_degree(params, d)
        if r <= params.n - k:
            assert found == proof_monomial(params, d, r), (found, params.dims, d, r)
    return found


def footprint_ghw(params: CartesianParams, d: int, r: int) -> int:
    """1 + sum_i a_{r,i} * d_{i+1} * ... * d_n for the r-th ascending monomial."""
    a = footprint_rth_monomial(params, d, r, "ascending-high")
    D, n = params.dims, params.n
    return 1 + sum(a[i] * _span(D, i + 2, n) for i in range(n))


def veronese_dual_degree(q: int, s: int, k: int, d: int) -> tuple[int, bool]:
    """((q-1)(s-1) - kd, kd = 0 mod (q-1)) for the dual-degree corollary."""
    top = (q - 1) * (s - 1)
    if k < 1 or d < 1 or k * d > top:
        raise DegreeOutOfRange(f"need 1 <= kd <= {top}, got k={k}, d={d}")
    return top - k * d, (k * d) % (q - 1) == 0
