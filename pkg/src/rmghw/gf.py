"""Arithmetic in GF(p^e).

Elements are stored as plain ints: the coefficient vector (constant term
first) read as base-p digits, so ``c0 + c1*p + ... + c_{e-1}*p^(e-1)``.
Zero is 0 and the unit is 1. Vectorised variants (``vadd``, ``vmul``, ...)
act elementwise on integer numpy arrays and back the linear algebra.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegreeTooLarge, DivisionByZero, FieldMismatch, NotPrime

MAX_EXTENSION_DEGREE = 16
_FULL_TABLE_LIMIT = 256
_LOG_TABLE_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split a prime power into ``(p, e)``; raise NotPrime otherwise."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, e


# -- polynomials over GF(p), low degree first, no trailing zeros ----------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    lead_inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: list[int], exp: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, m, p)
    while exp:
        if exp & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        exp >>= 1
    return result


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Ben-Or test for a monic polynomial over GF(p) (low degree first)."""
    poly = _trim(list(poly))
    n = len(poly) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    xp = x
    for _ in range(n // 2):
        xp = _ppowmod(xp, p, poly, p)
        if len(_pgcd(list(poly), _psub(xp, x, p), p)) > 1:
            return False
    return True


def _digits(v: int, p: int, e: int) -> tuple[int, ...]:
    out = []
    for _ in range(e):
        v, r = divmod(v, p)
        out.append(r)
    return tuple(out)


def _undigits(coeffs: Sequence[int], p: int) -> int:
    v = 0
    for c in reversed(coeffs):
        v = v * p + c
    return v


def _factor(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^e) with a fixed monic irreducible ``modulus`` (low degree first)."""

    p: int
    e: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __call__(self, value: int | Sequence[int]) -> FieldElem:
        if isinstance(value, (int, np.integer)):
            value = int(value) % self.q if self.e == 1 else int(value)
            if not 0 <= value < self.q:
                raise ValueError(f"{value} does not encode an element of {self!r}")
            return FieldElem(self, value)
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.e:
            raise ValueError(f"expected {self.e} coefficients, got {len(coeffs)}")
        return FieldElem(self, _undigits(coeffs, self.p))

    def coeffs(self, a: int) -> tuple[int, ...]:
        return _digits(a, self.p, self.e)

    # -- lazily built tables ---------------------------------------------

    @functools.cached_property
    def _tables(self) -> dict:
        q, p = self.q, self.p
        t: dict = {}
        if self.e == 1:
            return t
        if q <= _LOG_TABLE_LIMIT:
            g = self._primitive_element()
            exp = np.zeros(2 * (q - 1), dtype=np.int64)
            log = np.zeros(q, dtype=np.int64)
            x = 1
            for i in range(q - 1):
                exp[i] = x
                log[x] = i
                x = self._polymul(x, g)
            exp[q - 1 :] = exp[: q - 1]
            t["exp"], t["log"] = exp, log
            digits = np.array([_digits(v, p, self.e) for v in range(q)], dtype=np.int64)
            t["neg"] = np.array(
                [_undigits([(-c) % p for c in row], p) for row in digits], dtype=np.int64
            )
            inv = np.zeros(q, dtype=np.int64)
            inv[1:] = exp[(q - 1 - log[1:]) % (q - 1)]
            t["inv"] = inv
        if q <= _FULL_TABLE_LIMIT:
            a = np.arange(q)
            digits = np.array([_digits(v, p, self.e) for v in range(q)], dtype=np.int64)
            weights = p ** np.arange(self.e, dtype=np.int64)
            summed = (digits[:, None, :] + digits[None, :, :]) % p
            t["add"] = summed @ weights
            la = t["log"][a]
            mul = t["exp"][(la[:, None] + la[None, :]) % (q - 1)]
            mul[0, :] = 0
            mul[:, 0] = 0
            t["mul"] = mul
        return t

    def _primitive_element(self) -> int:
        q = self.q
        factors = _factor(q - 1)
        for g in range(2, q):
            if all(self._polypow(g, (q - 1) // f) != 1 for f in factors):
                return g
        return 1  # q == 2

    def _polymul(self, a: int, b: int) -> int:
        prod = _pmul(self.coeffs(a), self.coeffs(b), self.p)
        return _undigits(_pmod(prod, self.modulus, self.p), self.p)

    def _polypow(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self._polymul(r, a)
            a = self._polymul(a, a)
            n >>= 1
        return r

    # -- scalar arithmetic on encoded ints --------------------------------

    def add(self, a: int, b: int) -> int:
        a, b = int(a), int(b)
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        t = self._tables
        if "add" in t:
            return int(t["add"][a, b])
        p = self.p
        return _undigits([(x + y) % p for x, y in zip(self.coeffs(a), self.coeffs(b))], p)

    def neg(self, a: int) -> int:
        a = int(a)
        if self.e == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p = self.p
        return _undigits([(-x) % p for x in self.coeffs(a)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        a, b = int(a), int(b)
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        t = self._tables
        if "exp" in t:
            return int(t["exp"][t["log"][a] + t["log"][b]])
        return self._polymul(a, b)

    def inv(self, a: int) -> int:
        a = int(a)
        if a == 0:
            raise DivisionByZero(f"zero has no inverse in {self!r}")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        t = self._tables
        if "inv" in t:
            return int(t["inv"][a])
        return self._polypow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        a, n = int(a), int(n)
        if n < 0:
            a, n = self.inv(a), -n
        if n == 0:
            return 1
        if a == 0:
            return 0
        if self.e == 1:
            return pow(a, n, self.p)
        t = self._tables
        if "exp" in t:
            return int(t["exp"][t["log"][a] * n % (self.q - 1)])
        return self._polypow(a, n % (self.q - 1))

    def elements(self) -> list[int]:
        return list(range(self.q))

    def nonzero(self) -> list[int]:
        return list(range(1, self.q))

    # -- vectorised arithmetic on int arrays -------------------------------

    def vadd(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        t = self._tables
        if "add" in t:
            return t["add"][a, b]
        p, out, scale = self.p, np.zeros(np.broadcast(a, b).shape, dtype=np.int64), 1
        for _ in range(self.e):
            out += ((a // scale + b // scale) % p) * scale
            scale *= p
        return out

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.e == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        t = self._tables
        if "neg" in t:
            return t["neg"][a]
        return np.vectorize(self.neg, otypes=[np.int64])(a)

    def vsub(self, a, b) -> np.ndarray:
        if self.e == 1:
            return (np.asarray(a, dtype=np.int64) - b) % self.p
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.e == 1:
            if self.p < (1 << 31):
                return (a * b) % self.p
            return np.vectorize(self.mul, otypes=[np.int64])(a, b)
        t = self._tables
        if "mul" in t:
            return t["mul"][a, b]
        if "exp" in t:
            out = t["exp"][t["log"][a] + t["log"][b]]
            return np.where((a == 0) | (b == 0), 0, out)
        return np.vectorize(self.mul, otypes=[np.int64])(a, b)

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        t = self._tables
        if "inv" in t:
            return t["inv"][a]
        return np.vectorize(self.inv, otypes=[np.int64])(a)

    def vpow(self, a, n: int) -> np.ndarray:
        return np.vectorize(lambda x: self.pow(int(x), n), otypes=[np.int64])(a)


@functools.lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> FieldSpec:
    """Canonical GF(p^e).

    The modulus is the monic irreducible of degree ``e`` whose coefficient
    vector is smallest when compared from the leading term down, i.e. the
    smallest base-p integer encoding. For GF(8) this is x^3 + x + 1.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not 1 <= e <= MAX_EXTENSION_DEGREE:
        raise DegreeTooLarge(f"extension degree must be in [1, {MAX_EXTENSION_DEGREE}], got {e}")
    for v in range(p**e):
        poly = list(_digits(v, p, e)) + [1]
        if is_irreducible(poly, p):
            return FieldSpec(p, e, tuple(poly))
    raise AssertionError("no irreducible polynomial found")  # unreachable


def field_of_order(q: int) -> FieldSpec:
    return make_field(*prime_power(q))


def enumerate_field(spec: FieldSpec) -> list[FieldElem]:
    """All elements, zero first, in increasing integer encoding."""
    return [FieldElem(spec, v) for v in range(spec.q)]


@dataclass(frozen=True)
class FieldElem:
    """A field element bound to its field; supports the usual operators."""

    field: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field(int(other)).value
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElem(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElem(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElem(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElem(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElem(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        return FieldElem(self.field, self.field.pow(self.value, n))

    def inv(self) -> FieldElem:
        return FieldElem(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"


def add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def neg(a: FieldElem) -> FieldElem:
    return -a


def inv(a: FieldElem) -> FieldElem:
    return a.inv()


def power(a: FieldElem, n: int) -> FieldElem:
    return a**n
