"""Exact arithmetic in the group rings ZC_m and F_pC_m.

Elements are dense: coefficient ``i`` belongs to ``g^i``.  Everything here is
an immutable value; operations return new elements.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

from . import _lattice, _poly
from .errors import ContextError, NotAUnitError


def _format_terms(coeffs: Sequence[int], symbol: str) -> str:
    parts: list[str] = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = symbol if i == 1 else f"{symbol}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GroupRingElem:
    """Element of R C_m with R = Z (``char == 0``) or R = F_p (``char == p``)."""

    m: int
    char: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ContextError(f"group order must be positive, got {self.m}")
        if len(self.coeffs) != self.m:
            raise ContextError(f"expected {self.m} coefficients, got {len(self.coeffs)}")
        if self.char:
            object.__setattr__(self, "coeffs", tuple(c % self.char for c in self.coeffs))
        else:
            object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_terms(cls, m: int, terms: Mapping[int, int], char: int = 0) -> GroupRingElem:
        """Build from ``{exponent: coefficient}``; exponents are reduced mod m."""
        coeffs = [0] * m
        for e, c in terms.items():
            coeffs[e % m] += c
        return cls(m, char, tuple(coeffs))

    @classmethod
    def zero(cls, m: int, char: int = 0) -> GroupRingElem:
        return cls(m, char, (0,) * m)

    @classmethod
    def one(cls, m: int, char: int = 0) -> GroupRingElem:
        return cls.from_terms(m, {0: 1}, char)

    @classmethod
    def g(cls, m: int, k: int = 1, char: int = 0) -> GroupRingElem:
        """The group element g^k."""
        return cls.from_terms(m, {k: 1}, char)

    @classmethod
    def hat(cls, m: int, char: int = 0) -> GroupRingElem:
        """Sum of all group elements."""
        return cls(m, char, (1,) * m)

    @classmethod
    def geometric(cls, m: int, count: int, step: int, char: int = 0) -> GroupRingElem:
        """1 + g^step + g^(2 step) + ... + g^((count-1) step)."""
        coeffs = [0] * m
        for j in range(count):
            coeffs[(j * step) % m] += 1
        return cls(m, char, tuple(coeffs))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: GroupRingElem) -> None:
        if not isinstance(other, GroupRingElem):
            raise TypeError(f"cannot combine GroupRingElem with {type(other).__name__}")
        if (self.m, self.char) != (other.m, other.char):
            raise ContextError(
                f"ring mismatch: (m={self.m}, char={self.char}) vs (m={other.m}, char={other.char})"
            )

    def __add__(self, other: GroupRingElem) -> GroupRingElem:
        self._check(other)
        return GroupRingElem(self.m, self.char, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: GroupRingElem) -> GroupRingElem:
        self._check(other)
        return GroupRingElem(self.m, self.char, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> GroupRingElem:
        return GroupRingElem(self.m, self.char, tuple(-a for a in self.coeffs))

    def scale(self, k: int) -> GroupRingElem:
        return GroupRingElem(self.m, self.char, tuple(k * a for a in self.coeffs))

    def __mul__(self, other: GroupRingElem) -> GroupRingElem:
        self._check(other)
        m = self.m
        out = [0] * m
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % m] += a * b
        return GroupRingElem(m, self.char, tuple(out))

    def __pow__(self, e: int) -> GroupRingElem:
        if e < 0:
            inv = self.inverse()
            if inv is None:
                raise NotAUnitError(f"negative power of a non-unit: {self}")
            return inv ** (-e)
        result = GroupRingElem.one(self.m, self.char)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> GroupRingElem | None:
        """Exact inverse, or None when the element is not a unit."""
        m, p = self.m, self.char
        modulus = [-1] + [0] * (m - 1) + [1]
        if p:
            inv = _poly.inverse_mod_prime(self.coeffs, modulus, p)
            if inv is None:
                return None
            return GroupRingElem(m, p, tuple(inv + [0] * (m - len(inv))))

        def mul(a, b):
            return list((GroupRingElem(m, 0, tuple(a)) * GroupRingElem(m, 0, tuple(b))).coeffs)

        # every column of the circulant has the same norm
        bound = _poly.hadamard_bound([self.coeffs] * m)
        inv = _poly.hensel_inverse(self.coeffs, modulus, mul, bound)
        return None if inv is None else GroupRingElem(m, 0, tuple(inv))

    # -- structure ----------------------------------------------------------

    def involution(self) -> GroupRingElem:
        m = self.m
        return GroupRingElem(m, self.char, tuple(self.coeffs[(-i) % m] for i in range(m)))

    def augmentation(self) -> int:
        s = sum(self.coeffs)
        return s % self.char if self.char else s

    def weighted_exponent(self) -> int:
        """sum(i * c_i) mod m: the group element u is congruent to mod (Delta G)^2."""
        return sum(i * c for i, c in enumerate(self.coeffs)) % self.m

    def shift(self, k: int) -> GroupRingElem:
        """Multiply by g^k."""
        m = self.m
        return GroupRingElem(m, self.char, tuple(self.coeffs[(i - k) % m] for i in range(m)))

    def reduce(self, p: int) -> GroupRingElem:
        """Coefficientwise reduction to F_p C_m."""
        if self.char not in (0, p):
            raise ContextError(f"cannot reduce char {self.char} element mod {p}")
        return GroupRingElem(self.m, p, self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    # -- serialisation ------------------------------------------------------

    def to_text(self, symbol: str = "g") -> str:
        return _format_terms(self.coeffs, symbol)

    def __str__(self) -> str:
        return self.to_text()

    def to_json(self) -> dict:
        return {"m": self.m, "char": self.char, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, d: Mapping) -> GroupRingElem:
        return cls(int(d["m"]), int(d["char"]), tuple(int(c) for c in d["coeffs"]))

    def digest(self) -> str:
        return element_digest(self.to_json())


def element_digest(obj) -> str:
    raw = json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(raw).hexdigest()[:16]


# -- functional surface -------------------------------------------------------


def gr_add(a: GroupRingElem, b: GroupRingElem) -> GroupRingElem:
    return a + b


def gr_mul(a: GroupRingElem, b: GroupRingElem) -> GroupRingElem:
    return a * b


def gr_pow(a: GroupRingElem, e: int) -> GroupRingElem:
    return a**e


def gr_inverse(a: GroupRingElem) -> GroupRingElem | None:
    return a.inverse()


def involution(a: GroupRingElem) -> GroupRingElem:
    return a.involution()


def augmentation(a: GroupRingElem) -> int:
    return a.augmentation()


def is_symmetric(a: GroupRingElem) -> bool:
    return a.involution() == a


def is_normalized(a: GroupRingElem) -> bool:
    return a.augmentation() == 1


@lru_cache(maxsize=None)
def _delta_squared_basis(m: int) -> tuple[tuple[int, ...], ...]:
    # (g^i - 1)(g - 1) for 1 <= i < m spans (Delta G)^2 for cyclic G
    gm1 = GroupRingElem.g(m) - GroupRingElem.one(m)
    gens = [list(((GroupRingElem.g(m, i) - GroupRingElem.one(m)) * gm1).coeffs) for i in range(1, m)]
    return tuple(tuple(r) for r in _lattice.hnf(gens))


def in_delta_squared(a: GroupRingElem) -> bool:
    """Membership of an integral element in the square of the augmentation ideal."""
    if a.char:
        raise ContextError("augmentation-ideal membership is tested over Z only")
    basis = _delta_squared_basis(a.m)
    if not basis:
        return not any(a.coeffs)
    return _lattice.solve_in_lattice(basis, a.coeffs) is not None


def is_u2(a: GroupRingElem) -> bool:
    """True when a - 1 lies in (Delta G)^2."""
    return in_delta_squared(a - GroupRingElem.one(a.m, a.char))


# -- the x-adic basis of F_p C_{p^j} ------------------------------------------


def _prime_power_exponent(m: int, p: int) -> int | None:
    j = 0
    while m % p == 0:
        m //= p
        j += 1
    return j if m == 1 else None


@lru_cache(maxsize=None)
def _binomials_mod(m: int, p: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(comb(i, k) % p for k in range(m)) for i in range(m))


@dataclass(frozen=True)
class XAdicElem:
    """Element of F_p C_{p^j} written in powers of x = h - 1 (so x^m = 0)."""

    p: int
    m: int
    terms: tuple[int, ...]

    def __post_init__(self):
        if len(self.terms) != self.m:
            raise ContextError(f"expected {self.m} x-adic terms, got {len(self.terms)}")
        if _prime_power_exponent(self.m, self.p) is None:
            raise ContextError(f"{self.m} is not a power of {self.p}")
        object.__setattr__(self, "terms", tuple(t % self.p for t in self.terms))

    @classmethod
    def from_terms(cls, p: int, m: int, terms: Mapping[int, int]) -> XAdicElem:
        out = [0] * m
        for e, c in terms.items():
            if e < m:
                out[e] += c
        return cls(p, m, tuple(out))

    @classmethod
    def one(cls, p: int, m: int) -> XAdicElem:
        return cls.from_terms(p, m, {0: 1})

    def _check(self, other: XAdicElem) -> None:
        if (self.p, self.m) != (other.p, other.m):
            raise ContextError(f"x-adic mismatch: F_{self.p}C_{self.m} vs F_{other.p}C_{other.m}")

    def __add__(self, other: XAdicElem) -> XAdicElem:
        self._check(other)
        return XAdicElem(self.p, self.m, tuple(a + b for a, b in zip(self.terms, other.terms)))

    def __sub__(self, other: XAdicElem) -> XAdicElem:
        self._check(other)
        return XAdicElem(self.p, self.m, tuple(a - b for a, b in zip(self.terms, other.terms)))

    def __mul__(self, other: XAdicElem) -> XAdicElem:
        self._check(other)
        m, p = self.m, self.p
        out = [0] * m
        for i, a in enumerate(self.terms):
            if a:
                for j in range(m - i):
                    b = other.terms[j]
                    if b:
                        out[i + j] += a * b
        return XAdicElem(p, m, tuple(c % p for c in out))

    def __pow__(self, e: int) -> XAdicElem:
        if e < 0:
            inv = self.inverse()
            if inv is None:
                raise NotAUnitError("negative power of a non-unit")
            return inv ** (-e)
        result = XAdicElem.one(self.p, self.m)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> XAdicElem | None:
        # 1/(c(1 - y)) = c^-1 (1 + y + y^2 + ...), finite since y is nilpotent
        c = self.terms[0]
        if c == 0:
            return None
        cinv = pow(c, -1, self.p)
        y = XAdicElem(self.p, self.m, (0,) + tuple(-cinv * t for t in self.terms[1:]))
        acc = XAdicElem.one(self.p, self.m)
        power = XAdicElem.one(self.p, self.m)
        for _ in range(1, self.m):
            power = power * y
            if not any(power.terms):
                break
            acc = acc + power
        return XAdicElem(self.p, self.m, tuple(cinv * t for t in acc.terms))

    def is_one(self) -> bool:
        return self.terms[0] == 1 and not any(self.terms[1:])

    def leading(self) -> tuple[int, int] | None:
        """(exponent, coefficient) of the lowest non-constant term, None for a constant."""
        for i in range(1, self.m):
            if self.terms[i]:
                return i, self.terms[i]
        return None

    def to_group_ring(self) -> GroupRingElem:
        return from_x_basis(self)

    def to_text(self) -> str:
        return _format_terms(self.terms, "x")

    def __str__(self) -> str:
        return self.to_text()

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "x_terms": list(self.terms)}

    @classmethod
    def from_json(cls, d: Mapping) -> XAdicElem:
        return cls(int(d["p"]), int(d["m"]), tuple(int(c) for c in d["x_terms"]))

    def digest(self) -> str:
        return element_digest(self.to_json())


def to_x_basis(a: GroupRingElem) -> XAdicElem:
    """Rewrite sum a_i h^i as sum b_k x^k with h = 1 + x."""
    p, m = a.char, a.m
    if not p or _prime_power_exponent(m, p) is None:
        raise ContextError(f"x-adic basis needs char p and m a power of p (m={m}, char={p})")
    binom = _binomials_mod(m, p)
    out = [0] * m
    for i, c in enumerate(a.coeffs):
        if c:
            row = binom[i]
            for k in range(i + 1):
                out[k] += c * row[k]
    return XAdicElem(p, m, tuple(out))


def from_x_basis(u: XAdicElem) -> GroupRingElem:
    """Inverse of :func:`to_x_basis`: x^k = (h - 1)^k."""
    p, m = u.p, u.m
    binom = _binomials_mod(m, p)
    out = [0] * m
    for k, b in enumerate(u.terms):
        if b:
            row = binom[k]
            for i in range(k + 1):
                sign = -1 if (k - i) & 1 else 1
                out[i] += sign * b * row[i]
    return GroupRingElem(m, p, tuple(out))


def random_element(rng, m: int, char: int = 0, bound: int = 5) -> GroupRingElem:
    """Random element with coefficients in [-bound, bound] (or [0, p) in char p)."""
    if char:
        return GroupRingElem(m, char, tuple(rng.randrange(char) for _ in range(m)))
    return GroupRingElem(m, 0, tuple(rng.randint(-bound, bound) for _ in range(m)))


def product(elems: Iterable, one):
    acc = one
    for e in elems:
        acc = acc * e
    return acc
