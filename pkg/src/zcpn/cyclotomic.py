"""Arithmetic in Z[theta] = Z[x]/Phi_{p^n}(x) and the cyclotomic unit families.

Also provides the logarithmic embedding used to certify multiplicative
independence of free units numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Mapping, Sequence

import mpmath
from mpmath.ctx_iv import MPIntervalContext
from sympy import isprime

from . import _poly
from .errors import ContextError, PrecisionError
from .ring import _format_terms, element_digest

DEFAULT_PRECISION = 128
RANK_TOLERANCE = mpmath.mpf("1e-20")


def totient_prime_power(p: int, n: int) -> int:
    return (p - 1) * p ** (n - 1)


def cyclotomic_poly(p: int, n: int) -> list[int]:
    """Coefficients of Phi_{p^n}(x) = sum_{j<p} x^(j p^(n-1)), lowest degree first."""
    if not isprime(p):
        raise ContextError(f"{p} is not prime")
    if n < 1:
        raise ContextError(f"level must be >= 1, got {n}")
    step = p ** (n - 1)
    out = [0] * (totient_prime_power(p, n) + 1)
    for j in range(p):
        out[j * step] = 1
    return out


def _fold(p: int, n: int, full: Sequence[int]) -> tuple[int, ...]:
    """Reduce a length-p^n coefficient list (exponents mod p^n) modulo Phi_{p^n}."""
    phi = totient_prime_power(p, n)
    step = p ** (n - 1)
    out = list(full[:phi])
    for r in range(step):
        c = full[phi + r]
        if c:
            for j in range(p - 1):
                out[j * step + r] -= c
    return tuple(out)


@dataclass(frozen=True)
class CycInt:
    """Element of Z[theta], theta a primitive p^n-th root of unity.

    ``coeffs[i]`` is the coefficient of theta^i, ``0 <= i < phi(p^n)``.
    """

    p: int
    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != totient_prime_power(self.p, self.n):
            raise ContextError(
                f"Z[theta_{self.p}^{self.n}] needs {totient_prime_power(self.p, self.n)} coefficients"
            )

    @property
    def order(self) -> int:
        return self.p**self.n

    @property
    def phi(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_exponents(cls, p: int, n: int, terms: Mapping[int, int]) -> CycInt:
        """Build sum c * theta^e; exponents may be any integers."""
        m = p**n
        full = [0] * m
        for e, c in terms.items():
            full[e % m] += c
        return cls(p, n, _fold(p, n, full))

    @classmethod
    def one(cls, p: int, n: int) -> CycInt:
        return cls.from_exponents(p, n, {0: 1})

    @classmethod
    def theta(cls, p: int, n: int, k: int = 1) -> CycInt:
        return cls.from_exponents(p, n, {k: 1})

    def _check(self, other: CycInt) -> None:
        if not isinstance(other, CycInt):
            raise TypeError(f"cannot combine CycInt with {type(other).__name__}")
        if (self.p, self.n) != (other.p, other.n):
            raise ContextError(f"Z[theta] mismatch: {self.p}^{self.n} vs {other.p}^{other.n}")

    def __add__(self, other: CycInt) -> CycInt:
        self._check(other)
        return CycInt(self.p, self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: CycInt) -> CycInt:
        self._check(other)
        return CycInt(self.p, self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CycInt:
        return CycInt(self.p, self.n, tuple(-a for a in self.coeffs))

    def __mul__(self, other: CycInt) -> CycInt:
        self._check(other)
        return CycInt(self.p, self.n, _mul_lists(self.p, self.n, self.coeffs, other.coeffs))

    def __pow__(self, e: int) -> CycInt:
        if e < 0:
            inv = self.inverse()
            if inv is None:
                raise ArithmeticError(f"negative power of a non-unit in Z[theta]: {self}")
            return inv ** (-e)
        result = CycInt.one(self.p, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> CycInt | None:
        """Exact inverse in Z[theta], or None when not a unit."""
        return cyc_inverse(self)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def to_text(self) -> str:
        return _format_terms(self.coeffs, "θ")

    def __str__(self) -> str:
        return self.to_text()

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, d: Mapping) -> CycInt:
        return cls(int(d["p"]), int(d["n"]), tuple(int(c) for c in d["coeffs"]))

    def digest(self) -> str:
        return element_digest(self.to_json())


def _mul_lists(p: int, n: int, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    m = p**n
    full = [0] * m
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    full[(i + j) % m] += x * y
    return _fold(p, n, full)


def cyc_inverse(u: CycInt) -> CycInt | None:
    p, n = u.p, u.n
    f = cyclotomic_poly(p, n)

    def mul(a, b):
        return list(_mul_lists(p, n, a, b))

    # columns of the multiplication-by-u matrix are theta^j * u
    cols = []
    col = list(u.coeffs)
    for _ in range(u.phi):
        cols.append(col)
        col = list(_fold(p, n, ([0] + col + [0] * (p**n - u.phi - 1))))
    bound = _poly.hadamard_bound(cols)
    inv = _poly.hensel_inverse(u.coeffs, f, mul, bound)
    return None if inv is None else CycInt(p, n, tuple(inv))


# -- unit families ------------------------------------------------------------


def mu(p: int, n: int, i: int) -> CycInt:
    """mu_i = 1 + theta + ... + theta^(i-1)."""
    if i < 1:
        raise ContextError(f"mu_i needs i >= 1, got {i}")
    return omega(p, n, i, 1)


def omega(p: int, n: int, q: int, s: int) -> CycInt:
    """omega_{q,s} = 1 + theta^s + ... + theta^((q-1)s)."""
    if q < 1:
        raise ContextError(f"omega_(q,s) needs q >= 1, got {q}")
    m = p**n
    # for p not dividing s a full period of theta^(js) sums to zero
    count = q % m if s % p else q
    full = [0] * m
    for j in range(count):
        full[(j * s) % m] += 1
    return CycInt(p, n, _fold(p, n, full))


@lru_cache(maxsize=None)
def _mu_t_inverse(p: int, n: int, t: int) -> CycInt:
    inv = mu(p, n, t).inverse()
    if inv is None:
        raise ContextError(f"mu_{t} is not a unit for p^n = {p}^{n}")
    return inv


def mu_t_inverse(ctx) -> CycInt:
    """Exact inverse of mu_t, computed once per context."""
    return _mu_t_inverse(ctx.p, ctx.n, ctx.t)


def h_unit(ctx, i: int) -> CycInt:
    """h_i = omega_{t,1}^-1 * omega_{t,t^i}."""
    if not 1 <= i <= ctx.kappa:
        raise ContextError(f"h_i needs 1 <= i <= {ctx.kappa}, got {i}")
    m = ctx.p**ctx.n
    return mu_t_inverse(ctx) * omega(ctx.p, ctx.n, ctx.t, pow(ctx.t, i, m))


def psi(u: CycInt) -> int:
    """Image of u under theta -> 1 in Z/p (odd p only)."""
    if u.p == 2:
        raise ContextError("psi is only used for odd p")
    return sum(u.coeffs) % u.p


# -- logarithmic embedding ----------------------------------------------------


@dataclass(frozen=True)
class LogVector:
    """log|sigma_a(u)| for one representative a of each conjugate pair.

    ``entries`` are interval midpoints; ``error_bound`` is the largest interval
    radius, so each true value lies within ``error_bound`` of its entry.
    """

    entries: tuple
    precision: int
    error_bound: mpmath.mpf

    def __len__(self) -> int:
        return len(self.entries)


def conjugate_representatives(p: int, n: int) -> list[int]:
    """a with 1 <= a < p^n/2 and gcd(a, p) = 1, ascending."""
    m = p**n
    return [a for a in range(1, (m + 1) // 2) if gcd(a, m) == 1 and 2 * a != m]


def character_representatives(m: int) -> list[int]:
    """a with 1 <= a < m/2: one complex character of C_m per conjugate pair."""
    return [a for a in range(1, (m + 1) // 2) if 2 * a != m]


@lru_cache(maxsize=None)
def _iv_context(precision: int):
    ctx = MPIntervalContext()
    ctx.prec = precision
    return ctx


@lru_cache(maxsize=None)
def _mp_context(precision: int):
    ctx = mpmath.MPContext()
    ctx.prec = precision
    return ctx


@lru_cache(maxsize=64)
def _root_table(m: int, precision: int):
    iv = _iv_context(precision)
    two_pi = 2 * iv.pi
    return tuple((iv.cos(two_pi * k / m), iv.sin(two_pi * k / m)) for k in range(m))


def log_abs_values(coeffs: Sequence[int], m: int, reps: Sequence[int], precision: int) -> LogVector:
    """log|sum c_j zeta_m^(a j)| for each a in reps, in interval arithmetic."""
    iv = _iv_context(precision)
    mp = _mp_context(precision)
    table = _root_table(m, precision)
    entries = []
    radius = mp.mpf(0)
    for a in reps:
        re = iv.mpf(0)
        im = iv.mpf(0)
        for j, c in enumerate(coeffs):
            if c:
                cos_k, sin_k = table[(a * j) % m]
                re += c * cos_k
                im += c * sin_k
        sq = re * re + im * im
        if sq.a <= 0:
            raise PrecisionError(f"cannot separate |u(zeta^{a})| from zero at {precision} bits")
        val = iv.log(sq) / 2
        entries.append(mp.mpf(val.mid))
        radius = max(radius, mp.mpf(val.delta) / 2)
    return LogVector(tuple(entries), precision, radius)


def log_embedding(u: CycInt, precision: int = DEFAULT_PRECISION) -> LogVector:
    return log_abs_values(u.coeffs, u.order, conjugate_representatives(u.p, u.n), precision)


def numerical_rank(rows: Sequence[Sequence], precision: int, tol=RANK_TOLERANCE) -> int:
    """Rank by full-pivot elimination; entries below tol * max|entry| count as zero."""
    if not rows:
        return 0
    mp = _mp_context(precision)
    A = [[mp.mpf(x) for x in r] for r in rows]
    scale = max((abs(x) for r in A for x in r), default=mp.mpf(0))
    if scale == 0:
        return 0
    cutoff = mp.mpf(tol) * scale
    nr, nc = len(A), len(A[0])
    rank = 0
    used_cols: set[int] = set()
    for r in range(nr):
        best = None
        for i in range(r, nr):
            for c in range(nc):
                if c not in used_cols and (best is None or abs(A[i][c]) > abs(A[best[0]][best[1]])):
                    best = (i, c)
        if best is None or abs(A[best[0]][best[1]]) <= cutoff:
            break
        i, c = best
        A[r], A[i] = A[i], A[r]
        piv = A[r][c]
        for j in range(r + 1, nr):
            f = A[j][c] / piv
            if f:
                A[j] = [a - f * b for a, b in zip(A[j], A[r])]
        used_cols.add(c)
        rank += 1
    return rank
