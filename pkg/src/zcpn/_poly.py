"""Dense polynomial helpers used by the exact inverse routines.

Polynomials are coefficient lists, lowest degree first.
"""

from __future__ import annotations

from math import isqrt
from typing import Callable, Sequence

# 2^61 - 1; any prime works for lifting, a large one needs fewer Newton steps.
LIFT_PRIME = (1 << 61) - 1


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod_modp(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = trim([x % p for x in a])
    b = trim([x % p for x in b])
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = (a[-1] * inv_lead) % p
        q[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % p
        trim(a)
    return q, a


def _mul_modp(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([x % p for x in out])


def inverse_mod_prime(a: Sequence[int], f: Sequence[int], p: int) -> list[int] | None:
    """Inverse of ``a`` in F_p[x]/(f), or None when gcd(a, f) != 1."""
    r0, r1 = trim([x % p for x in f]), trim([x % p for x in a])
    s0, s1 = [], [1]
    while r1:
        q, r = _divmod_modp(r0, r1, p)
        qs = _mul_modp(q, s1, p)
        s_next = [0] * max(len(s0), len(qs))
        for i, x in enumerate(s0):
            s_next[i] += x
        for i, x in enumerate(qs):
            s_next[i] -= x
        r0, r1 = r1, r
        s0, s1 = s1, trim([x % p for x in s_next])
    if len(r0) != 1:
        return None
    c = pow(r0[0], -1, p)
    _, inv = _divmod_modp([(x * c) % p for x in s0], f, p)
    return inv


def symmetric(x: int, mod: int) -> int:
    x %= mod
    return x - mod if 2 * x > mod else x


def hadamard_bound(columns: Sequence[Sequence[int]]) -> int:
    """Upper bound for every cofactor of the integer matrix with these columns."""
    sq = 1
    for col in columns:
        sq *= max(sum(c * c for c in col), 1)
    return isqrt(sq) + 1


def hensel_inverse(
    a: Sequence[int],
    f: Sequence[int],
    mul: Callable[[Sequence[int], Sequence[int]], list[int]],
    bound: int,
    prime: int = LIFT_PRIME,
) -> list[int] | None:
    """Exact inverse of ``a`` in Z[x]/(f) with integer coefficients, or None.

    ``mul`` multiplies two reduced coefficient lists of length deg(f).  A unit
    has det +-1, so its inverse is an adjugate column and every coefficient is
    bounded by ``bound`` (a Hadamard bound).  Newton lifting stops once the
    modulus exceeds ``2*bound``; no exact inverse by then means no unit.
    """
    d = len(f) - 1
    v = inverse_mod_prime(a, f, prime)
    if v is None:
        return None
    v = v + [0] * (d - len(v))
    one = [1] + [0] * (d - 1)
    mod = prime
    while True:
        cand = [symmetric(x, mod) for x in v]
        if mul(a, cand) == one:
            return cand
        if mod > 2 * bound:
            return None
        mod = mod * mod
        av = mul(a, v)
        two_minus = [(-x) % mod for x in av]
        two_minus[0] = (two_minus[0] + 2) % mod
        v = [x % mod for x in mul(v, two_minus)]
