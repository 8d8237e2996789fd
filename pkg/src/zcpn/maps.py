"""The maps between ZC_{p^n}, Z[theta], ZC_{p^(n-1)} and F_p C_{p^(n-1)}.

pi1 sends g to theta, pi2 sends g to h = g mod C_{p^(n-1)}, f1 reduces mod p
and f2 sends theta to h mod p.  The square f2 . pi1 = f1 . pi2 commutes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cyclotomic import CycInt
from .errors import ContextError, NotAUnitError
from .ring import GroupRingElem, XAdicElem, to_x_basis


def _level(m: int, p: int) -> int:
    n = 0
    while m % p == 0:
        m //= p
        n += 1
    if m != 1:
        raise ContextError(f"group order is not a power of {p}")
    return n


def pi1(a: GroupRingElem, p: int) -> CycInt:
    """g -> theta, reduced modulo Phi_{p^n}."""
    if a.char:
        raise ContextError("pi1 is defined on the integral group ring")
    n = _level(a.m, p)
    return CycInt.from_exponents(p, n, dict(enumerate(a.coeffs)))


def pi2(a: GroupRingElem, p: int) -> GroupRingElem:
    """g -> h, the projection ZC_{p^n} -> ZC_{p^(n-1)}."""
    n = _level(a.m, p)
    if n < 2:
        raise ContextError("pi2 needs n >= 2")
    return GroupRingElem.from_terms(a.m // p, dict(enumerate(a.coeffs)), a.char)


def f1(a: GroupRingElem, p: int) -> GroupRingElem:
    """Coefficientwise reduction mod p."""
    if a.char not in (0, p):
        raise ContextError(f"cannot reduce an element of characteristic {a.char} mod {p}")
    return a.reduce(p)


def f2(u: CycInt) -> GroupRingElem:
    """theta -> h in F_p C_{p^(n-1)}; well defined since Phi_{p^n}(h) = p."""
    if u.n < 2:
        raise ContextError("f2 needs n >= 2")
    return GroupRingElem.from_terms(u.p ** (u.n - 1), dict(enumerate(u.coeffs)), u.p)


def f1_x(a: GroupRingElem, p: int) -> XAdicElem:
    return to_x_basis(f1(a, p))


def f2_x(u: CycInt) -> XAdicElem:
    return to_x_basis(f2(u))


def period_sum(m: int, p: int) -> GroupRingElem:
    """sum_{i<p} g^(i m/p), the generator of ker(pi1)."""
    step = m // p
    return GroupRingElem.from_terms(m, {i * step: 1 for i in range(p)})


def diagram_commutes(a: GroupRingElem, p: int) -> bool:
    return f2(pi1(a, p)) == f1(pi2(a, p), p)


@dataclass(frozen=True)
class KernelElem:
    """1 + sum_i a_i g^i P with P the period sum; lies in 1 + ker(pi1)."""

    p: int
    n: int
    a: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != self.p ** (self.n - 1):
            raise ContextError(f"kernel element of C_{self.p}^{self.n} needs {self.p ** (self.n - 1)} coefficients")

    @property
    def m(self) -> int:
        return self.p**self.n

    def expand(self) -> GroupRingElem:
        m, step = self.m, self.p ** (self.n - 1)
        coeffs = [0] * m
        coeffs[0] = 1
        for i, ai in enumerate(self.a):
            for l in range(self.p):
                coeffs[i + l * step] += ai
        return GroupRingElem(m, 0, tuple(coeffs))

    def image(self) -> GroupRingElem:
        """pi2 of the element: 1 + p * sum a_i h^i."""
        coeffs = [self.p * x for x in self.a]
        coeffs[0] += 1
        return GroupRingElem(len(self.a), 0, tuple(coeffs))

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "a": list(self.a)}

    @classmethod
    def from_json(cls, d) -> KernelElem:
        return cls(int(d["p"]), int(d["n"]), tuple(int(x) for x in d["a"]))


def ker_pi1_parametrize(w: GroupRingElem, p: int) -> KernelElem | None:
    """Recover the a_i of w, or None when w is not in 1 + ker(pi1)."""
    if w.char:
        raise ContextError("kernel parametrization is over Z")
    n = _level(w.m, p)
    if n < 2:
        raise ContextError("kernel parametrization needs n >= 2")
    step = p ** (n - 1)
    d = list(w.coeffs)
    d[0] -= 1
    a = d[:step]
    for l in range(1, p):
        if d[l * step : (l + 1) * step] != a:
            return None
    return KernelElem(p, n, tuple(a))


def lift_kernel(v: GroupRingElem, p: int) -> KernelElem:
    """The unique element of 1 + ker(pi1) whose pi2-image is v (v = 1 mod p)."""
    if v.char:
        raise ContextError("lifting is over Z")
    d = list(v.coeffs)
    d[0] -= 1
    if any(x % p for x in d):
        raise ContextError("element is not congruent to 1 mod p")
    return KernelElem(p, _level(v.m, p) + 1, tuple(x // p for x in d))


def lifted_inverse(v: GroupRingElem, p: int, v_inv: GroupRingElem | None = None) -> GroupRingElem:
    """Inverse of the lift of v: the lift of v^-1."""
    if v_inv is None:
        v_inv = v.inverse()
        if v_inv is None:
            raise NotAUnitError(f"{v} is not a unit")
    return lift_kernel(v_inv, p).expand()


def injective_on(ws: Sequence[KernelElem]) -> bool:
    """Distinct kernel elements have distinct pi2-images."""
    images = {}
    for w in ws:
        img = w.image().coeffs
        if img in images and images[img] != w.a:
            return False
        images[img] = w.a
    return True
