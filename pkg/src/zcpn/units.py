"""Case parameters and the named unit families of Z[theta] and ZC_{p^n}."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from sympy import factorint, isprime

from .cyclotomic import CycInt, h_unit, mu, mu_t_inverse, omega, psi, totient_prime_power
from .errors import ContextError, ScopeError, StructuralError, TrivialCaseError
from .independence import Certificate
from .ring import GroupRingElem, product

SET_NAMES = ("S1", "S2", "U", "U0", "Uprime", "S_hoechsmann", "kernel_gens")

# (p, n) with n >= 2 and phi(p^n) <= 66
IN_SCOPE_LEVELS = ((3, 2), (3, 3), (3, 4), (5, 2), (7, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7))
# primes whose level-one tables ship with the package
BASE_PRIMES = tuple(p for p in range(5, 68) if isprime(p))
MAX_PHI = 66


def multiplicative_order(a: int, m: int, group_order: int) -> int:
    """Order of a mod m, given a multiple of it (the group order)."""
    order = group_order
    for q in factorint(group_order):
        while order % q == 0 and pow(a, order // q, m) == 1:
            order //= q
    return order


def smallest_primitive_root(p: int, n: int) -> int:
    m = p**n
    phi = totient_prime_power(p, n)
    for cand in range(2, m):
        if cand % p and multiplicative_order(cand, m, phi) == phi:
            return cand
    raise ContextError(f"no primitive root mod {m}")


@dataclass(frozen=True)
class PrimePowerCtx:
    """All scalar parameters of one case C_{p^n}."""

    p: int
    n: int
    t: int
    kappa: int
    r: int
    k: int
    phi: int

    @property
    def m(self) -> int:
        return self.p**self.n

    @property
    def sign(self) -> int:
        """(-1)^p."""
        return 1 if self.p == 2 else -1

    @property
    def in_scope(self) -> bool:
        return self.phi <= MAX_PHI

    @property
    def lam(self) -> int | None:
        """(t^(phi(p^(n-1))/2) - (-1)^p) / p^(n-1), or None when not integral."""
        return _lambda(self.p, self.n, self.t)

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "t": self.t}

    def __str__(self) -> str:
        return f"C_{self.p}^{self.n} (t={self.t})"


def _lambda(p: int, n: int, t: int) -> int | None:
    if n < 2:
        return None
    mp = p ** (n - 1)
    phi_prev = totient_prime_power(p, n - 1)
    if phi_prev % 2:
        return None
    sign = 1 if p == 2 else -1
    num = pow(t, phi_prev // 2) - sign
    return num // mp if num % mp == 0 else None


@lru_cache(maxsize=None)
def make_ctx(p: int, n: int, t: int | None = None) -> PrimePowerCtx:
    if not isinstance(p, int) or not isprime(p):
        raise ContextError(f"{p} is not prime")
    if n < 1:
        raise ContextError(f"level must be >= 1, got {n}")
    m = p**n
    phi = totient_prime_power(p, n)
    if p == 2:
        if n <= 2:
            raise TrivialCaseError(f"U(ZC_{m}) = +-C_{m}; there are no free units")
        if t not in (None, 3):
            raise ContextError("for p = 2 the generator is fixed to 3")
        t = 3
        expected = 2 ** (n - 2)
    else:
        expected = phi
        if t is None:
            t = smallest_primitive_root(p, n)
        elif not 1 < t < m or t % p == 0 or multiplicative_order(t, m, phi) != phi:
            raise ContextError(f"{t} is not a primitive root mod {m}")
    if multiplicative_order(t, m, phi) != expected:
        raise StructuralError(f"order of {t} mod {m} is not {expected}")
    r = pow(t, -1, m)
    k, rem = divmod(t * r - 1, m)
    if rem:
        raise StructuralError("t*r - 1 is not divisible by p^n")
    return PrimePowerCtx(p, n, t, phi // 2 - 1, r, k, phi)


def check_scope(ctx: PrimePowerCtx) -> None:
    if not ctx.in_scope:
        raise ScopeError(
            f"phi({ctx.m}) = {ctx.phi} > {MAX_PHI}: generation of the cyclotomic units is not known here"
        )


def t_power(ctx: PrimePowerCtx, i: int) -> int:
    """t^i reduced into [1, p^n)."""
    return pow(ctx.t, i, ctx.m)


# -- Z[theta] families --------------------------------------------------------


def _theta(ctx):
    return CycInt.theta(ctx.p, ctx.n)


def _minus_one(ctx):
    return -CycInt.one(ctx.p, ctx.n)


def mu_ratio(ctx: PrimePowerCtx, i: int) -> CycInt:
    """mu_t^(-i) * mu_(t^i)."""
    return mu_t_inverse(ctx) ** i * mu(ctx.p, ctx.n, t_power(ctx, i))


def _family(ctx: PrimePowerCtx, name: str) -> list:
    p, n = ctx.p, ctx.n
    theta = _theta(ctx)
    odd = p != 2
    mu_t = mu(p, n, ctx.t)
    if name == "S1":
        head = [_minus_one(ctx), theta] if odd else [theta]
        return head + [mu(p, n, t_power(ctx, i)) for i in range(1, ctx.kappa + 1)]
    if name == "S2":
        head = [_minus_one(ctx), theta] if odd else [theta]
        return head + [mu_t] + [mu_ratio(ctx, i) for i in range(2, ctx.kappa + 1)]
    if name == "U":
        first = -(mu_t ** ((p - 1) // 2)) if odd else mu_t
        return [theta, first] + [mu_ratio(ctx, i) for i in range(2, ctx.kappa + 1)]
    if name == "U0":
        return [theta] + [h_unit(ctx, i) for i in range(1, ctx.kappa + 1)]
    if name == "Uprime":
        return [theta] + [mu_ratio(ctx, i) for i in range(2, ctx.kappa + 2)]
    if name == "S_hoechsmann":
        return [GroupRingElem.g(ctx.m)] + [hoechsmann_unit(ctx, i) for i in range(1, ctx.kappa + 1)]
    raise ContextError(f"unknown set name {name!r}; expected one of {SET_NAMES}")


def expected_size(ctx: PrimePowerCtx, name: str) -> int:
    kappa = ctx.kappa
    odd = ctx.p != 2
    return {
        "S1": kappa + (2 if odd else 1),
        "S2": kappa + (2 if odd else 1),
        "U": kappa + 1,
        "U0": kappa + 1,
        "Uprime": kappa + 1,
        "S_hoechsmann": kappa + 1,
    }[name]


def unit_certificate(u) -> Certificate:
    """Exact inverse check; the witness stores the inverse."""
    inv = u.inverse()
    ok = inv is not None and (u * inv).is_one()
    witness = {"inverse": inv.to_json()} if inv is not None else {}
    return Certificate("unit", [u.digest()], "pass" if ok else "fail", witness)


@dataclass
class UnitSystem:
    ctx: PrimePowerCtx
    name: str
    members: list
    certificates: list[Certificate] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {
            "p": self.ctx.p,
            "n": self.ctx.n,
            "t": self.ctx.t,
            "name": self.name,
            "members": [u.to_json() for u in self.members],
            "certs": [c.to_json() for c in self.certificates],
        }


def build_set(ctx: PrimePowerCtx, name: str) -> UnitSystem:
    if name == "kernel_gens":
        from .kernel import assemble

        members = list(assemble(ctx).kernel_part)
    else:
        members = _family(ctx, name)
        if len(members) != expected_size(ctx, name):
            raise StructuralError(f"{name} has {len(members)} members, expected {expected_size(ctx, name)}")
    certs = [unit_certificate(u) for u in members]
    bad = [i for i, c in enumerate(certs) if not c.passed]
    if bad:
        raise StructuralError(f"members {bad} of {name} for {ctx} are not units")
    return UnitSystem(ctx, name, members, certs)


# -- group ring units ---------------------------------------------------------


def hoechsmann_unit(ctx: PrimePowerCtx, i: int) -> GroupRingElem:
    """(1 + g^t + ... + g^((r-1)t)) (1 + g^(t^i) + ... + g^((t-1)t^i)) - k * ghat."""
    if not 1 <= i <= ctx.kappa:
        raise ContextError(f"Hoechsmann index must lie in [1, {ctx.kappa}], got {i}")
    m = ctx.m
    left = GroupRingElem.geometric(m, ctx.r, ctx.t)
    right = GroupRingElem.geometric(m, ctx.t, t_power(ctx, i))
    return left * right - GroupRingElem.hat(m).scale(ctx.k)


def split_group_element(u: GroupRingElem) -> tuple[int, GroupRingElem]:
    """Write a normalized unit as g^e * u' with u' in U_2; returns (e, u').

    For odd m this u' is the symmetric part of u.
    """
    if u.augmentation() != 1:
        raise ContextError("only normalized units split this way")
    e = u.weighted_exponent()
    return e, u.shift(-e)


def varpi(ctx: PrimePowerCtx) -> tuple[GroupRingElem, GroupRingElem]:
    """The unit varpi of ZC_{p^(n-1)} together with its inverse omega."""
    if ctx.n < 2:
        raise ContextError("varpi lives one level down and needs n >= 2")
    p, mp = ctx.p, ctx.p ** (ctx.n - 1)
    half_phi = totient_prime_power(p, ctx.n - 1) // 2
    sign = ctx.sign
    s = pow(ctx.t, -1, mp)
    lam = _lambda(p, ctx.n, ctx.t)
    lam_prime = _lambda(p, ctx.n, s)
    if lam is None or lam_prime is None:
        raise StructuralError(f"lambda is not integral for {ctx}")
    hat = GroupRingElem.hat(mp)
    w = GroupRingElem.geometric(mp, ctx.t, 1) ** half_phi
    w_inv = GroupRingElem.geometric(mp, s, ctx.t) ** half_phi
    pi = w.scale(sign) - hat.scale(sign * lam)
    om = w_inv.scale(sign) - hat.scale(sign * lam_prime)
    if not (pi * om).is_one():
        raise StructuralError(f"varpi * omega != 1 for {ctx}")
    return pi, om


# -- identities among the generating sets -------------------------------------


def _identity(name: str, lhs, rhs, detail: dict | None = None) -> Certificate:
    ok = lhs == rhs
    return Certificate("identity", [lhs.digest(), rhs.digest()], "pass" if ok else "fail", {"name": name, **(detail or {})})


def coset_decomposition(ctx: PrimePowerCtx, i: int) -> tuple[int, int, int]:
    """For i coprime to p, return (sign_flag, theta_exp, j) with mu_i = (+-theta^e) mu_(t^j)."""
    m, p = ctx.m, ctx.p
    i %= m
    if i % p == 0:
        raise ContextError(f"mu_{i} is not a unit for m = {m}")
    if p == 2:
        candidates = [(0, q) for q in range(2 ** (ctx.n - 2))] + [(1, q) for q in range(2 ** (ctx.n - 2))]
        for minus, q in candidates:
            if ((-1) ** minus * pow(3, q, m)) % m == i:
                break
        else:
            raise StructuralError(f"{i} is not of the form +-3^q mod {m}")
        j = q
    else:
        j = next(j for j in range(ctx.phi) if pow(ctx.t, j, m) == i)
        minus = int(j >= ctx.phi // 2)
        if minus:
            j -= ctx.phi // 2
    return (minus, i if minus else 0, j)


def generator_identities(ctx: PrimePowerCtx) -> list[Certificate]:
    """Exact checks of the rewriting identities that relate the families."""
    p, n, m = ctx.p, ctx.n, ctx.m
    certs = []
    one = CycInt.one(p, n)
    # every unit mu_i is +-theta^e times some mu_(t^j)
    for i in range(1, m):
        if i % p == 0:
            continue
        minus, e, j = coset_decomposition(ctx, i)
        rhs = CycInt.theta(p, n, e) * mu(p, n, t_power(ctx, j) if j else 1)
        if minus:
            rhs = -rhs
        certs.append(_identity(f"mu_{i}", mu(p, n, i), rhs, {"minus": minus, "theta": e, "j": j}))
    # S2 members are words in S1 and vice versa
    mu_t = mu(p, n, ctx.t)
    for i in range(2, ctx.kappa + 1):
        certs.append(_identity(f"S1<-S2 {i}", mu(p, n, t_power(ctx, i)), mu_t**i * mu_ratio(ctx, i)))
    # mu_(q^s) = prod_j omega_(q, q^j), for every unit index q and 1 <= s <= phi
    for q in range(2, m):
        if q % p == 0:
            continue
        acc = one
        bad = []
        for s in range(1, ctx.phi + 1):
            acc = acc * omega(p, n, q, pow(q, s - 1, m))
            if acc != mu(p, n, q**s):
                bad.append(s)
        certs.append(
            Certificate("identity", [], "fail" if bad else "pass", {"name": f"mu_{q}^s product", "failing_s": bad})
        )
    if p == 2:
        # mu_i = -theta^i mu_(3^q) for the integer i = (2^n - 1) 3^q
        for q in range(2 ** (n - 2)):
            i = (m - 1) * 3**q
            certs.append(_identity(f"mu_(2^n-1)3^{q}", mu(p, n, i), -(CycInt.theta(p, n, i) * mu(p, n, 3**q))))
    # U0 and U' generate the same group
    hs = [h_unit(ctx, i) for i in range(1, ctx.kappa + 1)]
    for i in range(2, ctx.kappa + 2):
        certs.append(_identity(f"U'<-U0 {i}", mu_ratio(ctx, i), product(hs[: i - 1], one)))
    for i in range(1, ctx.kappa + 1):
        certs.append(_identity(f"U0<-U' {i}", hs[i - 1], mu_ratio(ctx, i + 1) * mu_ratio(ctx, i).inverse()))
    if p != 2:
        for u in _family(ctx, "U"):
            ok = psi(u) == 1
            certs.append(Certificate("identity", [u.digest()], "pass" if ok else "fail", {"name": "psi", "value": psi(u)}))
    return certs


def hoechsmann_set(ctx: PrimePowerCtx) -> list[GroupRingElem]:
    return [hoechsmann_unit(ctx, i) for i in range(1, ctx.kappa + 1)]


def theta_parts(ctx: PrimePowerCtx) -> list[GroupRingElem]:
    """The U_2 (symmetric for odd p) parts of the Hoechsmann units."""
    return [split_group_element(u)[1] for u in hoechsmann_set(ctx)]
