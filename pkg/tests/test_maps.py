import random

import pytest

from zcpn.cyclotomic import CycInt
from zcpn.errors import ContextError
from zcpn.maps import (
    KernelElem,
    diagram_commutes,
    f1,
    f1_x,
    f2,
    injective_on,
    ker_pi1_parametrize,
    lift_kernel,
    period_sum,
    pi1,
    pi2,
)
from zcpn.ring import GroupRingElem, XAdicElem, random_element
from zcpn.units import IN_SCOPE_LEVELS, build_set, make_ctx

U1 = GroupRingElem(9, 0, (-1, 1, -1, 1, 0, 0, 1, -1, 1))
U2 = GroupRingElem(9, 0, (1, -1, 1, 0, 0, 0, 0, 1, -1))
A1 = (-12, 11, -9, 6, -2, -2, 6, -9, 11)
A2 = (6, -6, 5, -3, 1, 1, -3, 5, -6)


def test_pi1_basics():
    assert pi1(GroupRingElem.g(9), 3) == CycInt.theta(3, 2)
    rng = random.Random(5)
    p_sum = period_sum(27, 3)
    for _ in range(10):
        a = random_element(rng, 27)
        assert not any(pi1(p_sum * a, 3).coeffs)
    with pytest.raises(ContextError):
        pi1(GroupRingElem.one(10), 3)


def test_pi2_basics():
    assert pi2(GroupRingElem.g(27, 9), 3).is_one()
    k = KernelElem(3, 3, A1)
    assert pi2(k.expand(), 3) == k.image()
    assert k.image().coeffs[0] == 1 + 3 * A1[0]
    with pytest.raises(ContextError):
        pi2(GroupRingElem.g(3), 3)
    theta1 = build_set(make_ctx(3, 3), "S_hoechsmann").members[1]
    assert pi2(theta1, 3).augmentation() == 1


def test_f1_f2():
    assert f1_x(U1, 3) == XAdicElem(3, 9, (1, 0, 0, 0, 2, 2, 1, 1, 1))
    rng = random.Random(2)
    a = random_element(rng, 9)
    assert f1(GroupRingElem.one(9) + a.scale(9), 3).is_one()
    assert f2(CycInt.theta(3, 3)) == GroupRingElem.g(9, 1, 3)
    with pytest.raises(ContextError):
        f2(CycInt.theta(3, 1))


@pytest.mark.parametrize("p,n", IN_SCOPE_LEVELS)
def test_maps_are_homomorphisms(p, n):
    rng = random.Random(p * 100 + n)
    m = p**n
    for _ in range(10):
        a, b = random_element(rng, m), random_element(rng, m)
        assert pi1(a + b, p) == pi1(a, p) + pi1(b, p)
        assert pi1(a * b, p) == pi1(a, p) * pi1(b, p)
        assert pi2(a * b, p) == pi2(a, p) * pi2(b, p)
        assert f1(a * b, p) == f1(a, p) * f1(b, p)
        u, v = pi1(a, p), pi1(b, p)
        assert f2(u * v) == f2(u) * f2(v)
        assert f2(u + v) == f2(u) + f2(v)


@pytest.mark.parametrize("p,n", IN_SCOPE_LEVELS)
def test_diagram_commutes(p, n):
    rng = random.Random(n * 31 + p)
    m = p**n
    for _ in range(100):
        assert diagram_commutes(random_element(rng, m, bound=20), p)
    for u in build_set(make_ctx(p, n), "S_hoechsmann").members:
        assert diagram_commutes(u, p)


def test_kernel_parametrization():
    for u, a in ((U1, A1), (U2, A2)):
        w = lift_kernel(u**3, 3)
        assert w.a == a
        full = w.expand()
        assert ker_pi1_parametrize(full, 3) == w
        assert pi1(full, 3).is_one()
    assert ker_pi1_parametrize(GroupRingElem.one(27), 3).a == (0,) * 9
    assert ker_pi1_parametrize(GroupRingElem.g(27), 3) is None
    with pytest.raises(ContextError):
        lift_kernel(U1, 3)


def test_injectivity_and_symmetry():
    ws = [lift_kernel(U1**3, 3), lift_kernel(U2**3, 3), lift_kernel(U1**3 * U2**3, 3)]
    assert injective_on(ws)
    for w in ws:
        e = w.expand()
        assert e.involution() == e
