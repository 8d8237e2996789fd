from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import circulant_inverse
from zcpn.cyclotomic import CycInt, mu, psi
from zcpn.independence import element_order, exact_finite_independent, leading_term_independent, x_dlog, x_exp
from zcpn.maps import diagram_commutes
from zcpn.ring import GroupRingElem, XAdicElem, from_x_basis, to_x_basis

moduli = st.sampled_from([3, 4, 5, 8, 9])
small = st.integers(-6, 6)


@st.composite
def pair(draw, char=0):
    m = draw(moduli)
    coeffs = st.lists(small, min_size=m, max_size=m)
    return GroupRingElem(m, char, tuple(draw(coeffs))), GroupRingElem(m, char, tuple(draw(coeffs)))


@st.composite
def x_unit(draw, p, N):
    return XAdicElem(p, N, (1,) + tuple(draw(st.lists(st.integers(0, p - 1), min_size=N - 1, max_size=N - 1))))


@given(pair())
def test_augmentation_is_a_homomorphism(ab):
    a, b = ab
    assert (a * b).augmentation() == a.augmentation() * b.augmentation()
    assert (a + b).augmentation() == a.augmentation() + b.augmentation()


@given(pair())
def test_involution_is_an_automorphism_of_order_two(ab):
    a, b = ab
    assert (a * b).involution() == a.involution() * b.involution()
    assert a.involution().involution() == a


@given(pair())
def test_ring_axioms(ab):
    a, b = ab
    c = a + b
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=40, deadline=None)
@given(pair())
def test_inverse_agrees_with_rational_solve(ab):
    a, _ = ab
    ours = a.inverse()
    ref = circulant_inverse(list(a.coeffs))
    assert (ours is None) == (ref is None)
    if ours is not None:
        assert list(ours.coeffs) == ref
        assert (a * ours).is_one()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(3, 9), (2, 8), (2, 16), (5, 5)]), st.data())
def test_x_basis_roundtrip(pN, data):
    p, N = pN
    coeffs = data.draw(st.lists(st.integers(0, p - 1), min_size=N, max_size=N))
    a = GroupRingElem(N, p, tuple(coeffs))
    assert from_x_basis(to_x_basis(a)) == a


@given(st.integers(1, 2), st.integers(1, 8), st.integers(1, 2), st.data())
def test_frobenius_leading_term(c, s, k, data):
    p, N = 3, 27
    tail = data.draw(st.lists(st.integers(0, 2), min_size=N - s - 1, max_size=N - s - 1))
    u = XAdicElem(p, N, (1,) + (0,) * (s - 1) + (c,) + tuple(tail))
    v = u ** (p**k)
    lead = s * p**k
    if lead < N:
        assert v.leading() == (lead, c)
    else:
        assert v.is_one()


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_dlog_is_a_homomorphism(data):
    p, N = 3, 9
    u, v = data.draw(x_unit(p, N)), data.draw(x_unit(p, N))
    assert x_exp(p, N, [a + b for a, b in zip(x_dlog(u), x_dlog(v))]) == u * v


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_leading_term_never_contradicts_exact(data):
    p, N = 2, 16
    us = [data.draw(x_unit(p, N)) for _ in range(3)]
    if any(u.is_one() for u in us):
        return
    if leading_term_independent(us).passed:
        assert exact_finite_independent(us).passed


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_order_divides_exponent(data):
    u = data.draw(x_unit(2, 32))
    assert 32 % element_order(u) == 0


@given(st.integers(1, 200), st.integers(1, 200))
def test_psi_multiplicative_on_mu(i, j):
    if i % 7 == 0 or j % 7 == 0:
        return
    assert psi(mu(7, 2, i) * mu(7, 2, j)) == (i * j) % 7


@settings(max_examples=50)
@given(st.lists(small, min_size=9, max_size=9))
def test_diagram_on_random_elements(coeffs):
    assert diagram_commutes(GroupRingElem(9, 0, tuple(coeffs)), 3)


@given(st.lists(small, min_size=6, max_size=6), st.lists(small, min_size=6, max_size=6))
def test_cycint_ring(a, b):
    x, y = CycInt(3, 2, tuple(a)), CycInt(3, 2, tuple(b))
    assert x * y == y * x
    assert (x + y) - y == x
