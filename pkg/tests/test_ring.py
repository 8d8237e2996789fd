import itertools
import json

import pytest

from oracles import circulant_inverse, from_x_terms
from zcpn.errors import ContextError, NotAUnitError
from zcpn.ring import (
    GroupRingElem,
    XAdicElem,
    augmentation,
    from_x_basis,
    gr_add,
    gr_inverse,
    gr_mul,
    gr_pow,
    in_delta_squared,
    involution,
    is_normalized,
    is_symmetric,
    is_u2,
    to_x_basis,
)

U1 = GroupRingElem(9, 0, (-1, 1, -1, 1, 0, 0, 1, -1, 1))
U2 = GroupRingElem(9, 0, (1, -1, 1, 0, 0, 0, 0, 1, -1))
THETA1 = GroupRingElem(9, 0, (0, 0, 1, -1, 1, -1, 1, -1, 1))


def gr(coeffs, char=0):
    return GroupRingElem(len(coeffs), char, tuple(coeffs))


def test_add_cancels():
    assert gr_add(gr([1, 1, 0]), gr([1, -1, 0])) == gr([2, 0, 0])
    hat = GroupRingElem.hat(9)
    assert hat + hat == hat.scale(2)


def test_add_mod_p_through_x_basis():
    a = XAdicElem.from_terms(3, 9, {0: 1, 4: 2})
    b = XAdicElem.from_terms(3, 9, {0: 1, 4: 1})
    total = gr_add(from_x_basis(a), from_x_basis(b))
    assert to_x_basis(total) == XAdicElem.from_terms(3, 9, {0: 2})


def test_mul_hoechsmann_display():
    left = GroupRingElem.from_terms(9, {0: 1, 2: 1, 4: 1, 6: 1, 8: 1})
    right = GroupRingElem.from_terms(9, {0: 1, 2: 1})
    assert gr_mul(left, right) - GroupRingElem.hat(9) == THETA1


def test_mul_small_cases():
    g = GroupRingElem.g(9)
    assert GroupRingElem.hat(9) * g == GroupRingElem.hat(9)
    a = gr([1, 1, 0, 0])
    assert a * a == gr([1, 2, 1, 0])


def test_context_mismatch():
    with pytest.raises(ContextError):
        gr([1, 0, 0]) + gr([1, 0, 0, 0])
    with pytest.raises(ContextError):
        gr([1, 0, 0]) * gr([1, 0, 0], 3)


def test_mod_p_storage_is_reduced():
    a = gr([5, -1, 7], 3)
    assert a.coeffs == (2, 2, 1)


def test_involution():
    assert involution(U1) == U1
    assert involution(GroupRingElem.g(9)) == GroupRingElem.g(9, 8)
    assert involution(GroupRingElem.hat(9)) == GroupRingElem.hat(9)


def test_augmentation():
    assert augmentation(GroupRingElem.hat(9)) == 9
    assert augmentation(THETA1) == 1
    assert augmentation(GroupRingElem.g(9) - GroupRingElem.one(9)) == 0


def test_inverse_matches_circulant_solve():
    inv = gr_inverse(THETA1)
    assert inv is not None
    assert list(inv.coeffs) == circulant_inverse(list(THETA1.coeffs))
    assert (THETA1 * inv).is_one()


def test_inverse_of_non_unit():
    assert gr_inverse(GroupRingElem.hat(9)) is None
    assert circulant_inverse(list(GroupRingElem.hat(9).coeffs)) is None
    assert gr_inverse(gr([2, 0, 0])) is None
    with pytest.raises(NotAUnitError):
        GroupRingElem.hat(9) ** -1


def test_inverse_mod_p():
    a = gr([1, 1, 0, 0, 0, 0, 0, 0, 0], 3)
    inv = a.inverse()
    assert (a * inv).is_one()
    assert GroupRingElem.hat(9, 3).inverse() is None


def test_pow_cubes():
    expected1 = [3 * a for a in (-12, 11, -9, 6, -2, -2, 6, -9, 11)]
    expected1[0] += 1
    expected2 = [3 * a for a in (6, -6, 5, -3, 1, 1, -3, 5, -6)]
    expected2[0] += 1
    assert gr_pow(U1, 3) == gr(expected1)
    assert gr_pow(U2, 3) == gr(expected2)
    assert gr_pow(GroupRingElem.g(9), 9).is_one()
    assert gr_pow(U1, 0).is_one()
    assert (U1**-2) * U1**2 == GroupRingElem.one(9)


def test_x_basis_images():
    assert to_x_basis(U1.reduce(3)) == XAdicElem(3, 9, (1, 0, 0, 0, 2, 2, 1, 1, 1))
    assert to_x_basis(U2.reduce(3)) == XAdicElem(3, 9, (1, 0, 0, 0, 1, 1, 0, 2, 2))
    assert to_x_basis(GroupRingElem.one(9, 3)).terms == (1,) + (0,) * 8


@pytest.mark.parametrize("p,m", [(2, 2), (2, 4), (3, 3), (2, 8)])
def test_x_basis_roundtrip_exhaustive(p, m):
    for coeffs in itertools.product(range(p), repeat=m):
        a = GroupRingElem(m, p, coeffs)
        x = to_x_basis(a)
        assert from_x_basis(x) == a
        assert from_x_terms(x.terms, p) == a.coeffs


def test_x_basis_roundtrip_nine_by_oracle():
    for coeffs in itertools.islice(itertools.product(range(3), repeat=9), 0, 19683, 37):
        a = GroupRingElem(9, 3, coeffs)
        assert from_x_terms(to_x_basis(a).terms, 3) == a.coeffs


def test_x_basis_wrong_modulus():
    with pytest.raises(ContextError):
        to_x_basis(GroupRingElem.one(6, 3))
    with pytest.raises(ContextError):
        to_x_basis(GroupRingElem.one(9))


def test_x_nilpotent():
    x = XAdicElem.from_terms(3, 9, {1: 1})
    assert not any((x**9).terms)
    assert any((x**8).terms)


def test_frobenius_on_leading_term():
    u = XAdicElem.from_terms(3, 9, {0: 1, 2: 2, 5: 1})
    assert u**3 == XAdicElem.from_terms(3, 9, {0: 1, 6: 2})


def test_predicates():
    assert is_symmetric(U2)
    assert not is_symmetric(GroupRingElem.g(9))
    assert is_normalized(U1)
    d = GroupRingElem.g(9) - GroupRingElem.one(9)
    arbitrary = gr([3, -1, 4, 1, -5, 9, 2, -6, 5])
    assert is_u2(GroupRingElem.one(9) + d * d * arbitrary)
    assert not is_u2(GroupRingElem.g(9))
    assert in_delta_squared(d * d)
    assert not in_delta_squared(d)


def test_text_and_json():
    assert U1.to_text() == "-1 + g - g^2 + g^3 + g^6 - g^7 + g^8"
    assert U1.to_json() == {"m": 9, "char": 0, "coeffs": [-1, 1, -1, 1, 0, 0, 1, -1, 1]}
    assert GroupRingElem.from_json(json.loads(json.dumps(U1.to_json()))) == U1
    assert str(XAdicElem(3, 9, (1, 0, 0, 0, 2, 2, 1, 1, 1))) == "1 + 2x^4 + 2x^5 + x^6 + x^7 + x^8"
    assert XAdicElem.from_json(XAdicElem.one(3, 9).to_json()) == XAdicElem.one(3, 9)
    assert U1.digest() != U2.digest()
