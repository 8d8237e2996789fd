"""Recompute the worked cases C_9 and C_27 and compare with the stored values."""

from __future__ import annotations

from dataclasses import dataclass

from . import fixtures
from .independence import element_order, exact_finite_independent
from .kernel import hypothesis_check, hypothesis_element, image_basis, level_table, lift_to_integral_kernel
from .maps import f1_x
from .ring import GroupRingElem, XAdicElem
from .units import hoechsmann_unit, make_ctx, split_group_element


@dataclass
class Check:
    name: str
    ok: bool
    expected: str
    got: str


def _check(name, expected, got) -> Check:
    return Check(name, expected == got, str(expected), str(got))


def _gr(coeffs) -> GroupRingElem:
    return GroupRingElem(len(coeffs), 0, tuple(coeffs))


def _x(terms, p=3) -> XAdicElem:
    return XAdicElem(p, len(terms), tuple(terms))


def reproduce_zc9() -> list[Check]:
    ctx = make_ctx(3, 2)
    data = fixtures.ZC9
    checks = [_check("t", data["t"], ctx.t)]
    for i in (1, 2):
        u = hoechsmann_unit(ctx, i)
        checks.append(_check(f"vartheta_{i}", _gr(data["vartheta"][i]), u))
        e, sym = split_group_element(u)
        checks.append(_check(f"vartheta_{i} shift", data["shift"][i], e))
        checks.append(_check(f"vartheta_{i}' symmetric factor", _gr(data["symmetric"][i]), sym))
        checks.append(_check(f"vartheta_{i}' is symmetric", True, sym.involution() == sym))
    return checks


def reproduce_zc27() -> list[Check]:
    data = fixtures.ZC27
    us = [_gr(data["u"][i]) for i in (1, 2)]
    checks = []
    images = [f1_x(u, 3) for u in us]
    for i, img in enumerate(images, 1):
        checks.append(_check(f"f1(u_{i})", _x(data["f1_image"][i]), img))
    checks.append(_check("f1(u_1) f1(u_2)", _x(data["f1_product"]), images[0] * images[1]))
    table = level_table(3, 2)
    _, size = image_basis(table)
    orders = [element_order(images[0]), element_order(images[0] * images[1])]
    checks.append(_check("|Im f1|", data["image_order"], size))
    checks.append(_check("orders of the image basis", [3, 3], orders))
    for i, u in enumerate(us, 1):
        cube = u**3
        expected = [3 * a for a in data["a"][i]]
        expected[0] += 1
        checks.append(_check(f"u_{i}^3", _gr(expected), cube))
        ke = lift_to_integral_kernel(cube, 3)
        checks.append(_check(f"w_{i} coefficients", tuple(data["a"][i]), ke.a))
    return checks


def reproduce_hyp27() -> list[Check]:
    ctx = make_ctx(3, 3)
    data = fixtures.HYP27
    checks = [_check("lambda", data["lambda"], ctx.lam)]
    e = hypothesis_element(ctx)
    checks.append(_check("e", _x(data["e"]), e))
    basis = [_x(b) for b in data["basis"]]
    checks.append(_check("e independent of the image basis", "independent", exact_finite_independent(basis + [e]).verdict))
    cert = hypothesis_check(ctx)
    checks.append(_check("image basis", data["basis"], [list(b["x_terms"]) for b in cert.witness["basis"]]))
    checks.append(_check("hypothesis verdict", "holds", cert.verdict))
    return checks


CASES = {"zc9": reproduce_zc9, "zc27": reproduce_zc27, "hyp27": reproduce_hyp27}
