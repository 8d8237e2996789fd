"""Level-by-level assembly of the unit group of ZC_{p^n}.

A level table lists generators of the free part U_2(ZC_{p^(n-1)}) (the
symmetric units when p is odd).  From it we compute the image of f1, the
kernel of f1 on the table's group, lift that kernel into ZC_{p^n}, and
combine it with the Hoechsmann units of the current level.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import _lattice
from .cyclotomic import DEFAULT_PRECISION, CycInt, h_unit, log_abs_values, mu, numerical_rank
from .errors import ContextError, ScopeError, StructuralError
from .independence import (
    Certificate,
    coordinate_layout,
    exact_finite_independent,
    higman_rank_cyclic,
    is_member,
    leading_term_basis,
    leading_term_independent,
    log_rank_independent,
    subgroup_structure,
    x_dlog,
)
from .maps import KernelElem, f1_x, f2_x, ker_pi1_parametrize, lift_kernel, pi1, pi2
from .ring import GroupRingElem, XAdicElem, is_u2
from .units import PrimePowerCtx, check_scope, hoechsmann_unit, make_ctx, split_group_element, varpi

FORMAT = 1
CASES_ENV = "ZCPN_CASES_DIR"


@dataclass
class LevelTable:
    """Generators (with inverses) of the free part of U_1(ZC_{p^level})."""

    p: int
    level: int
    gens: list[GroupRingElem]
    inverses: list[GroupRingElem]
    source: str

    @property
    def m(self) -> int:
        return self.p**self.level

    def to_json(self) -> dict:
        return {
            "format": FORMAT,
            "p": self.p,
            "level": self.level,
            "source": self.source,
            "gens": [u.to_json() for u in self.gens],
            "inverses": [u.to_json() for u in self.inverses],
        }

    @classmethod
    def from_json(cls, d: dict) -> LevelTable:
        if d.get("format") != FORMAT:
            raise ContextError(f"unsupported table format {d.get('format')!r}")
        return cls(
            int(d["p"]),
            int(d["level"]),
            [GroupRingElem.from_json(u) for u in d["gens"]],
            [GroupRingElem.from_json(u) for u in d["inverses"]],
            d["source"],
        )

    def validate(self) -> None:
        for i, (u, v) in enumerate(zip(self.gens, self.inverses, strict=True)):
            if u.m != self.m or not (u * v).is_one():
                raise StructuralError(f"table entry {i} for C_{self.m} is not a certified unit")
            if u.augmentation() != 1 or not is_u2(u):
                raise StructuralError(f"table entry {i} for C_{self.m} is not in U_2")
            if self.p != 2 and u.involution() != u:
                raise StructuralError(f"table entry {i} for C_{self.m} is not symmetric")
        expected = higman_rank_cyclic(self.m) if self.m > 2 else 0
        if len(self.gens) != expected:
            raise StructuralError(f"table for C_{self.m} has {len(self.gens)} entries, rank is {expected}")


# -- base tables ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _base_data() -> dict:
    text = resources.files("zcpn").joinpath("data/base_tables.json").read_text()
    data = json.loads(text)
    if data.get("format") != FORMAT:
        raise ContextError("base table file has an unsupported format")
    return data


def _table_from_gens(p: int, level: int, gens: Sequence[GroupRingElem], source: str) -> LevelTable:
    inverses = []
    for u in gens:
        inv = u.inverse()
        if inv is None:
            raise StructuralError(f"base generator {u} is not a unit")
        inverses.append(inv)
    table = LevelTable(p, level, list(gens), inverses, source)
    table.validate()
    return table


def prime_table_gens(p: int) -> list[GroupRingElem]:
    """U_2-parts of the Hoechsmann units of ZC_p."""
    if p == 2:
        return []
    ctx = make_ctx(p, 1)
    return [split_group_element(hoechsmann_unit(ctx, i))[1] for i in range(1, ctx.kappa + 1)]


def base_table(p: int, level: int) -> LevelTable | None:
    """Shipped table for C_{p^level}, if any."""
    if p == 2 and level <= 2:
        return LevelTable(2, level, [], [], "trivial")
    data = _base_data()
    if p == 3 and level == 1:
        return LevelTable(3, 1, [], [], "trivial")
    if level == 1 and str(p) in data["primes"]:
        gens = [GroupRingElem.from_json({"m": p, "char": 0, "coeffs": c}) for c in data["primes"][str(p)]]
        return _table_from_gens(p, 1, gens, "base-prime")
    if (p, level) == (3, 2):
        gens = [GroupRingElem.from_json({"m": 9, "char": 0, "coeffs": c}) for c in data["zc9"]]
        return _table_from_gens(3, 2, gens, "shipped-base-case")
    return None


_TABLES: dict[tuple[int, int], LevelTable] = {}


def level_table(p: int, level: int) -> LevelTable:
    """Table for C_{p^level}: shipped, or computed from the level below."""
    key = (p, level)
    if key not in _TABLES:
        table = base_table(p, level)
        if table is None:
            table = assemble(make_ctx(p, level)).next_table
        _TABLES[key] = table
    return _TABLES[key]


def table_for(ctx: PrimePowerCtx) -> LevelTable:
    """The table one level below ctx."""
    if ctx.n < 2:
        raise ContextError("the kernel pipeline needs n >= 2")
    return level_table(ctx.p, ctx.n - 1)


# -- image of f1 ------------------------------------------------------------------


def image_basis(table: LevelTable) -> tuple[list[XAdicElem], int]:
    """Independent generators of f1(<table>) with distinct leading q-parts, and its order."""
    images = [f1_x(u, table.p) for u in table.gens]
    if not images:
        return [], 1
    basis, _ = leading_term_basis(images)
    order, _ = subgroup_structure(images)
    cert = exact_finite_independent(basis) if basis else None
    if basis and not leading_term_independent(basis).passed:
        raise StructuralError("leading-term reduction left clashing q-parts")
    size = 1
    for o in cert.witness["orders"]:
        size *= o
    if not cert.passed or size != order:
        raise StructuralError(f"image basis does not generate f1(table): {size} vs {order}")
    return basis, size


# -- kernel of f1 and its lift ----------------------------------------------------


@dataclass
class KernelData:
    vs: list[GroupRingElem]
    v_inverses: list[GroupRingElem]
    exponents: list[tuple[int, list[int]]]
    index: int
    image_size: int


def _kernel_lattice(p: int, images: Sequence[XAdicElem]) -> list[list[int]]:
    """HNF basis of {c : prod images^c = 1}, with the h-coordinate last."""
    k = len(images)
    N = images[0].m
    layout = coordinate_layout(p, N)
    E = max(e for _, e in layout)
    rows = [[c * p ** (E - e) for c, (_, e) in zip(x_dlog(u), layout)] for u in images]
    pivots, T = _lattice.chain_smith(rows, p, E)
    gens = []
    pivot_rows = set()
    for r, v in pivots:
        pivot_rows.add(r)
        gens.append([p ** (E - v) * x for x in T[r]])
    gens += [list(T[r]) for r in range(k) if r not in pivot_rows]
    gens += [[p**E * int(i == j) for j in range(k)] for i in range(k)]
    return _lattice.hnf(gens)


def _balanced(rows: list[list[int]]) -> list[list[int]]:
    """Shrink entries above the pivots into (-d/2, d/2]."""
    rows = [list(r) for r in rows]
    for r, row in enumerate(rows):
        c = next(j for j, x in enumerate(row) if x)
        d = row[c]
        for i in range(r):
            q = (rows[i][c] + d // 2) // d
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], row)]
    return rows


def kernel_gens_mod_p(table: LevelTable) -> KernelData:
    """Generators of ker(f1) on <h> x <table>, as elements of ZC_{p^(n-1)}."""
    p, m = table.p, table.m
    r = len(table.gens)
    if r == 0:
        return KernelData([], [], [], 1, 1)
    h = GroupRingElem.g(m)
    images = [f1_x(u, p) for u in table.gens] + [f1_x(h, p)]
    lattice = _balanced(_kernel_lattice(p, images))
    if len(lattice) != r + 1 or any(row[i] == 0 for i, row in enumerate(lattice[:r])):
        raise StructuralError("kernel lattice does not have full rank in the table coordinates")
    vs, invs, exps = [], [], []
    for row in lattice[:r]:
        c, j = row[:r], row[r] % m
        if p != 2 and j:
            raise StructuralError("a kernel element of f1 needs a nontrivial group part for odd p")
        v = h**j * _word(table.gens, table.inverses, c, m)
        v_inv = h ** ((-j) % m) * _word(table.inverses, table.gens, c, m)
        if not (v * v_inv).is_one() or not f1_x(v, p).is_one():
            raise StructuralError("kernel generator failed exact verification")
        vs.append(v)
        invs.append(v_inv)
        exps.append((j, c))
    index = 1
    for i, row in enumerate(lattice[:r]):
        index *= row[i]
    order_with_h, _ = subgroup_structure(images)
    # [Z^r : L] = |f1(<h, table>)| / |f1(<h>)|
    image_size = order_with_h // m
    if index != image_size:
        raise StructuralError(f"kernel index {index} differs from image size {image_size}")
    return KernelData(vs, invs, exps, index, image_size)


def _word(gens, inverses, exps, m) -> GroupRingElem:
    out = GroupRingElem.one(m)
    for u, ui, e in zip(gens, inverses, exps):
        if e > 0:
            out = out * u**e
        elif e < 0:
            out = out * ui ** (-e)
    return out


def lift_to_integral_kernel(v: GroupRingElem, p: int) -> KernelElem:
    """w in 1 + ker(pi1) with pi2(w) = v."""
    return lift_kernel(v, p)


# -- the hypothesis on mu_t ---------------------------------------------------------


def hypothesis_element(ctx: PrimePowerCtx) -> XAdicElem | None:
    """1 - (-1)^p lambda x^(p^(n-1) - 1) in F_p C_{p^(n-1)}, or None when lambda is not integral."""
    lam = ctx.lam
    if lam is None:
        return None
    mp = ctx.p ** (ctx.n - 1)
    return XAdicElem.from_terms(ctx.p, mp, {0: 1, mp - 1: -ctx.sign * lam})


def hypothesis_unit(ctx: PrimePowerCtx) -> CycInt:
    """(-1)^p mu_t^(phi(p^n)/(2p)) in Z[theta]."""
    v = mu(ctx.p, ctx.n, ctx.t) ** (ctx.phi // (2 * ctx.p))
    return v if ctx.sign == 1 else -v


def hypothesis_check(ctx: PrimePowerCtx, table: LevelTable | None = None) -> Certificate:
    if ctx.n < 2:
        raise ContextError("the hypothesis concerns n >= 2")
    table = table or table_for(ctx)
    basis, size = image_basis(table)
    p, mp = ctx.p, ctx.p ** (ctx.n - 1)
    full = basis + [f1_x(GroupRingElem.g(mp), p)]
    v_bar = f2_x(hypothesis_unit(ctx))
    e = hypothesis_element(ctx)
    witness = {
        "lambda": ctx.lam,
        "basis": [b.to_json() for b in basis],
        "image_size": size,
        "f2_v": v_bar.to_json(),
        "f2_v_outside_image": not is_member(v_bar, basis),
        "f2_v_outside_full_image": not is_member(v_bar, full),
    }
    inputs = [b.digest() for b in basis]
    if e is not None:
        pi, _ = varpi(ctx)
        pi_bar = f1_x(pi, p)
        witness["varpi_factorization"] = pi_bar == v_bar * e
        if not witness["varpi_factorization"]:
            raise StructuralError(f"f1(varpi) != f2(v) * e for {ctx}")
        witness["e"] = e.to_json()
        inputs.append(e.digest())
    if e is None or e.is_one():
        # no usable e: decide membership of f2(v) directly
        witness["route"] = "direct"
        verdict = "holds" if witness["f2_v_outside_image"] else "indeterminate"
        return Certificate("hypothesis", inputs, verdict, witness)
    witness["route"] = "e"
    cert = exact_finite_independent(basis + [e])
    witness["independence"] = cert.to_json()
    witness["independent_of_full_image"] = exact_finite_independent(full + [e]).passed
    lt = leading_term_independent(basis + [e])
    witness["leading_term"] = lt.verdict
    verdict = "holds" if cert.passed else "indeterminate"
    return Certificate("hypothesis", inputs, verdict, witness)


# -- assembly -------------------------------------------------------------------------


@dataclass
class AssemblyResult:
    ctx: PrimePowerCtx
    torsion: str
    hoechsmann_part: list[GroupRingElem]
    hoechsmann_inverses: list[GroupRingElem]
    kernel_part: list[GroupRingElem]
    kernel_elems: list[KernelElem]
    kernel_inverses: list[GroupRingElem]
    hypothesis_cert: Certificate | None
    total_rank: int
    certificates: list[Certificate] = field(default_factory=list)
    next_table: LevelTable | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.certificates) and (
            self.hypothesis_cert is None or self.hypothesis_cert.passed
        )

    def symmetric_parts(self) -> list[tuple[int, GroupRingElem]]:
        return [split_group_element(u) for u in self.hoechsmann_part[1:]]

    def to_json(self) -> dict:
        return {
            "format": FORMAT,
            "p": self.ctx.p,
            "n": self.ctx.n,
            "t": self.ctx.t,
            "torsion": self.torsion,
            "hoechsmann_part": [u.to_json() for u in self.hoechsmann_part],
            "hoechsmann_inverses": [u.to_json() for u in self.hoechsmann_inverses],
            "kernel_part": [w.to_json() for w in self.kernel_elems],
            "kernel_inverses": [u.to_json() for u in self.kernel_inverses],
            "hypothesis": self.hypothesis_cert.to_json() if self.hypothesis_cert else None,
            "total_rank": self.total_rank,
            "certificates": [c.to_json() for c in self.certificates],
        }


def _unit_cert(label: str, u: GroupRingElem, inv: GroupRingElem | None) -> Certificate:
    ok = inv is not None and (u * inv).is_one()
    return Certificate("unit", [u.digest()], "pass" if ok else "fail", {"name": label})


def _index_cert(kd: KernelData, table: LevelTable) -> Certificate:
    return Certificate(
        "index-count",
        [u.digest() for u in table.gens],
        "pass" if kd.index == kd.image_size else "fail",
        {"index": kd.index, "image_size": kd.image_size, "kernel_exponents": [[j, c] for j, c in kd.exponents]},
    )


_RESULTS: dict[tuple[int, int, int], AssemblyResult] = {}


def assemble(ctx: PrimePowerCtx, precision: int = DEFAULT_PRECISION) -> AssemblyResult:
    key = (ctx.p, ctx.n, ctx.t)
    if key in _RESULTS:
        return _RESULTS[key]
    check_scope(ctx)
    p, n, m = ctx.p, ctx.n, ctx.m
    certs: list[Certificate] = []
    thetas = [hoechsmann_unit(ctx, i) for i in range(1, ctx.kappa + 1)]
    theta_invs = []
    for i, u in enumerate(thetas, 1):
        inv = u.inverse()
        certs.append(_unit_cert(f"vartheta_{i}", u, inv))
        if pi1(u, p) != h_unit(ctx, i):
            raise StructuralError(f"pi1(vartheta_{i}) != h_{i} for {ctx}")
        theta_invs.append(inv)
    if thetas:
        certs.append(log_rank_independent([h_unit(ctx, i) for i in range(1, ctx.kappa + 1)], precision))

    hyp = None
    ws: list[GroupRingElem] = []
    kelems: list[KernelElem] = []
    w_invs: list[GroupRingElem] = []
    if n >= 2:
        table = table_for(ctx)
        hyp = hypothesis_check(ctx, table)
        kd = kernel_gens_mod_p(table)
        certs.append(_index_cert(kd, table))
        for i, (v, v_inv) in enumerate(zip(kd.vs, kd.v_inverses), 1):
            ke = lift_to_integral_kernel(v, p)
            w = ke.expand()
            w_inv = lift_kernel(v_inv, p).expand()
            certs.append(_unit_cert(f"w_{i}", w, w_inv))
            if not pi1(w, p).is_one() or pi2(w, p) != v or ker_pi1_parametrize(w, p) != ke:
                raise StructuralError(f"lifted kernel element w_{i} fails its defining identities")
            if p != 2 and w.involution() != w:
                raise StructuralError(f"kernel element w_{i} is not symmetric")
            if p == 2 and not _symmetric_up_to_involution(w):
                raise StructuralError(f"kernel element w_{i} is neither symmetric nor g^(m/2)-symmetric")
            kelems.append(ke)
            ws.append(w)
            w_invs.append(w_inv)

    total = len(thetas) + len(ws)
    expected = higman_rank_cyclic(m)
    certs.append(
        Certificate("index-count", [], "pass" if total == expected else "fail", {"total_rank": total, "higman_rank": expected})
    )
    if total != expected:
        raise StructuralError(f"rank {total} differs from the Higman rank {expected} for {ctx}")

    next_gens, next_invs = [], []
    for u, inv in list(zip(thetas, theta_invs)) + list(zip(ws, w_invs)):
        e, u2 = split_group_element(u)
        next_gens.append(u2)
        next_invs.append(inv.shift(e))
    next_table = LevelTable(p, n, next_gens, next_invs, "computed-previous-level")
    next_table.validate()

    result = AssemblyResult(
        ctx,
        f"+-C_{m}",
        [GroupRingElem.g(m)] + thetas,
        [GroupRingElem.g(m, -1)] + theta_invs,
        ws,
        kelems,
        w_invs,
        hyp,
        total,
        certs,
        next_table,
    )
    _RESULTS[key] = result
    return result


def _symmetric_up_to_involution(w: GroupRingElem) -> bool:
    if w.involution() == w:
        return True
    half = w.shift(w.m // 2)
    return half.involution() == half


# -- decomposition of units into the generators -----------------------------------------


def _solve_exponents(target: Sequence, rows: Sequence[Sequence], precision: int) -> list[int]:
    """Round the least-squares solution of sum x_i rows_i = target."""
    import mpmath

    if not rows:
        return []
    ctx = mpmath.MPContext()
    ctx.prec = precision
    A = ctx.matrix([[ctx.mpf(x) for x in r] for r in rows]).T
    b = ctx.matrix([ctx.mpf(x) for x in target])
    x = ctx.lu_solve(A.T * A, A.T * b)
    return [int(ctx.nint(x[i])) for i in range(len(rows))]


def _log_vector(u: GroupRingElem, reps, precision) -> list:
    bits = max((abs(c).bit_length() for c in u.coeffs), default=0)
    return list(log_abs_values(u.coeffs, u.m, reps, precision + 2 * bits).entries)


def decompose(u: GroupRingElem, result: AssemblyResult, precision: int = DEFAULT_PRECISION):
    """Exponents (a, b, c) with u = g^a * prod vartheta_i^b_i * prod w_j^c_j, or None.

    u must be a normalized unit.  The exponents come from rounding a
    log-embedding solve; the answer is then verified exactly.
    """
    p, m = result.ctx.p, result.ctx.m
    if u.augmentation() != 1:
        raise ContextError("decompose expects a normalized unit")
    thetas = result.hoechsmann_part[1:]
    reps = [a for a in range(1, (m + 1) // 2) if a % p and 2 * a != m]
    rows = [_log_vector(t, reps, precision) for t in thetas]
    b = _solve_exponents(_log_vector(u, reps, precision), rows, precision)
    z = u * _word(thetas, result.hoechsmann_inverses[1:], [-x for x in b], m)
    # what is left maps to a root of unity under pi1
    a = next((a for a in range(m) if pi1(z.shift(-a), p).is_one()), None)
    if a is None:
        return None
    z = z.shift(-a)
    c: list[int] = []
    if result.kernel_part:
        mp = m // p
        reps2 = [a2 for a2 in range(1, (mp + 1) // 2) if 2 * a2 != mp]
        vs = [pi2(w, p) for w in result.kernel_part]
        rows2 = [_log_vector(v, reps2, precision) for v in vs]
        c = _solve_exponents(_log_vector(pi2(z, p), reps2, precision), rows2, precision)
        z = z * _word(result.kernel_part, result.kernel_inverses, [-x for x in c], m)
    if not z.is_one():
        return None
    return a, b, c


# -- persistence ------------------------------------------------------------------------


def default_cases_dir() -> Path:
    return Path(os.environ.get(CASES_ENV, "cases"))


def case_path(ctx: PrimePowerCtx, cases_dir: Path | None = None) -> Path:
    return Path(cases_dir or default_cases_dir()) / f"p{ctx.p}n{ctx.n}.json"


def save_result(result: AssemblyResult, cases_dir: Path | None = None) -> Path:
    path = case_path(result.ctx, cases_dir)
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = result.to_json()
    if result.next_table is not None:
        doc["table"] = result.next_table.to_json()
    path.write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")
    return path


def verify_document(doc: dict) -> list[str]:
    """Re-check a saved assembly; returns a list of problems (empty when all pass)."""
    problems = []
    if doc.get("format") != FORMAT:
        return [f"format: expected {FORMAT}, found {doc.get('format')!r}"]
    p, n = int(doc["p"]), int(doc["n"])
    m = p**n
    try:
        ctx = make_ctx(p, n, doc.get("t"))
    except (ContextError, ScopeError) as exc:
        return [f"context: {exc}"]
    hs = [GroupRingElem.from_json(d) for d in doc["hoechsmann_part"]]
    his = [GroupRingElem.from_json(d) for d in doc["hoechsmann_inverses"]]
    if len(hs) != len(his):
        problems.append("hoechsmann_part: inverse count mismatch")
    for i, (u, v) in enumerate(zip(hs, his)):
        if not (u * v).is_one():
            problems.append(f"hoechsmann_part[{i}]: product with stored inverse is not 1")
        if i and u != hoechsmann_unit(ctx, i):
            problems.append(f"hoechsmann_part[{i}]: differs from the recomputed unit")
    ks = [KernelElem.from_json(d) for d in doc["kernel_part"]]
    kis = [GroupRingElem.from_json(d) for d in doc["kernel_inverses"]]
    if len(ks) != len(kis):
        problems.append("kernel_part: inverse count mismatch")
    for i, (k, v) in enumerate(zip(ks, kis)):
        w = k.expand()
        if not (w * v).is_one():
            problems.append(f"kernel_part[{i}]: product with stored inverse is not 1")
        if not pi1(w, p).is_one():
            problems.append(f"kernel_part[{i}]: not in the kernel of pi1")
    total = (len(hs) - 1) + len(ks)
    if total != int(doc["total_rank"]) or total != higman_rank_cyclic(m):
        problems.append(f"total_rank: {doc['total_rank']} vs generators {total} vs Higman {higman_rank_cyclic(m)}")
    hyp = doc.get("hypothesis")
    if n >= 2:
        if not hyp or hyp.get("verdict") != "holds":
            problems.append("hypothesis: verdict is not 'holds'")
        else:
            basis = [XAdicElem.from_json(d) for d in hyp["witness"]["basis"]]
            if "e" in hyp["witness"]:
                e = XAdicElem.from_json(hyp["witness"]["e"])
                if e != hypothesis_element(ctx):
                    problems.append("hypothesis: stored e differs from the recomputed element")
                if not exact_finite_independent(basis + [e]).passed:
                    problems.append("hypothesis: e is not independent of the stored basis")
    for i, c in enumerate(doc.get("certificates", [])):
        if c.get("verdict") not in ("pass", "independent", "holds"):
            problems.append(f"certificates[{i}] ({c.get('kind')}): verdict {c.get('verdict')}")
    return problems


def image_rank_check(ctx: PrimePowerCtx, precision: int = DEFAULT_PRECISION) -> Certificate:
    """Log-rank of the pi1-images h_i (the vartheta-part) at two precisions."""
    return log_rank_independent([h_unit(ctx, i) for i in range(1, ctx.kappa + 1)], precision)


def global_rank(result: AssemblyResult, precision: int = DEFAULT_PRECISION) -> tuple[int, int]:
    """Rank of log|chi(u)| over characters of C_m for all free generators, at two precisions."""
    gens = result.hoechsmann_part[1:] + result.kernel_part
    m = result.ctx.m
    reps = [a for a in range(1, (m + 1) // 2) if 2 * a != m]
    ranks = []
    for prec in (precision, 2 * precision):
        rows = [_log_vector(u, reps, prec) for u in gens]
        ranks.append(numerical_rank(rows, prec))
    return ranks[0], ranks[1]


def clear_caches() -> None:
    """Forget computed tables and assemblies (used for timing runs)."""
    from .cyclotomic import _mu_t_inverse

    _RESULTS.clear()
    _TABLES.clear()
    _mu_t_inverse.cache_clear()
