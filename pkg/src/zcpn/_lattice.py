"""Exact integer lattice helpers: Hermite normal form and Smith form over Z/p^E."""

from __future__ import annotations

from typing import Sequence


def _vsub(a: list[int], b: list[int], q: int) -> None:
    for j, bj in enumerate(b):
        if bj:
            a[j] -= q * bj


def hnf(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Zero rows are dropped; pivots are positive and entries above a pivot are
    reduced into ``[0, pivot)``.
    """
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    ncols = len(A[0])
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(A)) if A[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[piv] = A[piv], A[r]
            clean = True
            for i in range(r + 1, len(A)):
                if A[i][c]:
                    _vsub(A[i], A[r], A[i][c] // A[r][c])
                    if A[i][c]:
                        clean = False
            if clean:
                break
        if r < len(A) and A[r][c]:
            if A[r][c] < 0:
                A[r] = [-x for x in A[r]]
            for i in range(r):
                q = A[i][c] // A[r][c]
                if q:
                    _vsub(A[i], A[r], q)
            r += 1
            if r == len(A):
                break
    return [row for row in A[:r] if any(row)]


def solve_in_lattice(basis: Sequence[Sequence[int]], vec: Sequence[int]) -> list[int] | None:
    """Coefficients ``c`` with ``sum c_i basis_i == vec``, or None.

    ``basis`` must be in Hermite normal form (output of :func:`hnf`).
    """
    rest = list(vec)
    coeffs = []
    for row in basis:
        c = next(j for j, x in enumerate(row) if x)
        q, rem = divmod(rest[c], row[c])
        if rem:
            return None
        coeffs.append(q)
        if q:
            _vsub(rest, list(row), q)
    if any(rest):
        return None
    return coeffs


def pvaluation(a: int, p: int, cap: int) -> int:
    """p-adic valuation of ``a`` as an element of Z/p^cap (``cap`` for zero)."""
    if a == 0:
        return cap
    v = 0
    while a % p == 0 and v < cap:
        a //= p
        v += 1
    return v


def chain_smith(rows: Sequence[Sequence[int]], p: int, E: int):
    """Smith-style elimination of ``rows`` over the chain ring Z/p^E.

    Returns ``(pivots, T)`` where ``T`` is an invertible k x k transform with
    ``T @ rows`` in echelon form, and ``pivots`` lists ``(row_index, valuation)``
    for each nonzero pivot row.  Pivoting is full (minimal valuation over the
    remaining block), so every entry of a pivot row is divisible by p^v.  The submodule spanned by ``rows`` has order
    ``prod(p^(E - v))`` and the rows of ``T`` with index not among the pivots
    (plus ``p^(E-v) * T[row]`` for pivots) generate all relations.
    """
    mod = p**E
    k = len(rows)
    A = [[x % mod for x in r] for r in rows]
    T = [[int(i == j) for j in range(k)] for i in range(k)]
    ncols = len(A[0]) if A else 0
    pivots = []
    done_cols: set[int] = set()
    for r in range(k):
        best = None
        for i in range(r, k):
            for c in range(ncols):
                if c in done_cols or not A[i][c]:
                    continue
                v = pvaluation(A[i][c], p, E)
                if best is None or v < best[0]:
                    best = (v, i, c)
                    if v == 0:
                        break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        v, i, c = best
        A[r], A[i] = A[i], A[r]
        T[r], T[i] = T[i], T[r]
        unit = A[r][c] // p**v
        uinv = pow(unit, -1, mod)
        A[r] = [(x * uinv) % mod for x in A[r]]
        T[r] = [(x * uinv) % mod for x in T[r]]
        pv = p**v
        for j in range(r + 1, k):
            if A[j][c]:
                f = A[j][c] // pv
                A[j] = [(a - f * b) % mod for a, b in zip(A[j], A[r])]
                T[j] = [(a - f * b) % mod for a, b in zip(T[j], T[r])]
        done_cols.add(c)
        pivots.append((r, v))
    return pivots, T
