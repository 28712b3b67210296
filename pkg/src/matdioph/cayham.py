"""Companion matrices and the two-variable Cayley-Hamilton identity.

For a homogeneous f(x, y) = sum a_k x**k y**(n-k) that is monic in x, with
companion matrix A, the matrices

    M1 = r*A + s*det(A)*I      M2 = r*I + s*adj(A)

satisfy f(M1, M2) = 0 for every pair of integers r, s.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import bigmatrix as bm
from .bigmatrix import BigMat
from .errors import DimensionError, NotMonic, ZeroDegree
from .homopoly import HomoPoly
from .reports import VerifyReport

__all__ = [
    "GchInstance",
    "normalize_sign",
    "companion",
    "gch_matrices",
    "gch_eval",
    "gch_check",
]


def normalize_sign(poly: HomoPoly) -> HomoPoly:
    """Return ``poly`` made monic in x by a global sign flip, or raise."""
    if poly.is_zero or poly.degree == 0:
        raise ZeroDegree("polynomial must have degree at least 1")
    if poly.lead_x == 1:
        return poly
    if poly.lead_x == -1:
        return -poly
    raise NotMonic(
        f"leading x-coefficient is {poly.lead_x}; an integer companion matrix "
        "needs it to be +1 or -1"
    )


def companion(poly: HomoPoly) -> BigMat:
    """Companion matrix of ``poly(x, 1)``: ones below the diagonal, last column
    ``[-a_0, ..., -a_{n-1}]``."""
    poly = normalize_sign(poly)
    n = poly.degree
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = -poly.coeffs[i]
    return BigMat(rows)


@dataclass(frozen=True)
class GchInstance:
    poly: HomoPoly
    companion: BigMat
    r: int
    s: int

    @classmethod
    def build(cls, poly: HomoPoly, r: int, s: int) -> GchInstance:
        poly = normalize_sign(poly)
        return cls(poly, companion(poly), r, s)


def gch_matrices(inst: GchInstance) -> tuple[BigMat, BigMat]:
    a = inst.companion
    eye = bm.identity(a.dim)
    m1 = bm.add(bm.scalar_mul(inst.r, a), bm.scalar_mul(inst.s * bm.det(a), eye))
    m2 = bm.add(bm.scalar_mul(inst.r, eye), bm.scalar_mul(inst.s, bm.adjugate(a)))
    return m1, m2


def _power_table(m: BigMat, top: int) -> list[BigMat]:
    table = [bm.identity(m.dim)]
    for _ in range(top):
        table.append(bm.mul(table[-1], m))
    return table


def gch_eval(poly: HomoPoly, m1: BigMat, m2: BigMat) -> BigMat:
    """``sum a_k * M1**k * M2**(n-k)`` with M1 powers on the left."""
    if m1.dim != m2.dim:
        raise DimensionError(f"dimension mismatch: {m1.dim} vs {m2.dim}")
    n = poly.degree
    p1 = _power_table(m1, n)
    p2 = _power_table(m2, n)
    total = bm.zeros(m1.dim)
    for k, a in enumerate(poly.coeffs):
        if a:
            total = bm.add(total, bm.scalar_mul(a, bm.mul(p1[k], p2[n - k])))
    return total


def gch_check(poly: HomoPoly, r: int, s: int) -> VerifyReport:
    start = time.perf_counter()
    inst = GchInstance.build(poly, r, s)
    m1, m2 = gch_matrices(inst)
    value = gch_eval(inst.poly, m1, m2)
    holds = bm.is_zero(value)
    claim = {
        "statement": f"f(rA + s*det(A)*I, r*I + s*adj(A)) = 0 for f = {inst.poly}",
        "poly": inst.poly.to_json(),
        "r": str(r),
        "s": str(s),
    }
    return VerifyReport(
        claim=claim,
        holds=holds,
        residual=None if holds else value,
        timing_ms=(time.perf_counter() - start) * 1000.0,
    )
