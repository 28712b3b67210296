"""Brute-force checks that do not reuse the constructors' arithmetic.

Matrix products and powers here are computed on plain nested lists with
their own routines, so a bug in :mod:`matdioph.bigmatrix` exponentiation
cannot hide a wrong solution.
"""

from __future__ import annotations

import time

from . import homopoly as hp
from .bigmatrix import BigMat
from .cayham import gch_eval
from .errors import DimensionError
from .homopoly import HomoPoly
from .reports import LemmaReport, VerifyReport

__all__ = [
    "naive_power",
    "verify_equation",
    "is_nontrivial",
    "lemma_scan",
    "verify_gch_term_order",
]

NAIVE_POWER_LIMIT = 64


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(n):
            acc = 0
            for k in range(n):
                acc += ai[k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def _eye(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def naive_power(m: BigMat, e: int) -> list[list[int]]:
    """``m**e`` by iterated multiplication up to 64, square-and-multiply above."""
    a = m.tolist()
    if e <= NAIVE_POWER_LIMIT:
        out = _eye(m.dim)
        for _ in range(e):
            out = _matmul(out, a)
        return out
    # most-significant bit first, unlike bigmatrix.power
    out = _eye(m.dim)
    for bit in bin(e)[2:]:
        out = _matmul(out, out)
        if bit == "1":
            out = _matmul(out, a)
    return out


def verify_equation(x: BigMat, y: BigMat, z: BigMat, n: int, p: int, q: int) -> VerifyReport:
    """Check ``X**n + Y**p == Z**q`` exactly."""
    if not (x.dim == y.dim == z.dim):
        raise DimensionError(f"dimension mismatch: {x.dim}, {y.dim}, {z.dim}")
    for name, v in (("n", n), ("p", p), ("q", q)):
        if v < 1:
            raise ValueError(f"exponent {name} must be positive")
    start = time.perf_counter()
    xn, yp, zq = naive_power(x, n), naive_power(y, p), naive_power(z, q)
    dim = x.dim
    residual = [[xn[i][j] + yp[i][j] - zq[i][j] for j in range(dim)] for i in range(dim)]
    holds = all(v == 0 for row in residual for v in row)
    claim = {
        "statement": f"X^{n} + Y^{p} = Z^{q}",
        "n": n,
        "p": p,
        "q": q,
        "dim": dim,
        "nontrivial": _any_nonzero(xn) and _any_nonzero(yp) and _any_nonzero(zq),
    }
    return VerifyReport(
        claim=claim,
        holds=holds,
        residual=None if holds else BigMat(residual),
        timing_ms=(time.perf_counter() - start) * 1000.0,
    )


def _any_nonzero(m: list[list[int]]) -> bool:
    return any(v for row in m for v in row)


def is_nontrivial(report: VerifyReport) -> bool:
    """None of X**n, Y**p, Z**q is the zero matrix."""
    return bool(report.claim.get("nontrivial"))


def lemma_scan(m_lo: int, m_hi: int) -> list[LemmaReport]:
    if not 2 <= m_lo <= m_hi:
        raise ValueError("need 2 <= m_lo <= m_hi")
    k = hp.kernel()
    reports = []
    # binomial row of (x+y)**m, advanced by one convolution per step
    row = [1]
    for m in range(1, m_hi + 1):
        row = [a + b for a, b in zip([0] + row, row + [0])]
        if m < m_lo:
            continue
        coeffs = row[:]
        coeffs[0] = coeffs[-1] = 0
        t = HomoPoly(coeffs)
        degrees = []
        cur = t
        while (len(degrees) + 1) * 2 <= t.degree:
            quot, ok = hp.divide_exact(cur, k)
            if not ok:
                break
            degrees.append(quot.degree)
            cur = quot
        e = len(degrees)
        eq1 = e >= 1 if m % 6 == 1 else None
        eq2 = e >= 2 if m % 6 == 5 else None
        reports.append(LemmaReport(m, e, eq1, eq2, degrees))
    return reports


def verify_gch_term_order(poly: HomoPoly, m1: BigMat, m2: BigMat) -> bool:
    """Compare ``sum a_k M2**(n-k) M1**k`` against ``gch_eval``'s order."""
    if m1.dim != m2.dim:
        raise DimensionError(f"dimension mismatch: {m1.dim} vs {m2.dim}")
    n = poly.degree
    a1, a2 = m1.tolist(), m2.tolist()
    dim = m1.dim
    total = [[0] * dim for _ in range(dim)]
    for k, c in enumerate(poly.coeffs):
        if not c:
            continue
        term = _eye(dim)
        for _ in range(n - k):
            term = _matmul(term, a2)
        for _ in range(k):
            term = _matmul(term, a1)
        for i in range(dim):
            for j in range(dim):
                total[i][j] += c * term[i][j]
    return BigMat(total) == gch_eval(poly, m1, m2)
