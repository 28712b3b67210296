"""Constructions of integer-matrix solutions to X**n + Y**p = Z**q.

Routes
------
base / power
    For q = s + r*w and t = (r - s) - s*w in the Eisenstein integers,
    q**2 + q*t + t**2 = 0, so q**m + t**m = (q + t)**m whenever gcd(m, 6) = 1.
    The embedded 2x2 matrices Q, R, P inherit the identity.
npq
    Raise Q, R, P to the powers p*q, n*q, n*p: X**n + Y**p = Z**q with
    every side equal to a power of exponent n*p*q.
general
    X, Y, Z are unit multiples of powers of one base element c, so every
    side becomes a unit times c**L and the problem reduces to a unit equation
    zeta**i + zeta**j = zeta**k in the six-element unit group.
extended
    Companion matrices of monic divisors F of (x+y)**m - x**m - y**m give
    larger square solutions with exponents (m, m, m).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from math import gcd, lcm
from typing import Any

from . import bigmatrix as bm
from . import eisenstein as eis
from . import homopoly as hp
from .bigmatrix import BigMat
from .cayham import GchInstance, gch_matrices
from .eisenstein import EisInt
from .errors import (
    DegenerateBase,
    IndivisibleL,
    InadmissibleExponent,
    SelectorOutOfRange,
    TrivialParameters,
    Unsolvable,
    VerificationError,
)
from .reports import VerifyReport
from .verifier import is_nontrivial, verify_equation

__all__ = [
    "SolutionTriple",
    "Selector",
    "DEFAULT_BASE",
    "DEFAULT_RS",
    "base_triple",
    "power_identity",
    "npq_solution",
    "unit_solutions",
    "unit_equation",
    "general_solution",
    "extended_solution",
    "solve",
]

DEFAULT_BASE = EisInt(2, 1)
DEFAULT_RS = (1, 2)


@dataclass(frozen=True)
class SolutionTriple:
    X: BigMat
    Y: BigMat
    Z: BigMat
    n: int
    p: int
    q: int
    provenance: dict[str, Any] = field(default_factory=dict, compare=False)
    report: VerifyReport | None = field(default=None, compare=False, repr=False)

    @property
    def dim(self) -> int:
        return self.X.dim

    def to_json(self, verified: bool) -> dict[str, Any]:
        return {
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "X": self.X.to_json_rows(),
            "Y": self.Y.to_json_rows(),
            "Z": self.Z.to_json_rows(),
            "provenance": self.provenance,
            "verified": verified,
        }


def _finish(x, y, z, n, p, q, provenance) -> SolutionTriple:
    report = verify_equation(x, y, z, n, p, q)
    if not report.holds:
        raise VerificationError("constructed triple does not satisfy the equation", report)
    if not is_nontrivial(report):
        raise VerificationError("constructed triple is trivial (a zero power)", report)
    provenance = dict(provenance, nontrivial="none of X^n, Y^p, Z^q is zero")
    return SolutionTriple(x, y, z, n, p, q, provenance, report)


def _check_rs(r: int, s: int) -> None:
    if r == 0 and s == 0:
        raise TrivialParameters("(r, s) = (0, 0) gives zero matrices")


def _check_positive(**exps: int) -> None:
    for name, v in exps.items():
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise ValueError(f"exponent {name} must be a positive integer, got {v!r}")


def base_triple(r: int, s: int) -> tuple[BigMat, BigMat, BigMat]:
    """``(Q, R, P)`` with ``Q + R = P`` and ``Q**2 + Q*R + R**2 = 0``."""
    _check_rs(r, s)
    return eis.q_form(r, s), eis.r_form(r, s), eis.p_form(r, s)


def power_identity(r: int, s: int, m: int) -> SolutionTriple:
    """``Q**m + R**m = P**m`` for m coprime to 6."""
    _check_positive(m=m)
    if gcd(m, 6) != 1:
        raise InadmissibleExponent(f"m = {m} is not coprime to 6")
    qm, rm, pm = base_triple(r, s)
    return _finish(
        qm, rm, pm, m, m, m, {"route": "base", "r": str(r), "s": str(s), "m": m}
    )


def npq_solution(n: int, p: int, q: int, r: int, s: int) -> SolutionTriple:
    _check_positive(n=n, p=p, q=q)
    if gcd(n * p * q, 6) != 1:
        raise InadmissibleExponent(f"n*p*q = {n * p * q} is not coprime to 6")
    qm, rm, pm = base_triple(r, s)
    x = bm.power(qm, p * q)
    y = bm.power(rm, n * q)
    z = bm.power(pm, n * p)
    prov = {"route": "npq", "r": str(r), "s": str(s), "common_exponent": n * p * q}
    return _finish(x, y, z, n, p, q, prov)


def unit_solutions(n: int, p: int, q: int) -> list[tuple[int, int, int]]:
    """All ``(a, b, c)`` in {0..5}**3 with zeta**(n a) + zeta**(p b) = zeta**(q c)."""
    out = []
    for a, b, c in product(range(6), repeat=3):
        lhs = eis.add(eis.unit_value(n * a), eis.unit_value(p * b))
        if lhs == eis.unit_value(q * c):
            out.append((a, b, c))
    return out


def unit_equation(n: int, p: int, q: int) -> tuple[int, int, int]:
    """One unit pattern for ``(n, p, q)``, chosen deterministically.

    Ties are broken by the smallest ``(a, c, b)``: X carries as small a unit
    as possible, then Z, then Y.
    """
    _check_positive(n=n, p=p, q=q)
    sols = unit_solutions(n, p, q)
    if not sols:
        evidence = {
            "n": n,
            "p": p,
            "q": q,
            "candidates_searched": 216,
            "solutions": 0,
            "reachable_unit_exponents": {
                name: sorted({(e * a) % 6 for a in range(6)})
                for name, e in (("n", n), ("p", p), ("q", q))
            },
        }
        raise Unsolvable(f"no unit pattern solves exponents ({n}, {p}, {q})", evidence)
    return min(sols, key=lambda t: (t[0], t[2], t[1]))


def general_solution(
    n: int, p: int, q: int, c: EisInt = DEFAULT_BASE, L: int | None = None
) -> SolutionTriple:
    """Unit multiples of powers of ``c`` whose n-th, p-th, q-th powers meet at ``c**L``."""
    _check_positive(n=n, p=p, q=q)
    if eis.norm(c) <= 1:
        raise DegenerateBase(f"base {c} has norm {eis.norm(c)}; need a non-unit")
    if L is None:
        L = lcm(n, p, q)
    if L < 1 or L % n or L % p or L % q:
        raise IndivisibleL(f"L = {L} is not a common multiple of {n}, {p}, {q}")
    a, b, u = unit_equation(n, p, q)
    x = eis.embed(eis.mul(eis.unit_value(a), eis.power(c, L // n)))
    y = eis.embed(eis.mul(eis.unit_value(b), eis.power(c, L // p)))
    z = eis.embed(eis.mul(eis.unit_value(u), eis.power(c, L // q)))
    prov = {
        "route": "general",
        "base": c.to_json(),
        "L": L,
        "unit_exponents": [a, b, u],
    }
    return _finish(x, y, z, n, p, q, prov)


_TOKEN = re.compile(r"^(x\+y|K(?:\^(\d+))?|C)$")


@dataclass(frozen=True)
class Selector:
    """Which factors of ``T_m`` go into the divisor F."""

    x_plus_y: bool = False
    k_power: int = 0
    cofactor: bool = False

    @classmethod
    def parse(cls, text: str) -> Selector:
        """Parse e.g. ``"x+y,K"``, ``"K^2"`` or ``"(x+y)*K^2*C"``."""
        tokens = [t for t in re.split(r"[,*]", text.replace(" ", "")) if t]
        xy, kp, cof = False, 0, False
        for tok in tokens:
            tok = tok.strip("()") if tok.startswith("(") else tok
            m = _TOKEN.match(tok)
            if not m:
                raise ValueError(f"unknown selector factor {tok!r}")
            if tok == "x+y":
                xy = True
            elif tok == "C":
                cof = True
            else:
                kp += int(m.group(2) or 1)
        if not tokens:
            raise ValueError("empty selector")
        return cls(xy, kp, cof)

    def __str__(self) -> str:
        parts = []
        if self.x_plus_y:
            parts.append("(x+y)")
        if self.k_power:
            parts.append("K" if self.k_power == 1 else f"K^{self.k_power}")
        if self.cofactor:
            parts.append("C")
        return "*".join(parts) or "1"


def extended_solution(m: int, selector: Selector, r: int, s: int) -> SolutionTriple:
    """``M1**m + M2**m = (M1 + M2)**m`` for the companion of a divisor of ``T_m``."""
    _check_positive(m=m)
    if gcd(m, 6) != 1 or m < 5:
        raise InadmissibleExponent(f"m = {m} must be coprime to 6 and at least 5")
    _check_rs(r, s)
    fact = hp.canonical_factorization(m)
    f = hp.ONE
    if selector.x_plus_y:
        if "x+y" not in fact.linear:
            raise SelectorOutOfRange(f"x+y does not divide T_{m}")
        f = hp.mul(f, hp.X_PLUS_Y)
    if selector.k_power < 0 or selector.k_power > fact.e:
        raise SelectorOutOfRange(
            f"K^{selector.k_power} requested but K divides T_{m} only {fact.e} time(s)"
        )
    f = hp.mul(f, hp.power(hp.kernel(), selector.k_power))
    if selector.cofactor:
        if fact.cofactor.degree == 0:
            raise SelectorOutOfRange(f"the cofactor of T_{m} is constant")
        f = hp.mul(f, fact.cofactor)
    if f.degree < 2:
        raise SelectorOutOfRange(f"divisor {selector} has degree {f.degree}; need >= 2")
    _, exact = hp.divide_exact(hp.t_poly(m), f)
    if not exact:
        raise SelectorOutOfRange(f"{selector} does not divide T_{m}")
    inst = GchInstance.build(f, r, s)
    m1, m2 = gch_matrices(inst)
    if bm.mul(m1, m2) != bm.mul(m2, m1):
        raise VerificationError("M1 and M2 do not commute")
    prov = {
        "route": "extended",
        "r": str(r),
        "s": str(s),
        "m": m,
        "selector": str(selector),
        "divisor": f.to_json(),
    }
    return _finish(m1, m2, bm.add(m1, m2), m, m, m, prov)


def solve(
    n: int,
    p: int,
    q: int,
    *,
    route: str = "auto",
    r: int | None = None,
    s: int | None = None,
    base: EisInt | None = None,
    L: int | None = None,
) -> SolutionTriple:
    """Pick a construction for ``(n, p, q)`` and return a verified triple.

    ``route="auto"`` uses the npq construction when n*p*q is coprime to 6 and
    no base element or L was given, and the general construction otherwise.
    Raises :class:`Unsolvable` when the unit equation has no solution.
    """
    _check_positive(n=n, p=p, q=q)
    if route not in ("auto", "npq", "general"):
        raise ValueError(f"unknown route {route!r}")
    coprime = gcd(n * p * q, 6) == 1
    if route == "npq" or (route == "auto" and coprime and base is None and L is None):
        rr, ss = DEFAULT_RS
        return npq_solution(n, p, q, rr if r is None else r, ss if s is None else s)
    return general_solution(n, p, q, DEFAULT_BASE if base is None else base, L)
