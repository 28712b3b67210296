"""Homogeneous bivariate integer polynomials.

A polynomial of degree d is stored densely as ``coeffs[k]`` = coefficient of
``x**k * y**(d - k)``. The zero polynomial is canonicalised to degree 0 with
``coeffs == (0,)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Sequence

from .errors import DegreeError

__all__ = [
    "HomoPoly",
    "ONE",
    "X",
    "Y",
    "X_PLUS_Y",
    "kernel",
    "t_poly",
    "add",
    "sub",
    "mul",
    "power",
    "divide_exact",
    "multiplicity",
    "Factorization",
    "canonical_factorization",
    "evaluate",
    "content",
]


@dataclass(frozen=True)
class HomoPoly:
    degree: int
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int], degree: int | None = None):
        coeffs = tuple(int(c) for c in coeffs)
        if not coeffs:
            raise DegreeError("coefficient list must not be empty")
        if degree is not None and degree != len(coeffs) - 1:
            raise DegreeError(f"degree {degree} needs {degree + 1} coefficients")
        if not any(coeffs):
            coeffs = (0,)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "degree", len(coeffs) - 1)

    @classmethod
    def parse(cls, text: str) -> HomoPoly:
        """Parse the literal ``"c0,c1,...,cd"`` (coefficient of x**k y**(d-k))."""
        parts = [p.strip() for p in text.split(",")]
        try:
            return cls([int(p) for p in parts])
        except ValueError:
            raise ValueError(f"invalid polynomial literal: {text!r}") from None

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> HomoPoly:
        return cls([int(c) for c in data["coeffs"]], degree=int(data["degree"]))

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def lead_x(self) -> int:
        """Coefficient of ``x**degree``."""
        return self.coeffs[-1]

    def is_monic_x(self) -> bool:
        return self.lead_x == 1

    def __add__(self, other: HomoPoly) -> HomoPoly:
        return add(self, other)

    def __sub__(self, other: HomoPoly) -> HomoPoly:
        return sub(self, other)

    def __neg__(self) -> HomoPoly:
        return HomoPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, HomoPoly):
            return mul(self, other)
        if isinstance(other, int):
            return HomoPoly([other * c for c in self.coeffs])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return HomoPoly([other * c for c in self.coeffs])
        return NotImplemented

    def __pow__(self, e: int) -> HomoPoly:
        return power(self, e)

    def __call__(self, x0: int, y0: int) -> int:
        return evaluate(self, x0, y0)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        d = self.degree
        terms = []
        for k in range(d, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in (("x", k), ("y", d - k)) if e
            )
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


ONE = HomoPoly([1])
X = HomoPoly([0, 1])
Y = HomoPoly([1, 0])
X_PLUS_Y = HomoPoly([1, 1])


def kernel() -> HomoPoly:
    """``x**2 + x*y + y**2``."""
    return HomoPoly([1, 1, 1])


def t_poly(m: int) -> HomoPoly:
    """``(x + y)**m - x**m - y**m``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    coeffs = _binomial_row(m)
    coeffs[0] = coeffs[m] = 0
    return HomoPoly(coeffs)


def _binomial_row(m: int) -> list[int]:
    row = [1]
    for k in range(m):
        row.append(row[k] * (m - k) // (k + 1))
    return row


def add(p: HomoPoly, q: HomoPoly) -> HomoPoly:
    if p.is_zero:
        return q
    if q.is_zero:
        return p
    if p.degree != q.degree:
        raise DegreeError(f"cannot add degrees {p.degree} and {q.degree}")
    return HomoPoly([a + b for a, b in zip(p.coeffs, q.coeffs)])


def sub(p: HomoPoly, q: HomoPoly) -> HomoPoly:
    return add(p, -q)


def mul(p: HomoPoly, q: HomoPoly) -> HomoPoly:
    if p.is_zero or q.is_zero:
        return HomoPoly([0])
    out = [0] * (p.degree + q.degree + 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return HomoPoly(out)


def power(p: HomoPoly, e: int) -> HomoPoly:
    if e < 0:
        raise ValueError("negative powers are not supported")
    result, base = ONE, p
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def content(p: HomoPoly) -> int:
    """Non-negative gcd of the coefficients."""
    g = 0
    for c in p.coeffs:
        g = gcd(g, c)
    return g


def divide_exact(p: HomoPoly, d: HomoPoly) -> tuple[HomoPoly, bool]:
    """Divide ``p`` by ``d`` over the integers.

    Returns ``(quotient, True)`` when ``d`` divides ``p`` exactly. Otherwise the
    flag is False and the returned polynomial is a partial result that must
    not be used.
    """
    if d.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero:
        return HomoPoly([0]), True
    if d.degree > p.degree:
        return HomoPoly([0]), False
    if d.lead_x != 0:
        quot, ok = _long_divide(list(p.coeffs), list(d.coeffs))
    elif d.coeffs[0] != 0:
        # pivot on y instead: swap x and y, divide, swap back
        quot, ok = _long_divide(list(p.coeffs[::-1]), list(d.coeffs[::-1]))
        quot = quot[::-1]
    else:
        # d = x**i * y**j * d' with d' nonzero at both ends
        i = next(k for k, c in enumerate(d.coeffs) if c)
        j = d.degree - max(k for k, c in enumerate(d.coeffs) if c)
        pc = p.coeffs
        if any(pc[:i]) or (j and any(pc[len(pc) - j:])):
            return HomoPoly([0]), False
        p_inner = HomoPoly(pc[i:len(pc) - j])
        return divide_exact(p_inner, HomoPoly(d.coeffs[i:d.degree + 1 - j]))
    q = HomoPoly(quot)
    if ok and mul(q, d) != p:
        ok = False
    return q, ok


def _long_divide(num: list[int], den: list[int]) -> tuple[list[int], bool]:
    # num, den are coefficient lists in ascending x-power; den[-1] != 0
    dn, dd = len(num) - 1, len(den) - 1
    lead = den[-1]
    rem = num[:]
    quot = [0] * (dn - dd + 1)
    ok = True
    for i in range(dn - dd, -1, -1):
        c, r = divmod(rem[i + dd], lead)
        if r:
            ok = False
        quot[i] = c
        if c:
            for j in range(dd + 1):
                rem[i + j] -= c * den[j]
    if ok and any(rem[:dd]):
        ok = False
    return quot, ok


def multiplicity(p: HomoPoly, d: HomoPoly) -> int:
    """Largest e such that ``d**e`` divides ``p`` exactly."""
    if p.is_zero:
        raise ValueError("multiplicity of the zero polynomial is undefined")
    if d.is_zero or d.degree == 0:
        raise ValueError("divisor must be a nonzero non-constant polynomial")
    e = 0
    cur = p
    while (e + 1) * d.degree <= p.degree:
        q, ok = divide_exact(cur, d)
        if not ok:
            break
        cur, e = q, e + 1
    return e


class Factorization(NamedTuple):
    """``T_m = scalar * (product of linear) * K**e * cofactor``."""

    scalar: int
    e: int
    cofactor: HomoPoly
    linear: tuple[str, ...]

    def linear_poly(self) -> HomoPoly:
        out = ONE
        for name in self.linear:
            out = mul(out, _LINEAR[name])
        return out

    def expand(self) -> HomoPoly:
        out = mul(self.linear_poly(), power(kernel(), self.e))
        return mul(out, self.cofactor) * self.scalar


_LINEAR = {"x": X, "y": Y, "x+y": X_PLUS_Y}


def canonical_factorization(m: int) -> Factorization:
    """Split off content, x, y, x+y and the largest power of K from ``t_poly(m)``.

    Factors are removed in that fixed order, each linear factor at most once.
    For prime m >= 5 the scalar is m and the cofactor is monic in x.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    cur = t_poly(m)
    scalar = content(cur)
    cur = HomoPoly([c // scalar for c in cur.coeffs])
    linear = []
    for name in ("x", "y", "x+y"):
        q, ok = divide_exact(cur, _LINEAR[name])
        if ok:
            cur = q
            linear.append(name)
    e = 0
    if cur.degree >= 2:
        e = multiplicity(cur, kernel())
        for _ in range(e):
            cur, _ok = divide_exact(cur, kernel())
    if cur.lead_x < 0:
        cur, scalar = -cur, -scalar
    return Factorization(scalar, e, cur, tuple(linear))


def evaluate(p: HomoPoly, x0: int, y0: int) -> int:
    d = p.degree
    return sum(c * x0**k * y0 ** (d - k) for k, c in enumerate(p.coeffs) if c)
