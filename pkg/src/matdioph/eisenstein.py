"""Eisenstein integers a + b*w with w**2 + w + 1 = 0.

The map a + b*w -> a*I + b*A, where A = [[0, -1], [1, -1]] is the companion
matrix of x**2 + x*y + y**2, is a ring embedding into 2x2 integer matrices.
All of the 2x2 matrix solutions produced by this package are images of
Eisenstein integers under that map, which is why they commute.

Units are tracked as exponents k mod 6 of zeta = 1 + w, which generates the
unit group: zeta**2 = w, zeta**3 = -1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .bigmatrix import BigMat

__all__ = [
    "EisInt",
    "ZERO",
    "ONE",
    "OMEGA",
    "ZETA",
    "add",
    "neg",
    "mul",
    "power",
    "norm",
    "conj",
    "embed",
    "q_form",
    "r_form",
    "p_form",
    "unit_value",
    "unit_mul",
]


@dataclass(frozen=True)
class EisInt:
    """The element ``a + b*w``."""

    a: int
    b: int

    def __add__(self, other: EisInt) -> EisInt:
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other: EisInt) -> EisInt:
        return add(self, neg(_coerce(other)))

    def __rsub__(self, other) -> EisInt:
        return add(_coerce(other), neg(self))

    def __neg__(self) -> EisInt:
        return neg(self)

    def __mul__(self, other: EisInt) -> EisInt:
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> EisInt:
        return power(self, e)

    def __str__(self) -> str:
        sign = "-" if self.b < 0 else "+"
        return f"{self.a}{sign}{abs(self.b)}*w"

    def to_json(self) -> dict[str, str]:
        return {"a": str(self.a), "b": str(self.b)}

    @classmethod
    def from_json(cls, data: dict) -> EisInt:
        return cls(int(data["a"]), int(data["b"]))

    @classmethod
    def parse(cls, text: str) -> EisInt:
        """Parse ``"a,b"`` or ``"a+b*w"`` / ``"a-b*w"`` (also ``w`` alone)."""
        s = text.replace(" ", "")
        m = re.fullmatch(r"(-?\d+),(-?\d+)", s)
        if m:
            return cls(int(m.group(1)), int(m.group(2)))
        m = re.fullmatch(r"(-?\d+)?(?:([+-])(\d*)\*?w)?", s)
        if m and (m.group(1) or m.group(2)):
            a = int(m.group(1) or 0)
            b = 0
            if m.group(2):
                b = int(m.group(3) or 1) * (-1 if m.group(2) == "-" else 1)
            return cls(a, b)
        m = re.fullmatch(r"(-?)(\d*)\*?w", s)
        if m:
            return cls(0, int(m.group(2) or 1) * (-1 if m.group(1) else 1))
        raise ValueError(f"cannot parse Eisenstein integer: {text!r}")


def _coerce(v) -> EisInt:
    if isinstance(v, EisInt):
        return v
    if isinstance(v, int) and not isinstance(v, bool):
        return EisInt(v, 0)
    raise TypeError(f"expected EisInt or int, got {type(v).__name__}")


ZERO = EisInt(0, 0)
ONE = EisInt(1, 0)
OMEGA = EisInt(0, 1)
ZETA = EisInt(1, 1)


def add(u: EisInt, v: EisInt) -> EisInt:
    return EisInt(u.a + v.a, u.b + v.b)


def neg(u: EisInt) -> EisInt:
    return EisInt(-u.a, -u.b)


def mul(u: EisInt, v: EisInt) -> EisInt:
    # (a + bw)(c + dw) = ac + (ad + bc)w + bd*w**2, and w**2 = -1 - w
    a, b, c, d = u.a, u.b, v.a, v.b
    bd = b * d
    return EisInt(a * c - bd, a * d + b * c - bd)


def power(u: EisInt, e: int) -> EisInt:
    if e < 0:
        raise ValueError("negative powers are not supported")
    result, base = ONE, u
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def norm(u: EisInt) -> int:
    return u.a * u.a - u.a * u.b + u.b * u.b


def conj(u: EisInt) -> EisInt:
    # conjugation sends w to w**2 = -1 - w
    return EisInt(u.a - u.b, -u.b)


def embed(u: EisInt) -> BigMat:
    """``a + b*w`` as the matrix ``[[a, -b], [b, a - b]]``."""
    return BigMat(((u.a, -u.b), (u.b, u.a - u.b)))


def q_form(r: int, s: int) -> BigMat:
    """``[[s, -r], [r, s - r]]``, the image of ``s + r*w``."""
    return embed(EisInt(s, r))


def r_form(r: int, s: int) -> BigMat:
    """``[[r - s, s], [-s, r]]``, the image of ``(r - s) - s*w``."""
    return embed(EisInt(r - s, -s))


def p_form(r: int, s: int) -> BigMat:
    """``[[r, s - r], [r - s, s]]``, the image of ``r + (r - s)*w``."""
    return embed(EisInt(r, r - s))


_UNITS = (
    EisInt(1, 0),
    EisInt(1, 1),
    EisInt(0, 1),
    EisInt(-1, 0),
    EisInt(-1, -1),
    EisInt(0, -1),
)


def unit_value(k: int) -> EisInt:
    """``zeta**k`` for any integer k (taken mod 6)."""
    return _UNITS[k % 6]


def unit_mul(j: int, k: int) -> int:
    return (j + k) % 6
