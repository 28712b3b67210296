"""Dense square matrices over Python's arbitrary-precision integers.

Every operation is exact. Matrices are immutable; the arithmetic operators
(``+``, ``-``, ``*``, ``@``, ``**``) and the module-level functions are two
spellings of the same operations.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .errors import DimensionError

__all__ = [
    "BigMat",
    "identity",
    "zeros",
    "add",
    "sub",
    "mul",
    "scalar_mul",
    "power",
    "det",
    "adjugate",
    "is_zero",
    "equal",
]

_COFACTOR_LIMIT = 8


class BigMat:
    """Square integer matrix stored row-major as a tuple of tuples."""

    __slots__ = ("_rows", "_dim")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(_as_int(v) for v in row) for row in rows)
        dim = len(rows)
        if dim == 0:
            raise DimensionError("matrix dimension must be at least 1")
        if any(len(row) != dim for row in rows):
            raise DimensionError("matrix must be square")
        self._rows = rows
        self._dim = dim

    @classmethod
    def _trusted(cls, rows: tuple[tuple[int, ...], ...]) -> BigMat:
        obj = cls.__new__(cls)
        obj._rows = rows
        obj._dim = len(rows)
        return obj

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def entries(self) -> list[int]:
        """Row-major flat list of the dim**2 entries."""
        return [v for row in self._rows for v in row]

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self._rows[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self._rows]

    # serialization: rows of decimal strings, e.g. [["486","-243"],["243","243"]]
    def to_json_rows(self) -> list[list[str]]:
        return [[str(v) for v in row] for row in self._rows]

    @classmethod
    def from_json_rows(cls, data: Sequence[Sequence[str | int]]) -> BigMat:
        rows = []
        for row in data:
            if not isinstance(row, (list, tuple)):
                raise ValueError("matrix JSON must be an array of rows")
            rows.append([_parse_entry(v) for v in row])
        return cls(rows)

    def dumps(self) -> str:
        return json.dumps(self.to_json_rows())

    @classmethod
    def loads(cls, text: str) -> BigMat:
        return cls.from_json_rows(json.loads(text))

    def __repr__(self) -> str:
        return f"BigMat({self.tolist()!r})"

    def __str__(self) -> str:
        width = max(len(str(v)) for v in self.entries())
        return "\n".join(
            "[" + " ".join(str(v).rjust(width) for v in row) + "]" for row in self._rows
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BigMat):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __add__(self, other: BigMat) -> BigMat:
        return add(self, other)

    def __sub__(self, other: BigMat) -> BigMat:
        return sub(self, other)

    def __neg__(self) -> BigMat:
        return scalar_mul(-1, self)

    def __mul__(self, other):
        if isinstance(other, BigMat):
            return mul(self, other)
        if isinstance(other, int):
            return scalar_mul(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return scalar_mul(other, self)
        return NotImplemented

    def __matmul__(self, other: BigMat) -> BigMat:
        return mul(self, other)

    def __pow__(self, e: int) -> BigMat:
        return power(self, e)


def _as_int(v) -> int:
    # bool is an int subclass but never a sensible matrix entry
    if isinstance(v, bool) or not isinstance(v, int):
        if hasattr(v, "__index__") and not isinstance(v, bool):
            return v.__index__()
        raise TypeError(f"matrix entries must be integers, got {type(v).__name__}")
    return v


def _parse_entry(v) -> int:
    if isinstance(v, str):
        text = v.strip()
        body = text[1:] if text.startswith("-") else text
        if not body.isdigit():
            raise ValueError(f"invalid decimal integer string: {v!r}")
        return int(text)
    return _as_int(v)


def _check_same(a: BigMat, b: BigMat) -> None:
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")


def identity(dim: int) -> BigMat:
    if dim < 1:
        raise DimensionError("dimension must be at least 1")
    return BigMat._trusted(
        tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))
    )


def zeros(dim: int) -> BigMat:
    if dim < 1:
        raise DimensionError("dimension must be at least 1")
    return BigMat._trusted(tuple((0,) * dim for _ in range(dim)))


def add(a: BigMat, b: BigMat) -> BigMat:
    _check_same(a, b)
    return BigMat._trusted(
        tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.rows, b.rows))
    )


def sub(a: BigMat, b: BigMat) -> BigMat:
    _check_same(a, b)
    return BigMat._trusted(
        tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a.rows, b.rows))
    )


def scalar_mul(c: int, a: BigMat) -> BigMat:
    c = _as_int(c)
    return BigMat._trusted(tuple(tuple(c * x for x in row) for row in a.rows))


def mul(a: BigMat, b: BigMat) -> BigMat:
    _check_same(a, b)
    cols = tuple(zip(*b.rows))
    return BigMat._trusted(
        tuple(
            tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a.rows
        )
    )


def power(a: BigMat, e: int) -> BigMat:
    """``a**e`` by binary exponentiation; ``a**0`` is the identity."""
    e = _as_int(e)
    if e < 0:
        raise ValueError("negative matrix powers are not supported")
    result = identity(a.dim)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def det(a: BigMat) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    return _bareiss([list(row) for row in a.rows])


def _bareiss(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                # exact: Sylvester's identity guarantees divisibility by prev
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def adjugate(a: BigMat) -> BigMat:
    """Classical adjoint: transpose of the cofactor matrix.

    Small matrices use cofactor determinants; larger ones use the
    Faddeev-LeVerrier recurrence, whose divisions are exact over the integers.
    """
    n = a.dim
    if n == 1:
        return identity(1)
    if n <= _COFACTOR_LIMIT:
        rows = a.rows
        cof = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [
                    [rows[r][c] for c in range(n) if c != j] for r in range(n) if r != i
                ]
                cof[j][i] = (-1) ** (i + j) * _bareiss(minor)
        return BigMat._trusted(tuple(tuple(row) for row in cof))
    return _adjugate_leverrier(a)


def _adjugate_leverrier(a: BigMat) -> BigMat:
    n = a.dim
    eye = identity(n)
    m = zeros(n)
    coeff = 1
    for k in range(1, n + 1):
        m = add(mul(a, m), scalar_mul(coeff, eye))
        am = mul(a, m)
        trace = sum(am[i, i] for i in range(n))
        coeff = -trace // k
    # after the loop m = M_n and adj(A) = (-1)**(n-1) * M_n
    return scalar_mul((-1) ** (n - 1), m)


def is_zero(a: BigMat) -> bool:
    return all(v == 0 for row in a.rows for v in row)


def equal(a: BigMat, b: BigMat) -> bool:
    _check_same(a, b)
    return a.rows == b.rows
