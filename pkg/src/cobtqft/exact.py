"""Exact rational scalars and sparse matrices.

Scalars are :class:`fractions.Fraction` values, so every number is an
arbitrary-precision rational kept in lowest terms with a positive
denominator.  A matrix stores only its nonzero entries in a dict
``(row, col) -> Fraction``: evaluating field theories on two or three
circles produces matrices with 225 to 3375 columns that are mostly
zero, and the sparse form keeps exact multiplication cheap.

There is no floating point anywhere in this package.

JSON form: ``{"rows": R, "cols": C, "entries": [[r, c, "p/q"], ...]}``
with entries sorted row-major and ``/q`` omitted when the denominator
is 1.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Mapping, Sequence

RationalScalar = Fraction


class RationalMatrix:
    """A sparse ``rows x cols`` matrix over the rationals.

    Instances are immutable by convention: no method mutates ``entries``
    after construction, so values may be shared freely across threads.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError(f"negative shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        data: dict[tuple[int, int], Fraction] = {}
        if entries:
            items = entries.items() if isinstance(entries, Mapping) else entries
            for key, value in items:
                r, c = key
                if not (0 <= r < rows and 0 <= c < cols):
                    raise ValueError(f"entry ({r},{c}) outside {rows}x{cols}")
                v = value if isinstance(value, Fraction) else Fraction(value)
                if v:
                    data[r, c] = v
        self.entries = data

    @classmethod
    def _adopt(cls, rows: int, cols: int, data: dict) -> "RationalMatrix":
        # Internal fast path: `data` must already be canonical (in-bounds
        # keys, nonzero Fraction values) and is taken over without copying.
        m = cls.__new__(cls)
        m.rows = rows
        m.cols = cols
        m.entries = data
        return m

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        one = Fraction(1)
        return cls._adopt(n, n, {(i, i): one for i in range(n)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        n = len(rows)
        m = len(rows[0]) if n else 0
        data = {}
        for i, row in enumerate(rows):
            if len(row) != m:
                raise ValueError("ragged rows")
            for j, value in enumerate(row):
                v = value if isinstance(value, Fraction) else Fraction(value)
                if v:
                    data[i, j] = v
        return cls._adopt(n, m, data)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def get(self, r: int, c: int) -> Fraction:
        return self.entries.get((r, c), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def key(self):
        """Canonical hashable form (for dict-based distinctness checks)."""
        return (self.rows, self.cols,
                tuple(sorted((r, c, v.numerator, v.denominator)
                             for (r, c), v in self.entries.items())))

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix._adopt(
            self.cols, self.rows,
            {(c, r): v for (r, c), v in self.entries.items()})

    def scale(self, s) -> "RationalMatrix":
        s = s if isinstance(s, Fraction) else Fraction(s)
        if not s:
            return RationalMatrix._adopt(self.rows, self.cols, {})
        return RationalMatrix._adopt(
            self.rows, self.cols,
            {k: s * v for k, v in self.entries.items()})

    def __mul__(self, other) -> "RationalMatrix":
        return mat_mul(self, other)

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols}, {len(self.entries)} nonzero)"

    def to_json_obj(self) -> dict:
        entries = [[r, c, str(v)]
                   for (r, c), v in sorted(self.entries.items())]
        return {"rows": self.rows, "cols": self.cols, "entries": entries}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "RationalMatrix":
        return cls(obj["rows"], obj["cols"],
                   {(r, c): Fraction(s) for r, c, s in obj["entries"]})

    @classmethod
    def from_json(cls, text: str) -> "RationalMatrix":
        return cls.from_json_obj(json.loads(text))


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Exact matrix product ``a · b``."""
    if a.cols != b.rows:
        raise ValueError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}: "
            "inner dimensions differ")
    # group the left factor by column so each nonzero of b is touched once
    cols_of_a: dict[int, list] = {}
    for (i, j), v in a.entries.items():
        cols_of_a.setdefault(j, []).append((i, v))
    acc: dict[tuple[int, int], Fraction] = {}
    for (j, k), w in b.entries.items():
        hits = cols_of_a.get(j)
        if not hits:
            continue
        for i, v in hits:
            key = (i, k)
            s = acc.get(key)
            acc[key] = v * w if s is None else s + v * w
    return RationalMatrix._adopt(
        a.rows, b.cols, {k: v for k, v in acc.items() if v})


def kron(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Kronecker product with the left factor as the outer (slow) index.

    Basis vector ``e_i ⊗ e_j`` of the product space sits at index
    ``i * dim(b-side) + j``, matching the fixed ordering
    ``b1⊗b1, b1⊗b2, ..., bn⊗bn`` used for all tensor-product bases here.
    """
    br, bc = b.rows, b.cols
    data = {}
    for (ia, ja), va in a.entries.items():
        rbase = ia * br
        cbase = ja * bc
        for (ib, jb), vb in b.entries.items():
            data[rbase + ib, cbase + jb] = va * vb
    return RationalMatrix._adopt(a.rows * br, a.cols * bc, data)


def perm_matrix(p: Sequence[int], block_dim: int) -> RationalMatrix:
    """Permutation of tensor factors, each of dimension ``block_dim``.

    ``p`` maps factor slots: the input factor in slot ``i`` moves to slot
    ``p[i]``, i.e. the resulting 0/1 matrix sends ``e_{i_0}⊗...⊗e_{i_{n-1}}``
    to the basis vector whose slot-``t`` factor is ``e_{i_{p^{-1}(t)}}``.
    """
    n = len(p)
    if sorted(p) != list(range(n)):
        raise ValueError(f"{tuple(p)} is not a permutation of 0..{n - 1}")
    d = block_dim
    size = d ** n
    pinv = [0] * n
    for i, t in enumerate(p):
        pinv[t] = i
    one = Fraction(1)
    data = {}
    # powers[t] = weight of slot t in the mixed-radix index
    powers = [d ** (n - 1 - t) for t in range(n)]
    for col in range(size):
        digits = []
        rest = col
        for t in range(n):
            digits.append(rest // powers[t])
            rest %= powers[t]
        row = 0
        for t in range(n):
            row += digits[pinv[t]] * powers[t]
        data[row, col] = one
    return RationalMatrix._adopt(size, size, data)


def swap_matrix(d1: int, d2: int) -> RationalMatrix:
    """The flip ``V⊗W -> W⊗V`` for spaces of dimensions d1 and d2."""
    one = Fraction(1)
    data = {}
    for i in range(d1):
        for j in range(d2):
            data[j * d1 + i, i * d2 + j] = one
    return RationalMatrix._adopt(d1 * d2, d1 * d2, data)
