"""Commutative Frobenius algebras over the exact rationals.

Provides group algebras of abelian groups, centers of group algebras
(with the conjugacy-class-sum basis), tensor products of algebras, and
an exact axiom checker.  The two concrete instances everything else is
built from are the group algebra of the cyclic group of order 5 and
the center of the group algebra of the symmetric group of degree 3;
their tensor product is the 15-dimensional algebra whose field theory
the faithfulness scan certifies.

Matrix conventions: a d-dimensional algebra has
``mul: d x d^2``, ``unit: d x 1``, ``comul: d^2 x d``, ``counit: 1 x d``,
with tensor-square bases ordered ``b1⊗b1, b1⊗b2, ..., bn⊗bn``.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

from .exact import RationalMatrix, kron, mat_mul, swap_matrix


class FiniteGroup:
    """A finite group given by its Cayley table on element indices."""

    __slots__ = ("order", "table", "identity", "names")

    def __init__(self, table: Sequence[Sequence[int]],
                 names: Optional[Sequence[str]] = None):
        n = len(table)
        rows = tuple(tuple(row) for row in table)
        for row in rows:
            if len(row) != n or any(not 0 <= x < n for x in row):
                raise ValueError("Cayley table is not an n x n table of indices")
        identity = None
        for e in range(n):
            if all(rows[e][g] == g == rows[g][e] for g in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError("no identity element")
        for g in range(n):
            if identity not in rows[g]:
                raise ValueError(f"element {g} has no inverse")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                        raise ValueError(
                            f"multiplication is not associative at ({a},{b},{c})")
        self.order = n
        self.table = rows
        self.identity = identity
        self.names = tuple(names) if names else tuple(f"g{i}" for i in range(n))
        if len(self.names) != n:
            raise ValueError("need one name per element")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.table[a].index(self.identity)

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(self.order) for b in range(self.order))

    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Classes ordered with the identity's class first, then by least
        element index."""
        seen = set()
        classes = []
        for g in range(self.order):
            if g in seen:
                continue
            orbit = {self.table[self.table[h][g]][self.inverse(h)]
                     for h in range(self.order)}
            seen |= orbit
            classes.append(tuple(sorted(orbit)))
        classes.sort(key=lambda cls: (self.identity not in cls, cls[0]))
        return tuple(classes)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        names = ["e"] + [f"a^{i}" if i > 1 else "a" for i in range(1, n)]
        return cls([[(i + j) % n for j in range(n)] for i in range(n)], names)

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        """Permutations of 0..n-1 in lexicographic one-line order."""
        elements = list(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(elements)}
        table = [[index[tuple(p[q[x]] for x in range(n))] for q in elements]
                 for p in elements]
        return cls(table, [_cycle_name(p) for p in elements])

    @classmethod
    def from_json_obj(cls, obj: dict) -> "FiniteGroup":
        if obj.get("order") != len(obj["table"]):
            raise ValueError("order field does not match table size")
        return cls(obj["table"], obj.get("names"))


def _cycle_name(p: Sequence[int]) -> str:
    # cycle notation on 1-based points, fixed points dropped
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = p[x]
        out.append("(" + "".join(str(i + 1) for i in cycle) + ")")
    return "".join(out) or "e"


class FrobeniusAlgebra:
    """Structure maps of a (candidate) commutative Frobenius algebra.

    Construction does not validate the axioms, so broken instances can
    be built and fed to :func:`verify_frobenius`; the constructors in
    this module all produce instances that pass.
    """

    __slots__ = ("dim", "mul", "unit", "comul", "counit", "basis_names",
                 "_caches")

    def __init__(self, dim: int, mul: RationalMatrix, unit: RationalMatrix,
                 comul: RationalMatrix, counit: RationalMatrix,
                 basis_names: Optional[Sequence[str]] = None):
        if mul.shape != (dim, dim * dim):
            raise ValueError(f"mul must be {dim}x{dim * dim}, got {mul.shape}")
        if unit.shape != (dim, 1):
            raise ValueError(f"unit must be {dim}x1, got {unit.shape}")
        if comul.shape != (dim * dim, dim):
            raise ValueError(f"comul must be {dim * dim}x{dim}, got {comul.shape}")
        if counit.shape != (1, dim):
            raise ValueError(f"counit must be 1x{dim}, got {counit.shape}")
        self.dim = dim
        self.mul = mul
        self.unit = unit
        self.comul = comul
        self.counit = counit
        self.basis_names = (tuple(basis_names) if basis_names
                            else tuple(f"b{i}" for i in range(dim)))
        if len(self.basis_names) != dim:
            raise ValueError("need one basis name per dimension")
        self._caches: dict = {}

    def __repr__(self) -> str:
        return f"FrobeniusAlgebra(dim={self.dim}, basis={list(self.basis_names)})"

    def to_json_obj(self) -> dict:
        return {"dim": self.dim, "basis": list(self.basis_names),
                "mul": self.mul.to_json_obj(), "unit": self.unit.to_json_obj(),
                "comul": self.comul.to_json_obj(),
                "counit": self.counit.to_json_obj()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "FrobeniusAlgebra":
        return cls(obj["dim"],
                   RationalMatrix.from_json_obj(obj["mul"]),
                   RationalMatrix.from_json_obj(obj["unit"]),
                   RationalMatrix.from_json_obj(obj["comul"]),
                   RationalMatrix.from_json_obj(obj["counit"]),
                   obj.get("basis"))


class PairingData(NamedTuple):
    pairing: RationalMatrix    # 1 x dim^2
    copairing: RationalMatrix  # dim^2 x 1


class AxiomReport(NamedTuple):
    results: tuple[tuple[str, bool], ...]

    @property
    def all_pass(self) -> bool:
        return all(ok for _, ok in self.results)

    @property
    def failures(self) -> tuple[str, ...]:
        return tuple(name for name, ok in self.results if not ok)


def group_algebra(g: FiniteGroup) -> FrobeniusAlgebra:
    """The group algebra of an abelian group.

    Basis: the group elements.  The multiplication linearizes the Cayley
    table, the counit sends the identity element to the group order and
    every other element to 0, and the comultiplication is the transposed
    multiplication scaled by 1/order.
    """
    if not g.is_abelian():
        raise ValueError("group algebra of a non-abelian group is not a "
                         "commutative Frobenius algebra; use "
                         "center_of_group_algebra instead")
    n = g.order
    one = Fraction(1)
    mul = RationalMatrix(n, n * n, {(g.mul(a, b), a * n + b): one
                                    for a in range(n) for b in range(n)})
    unit = RationalMatrix(n, 1, {(g.identity, 0): one})
    counit = RationalMatrix(1, n, {(0, g.identity): Fraction(n)})
    comul = mul.transpose().scale(Fraction(1, n))
    return FrobeniusAlgebra(n, mul, unit, comul, counit, g.names)


def center_of_group_algebra(g: FiniteGroup) -> FrobeniusAlgebra:
    """The center of a group algebra, on the conjugacy-class-sum basis.

    The counit reads off the coefficient of the identity element; the
    comultiplication is derived from the copairing via (id⊗mul)∘(γ⊗id).
    """
    classes = g.conjugacy_classes()
    d = len(classes)
    class_of = {}
    for k, cls in enumerate(classes):
        for x in cls:
            class_of[x] = k
    mul_data = {}
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            coeff = [0] * g.order
            for x in ci:
                row = g.table[x]
                for y in cj:
                    coeff[row[y]] += 1
            col = i * d + j
            for k, ck in enumerate(classes):
                c = coeff[ck[0]]
                assert all(coeff[x] == c for x in ck), "class sums must "\
                    "multiply to class-sum combinations"
                if c:
                    mul_data[k, col] = Fraction(c)
    mul = RationalMatrix(d, d * d, mul_data)
    unit = RationalMatrix(d, 1, {(class_of[g.identity], 0): Fraction(1)})
    counit = RationalMatrix(
        1, d, {(0, class_of[g.identity]): Fraction(1)})
    comul = _comul_from_pairing(d, mul, counit)
    names = ["+".join(g.names[x] for x in cls) for cls in classes]
    return FrobeniusAlgebra(d, mul, unit, comul, counit, names)


def _invert_dense(b: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(b)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(b)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ValueError("not a Frobenius form: the pairing is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _comul_from_pairing(d: int, mul: RationalMatrix,
                        counit: RationalMatrix) -> RationalMatrix:
    gamma = _copairing(d, mat_mul(counit, mul))
    return mat_mul(kron(RationalMatrix.identity(d), mul),
                   kron(gamma, RationalMatrix.identity(d)))


def _copairing(d: int, beta: RationalMatrix) -> RationalMatrix:
    b = [[beta.get(0, i * d + j) for j in range(d)] for i in range(d)]
    binv = _invert_dense(b)
    return RationalMatrix(d * d, 1, {(i * d + j, 0): binv[i][j]
                                     for i in range(d) for j in range(d)
                                     if binv[i][j]})


def pairing_copairing(a: FrobeniusAlgebra) -> PairingData:
    """The pairing counit∘mul and its inverse tensor (the copairing)."""
    beta = mat_mul(a.counit, a.mul)
    return PairingData(beta, _copairing(a.dim, beta))


def tensor_algebra(a: FrobeniusAlgebra, b: FrobeniusAlgebra) -> FrobeniusAlgebra:
    """Tensor product algebra on the basis ``a_i ⊗ b_j`` (a outer)."""
    da, db = a.dim, b.dim
    ida = RationalMatrix.identity(da)
    idb = RationalMatrix.identity(db)
    # (A⊗B)⊗(A⊗B) -> A⊗A⊗B⊗B, swapping the middle factors
    unshuffle = kron(ida, kron(swap_matrix(db, da), idb))
    # A⊗A⊗B⊗B -> (A⊗B)⊗(A⊗B)
    shuffle = kron(ida, kron(swap_matrix(da, db), idb))
    mul = mat_mul(kron(a.mul, b.mul), unshuffle)
    comul = mat_mul(shuffle, kron(a.comul, b.comul))
    unit = kron(a.unit, b.unit)
    counit = kron(a.counit, b.counit)
    names = [f"{x}⊗{y}" for x in a.basis_names for y in b.basis_names]
    return FrobeniusAlgebra(da * db, mul, unit, comul, counit, names)


def verify_frobenius(a: FrobeniusAlgebra) -> AxiomReport:
    """Check every axiom as an exact matrix identity."""
    d = a.dim
    one = RationalMatrix.identity(d)
    flip = swap_matrix(d, d)
    mul, unit, comul, counit = a.mul, a.unit, a.comul, a.counit
    results = (
        ("left unit", mat_mul(mul, kron(unit, one)) == one),
        ("right unit", mat_mul(mul, kron(one, unit)) == one),
        ("associativity",
         mat_mul(mul, kron(mul, one)) == mat_mul(mul, kron(one, mul))),
        ("commutativity", mat_mul(mul, flip) == mul),
        ("left counit", mat_mul(kron(counit, one), comul) == one),
        ("right counit", mat_mul(kron(one, counit), comul) == one),
        ("coassociativity",
         mat_mul(kron(comul, one), comul) == mat_mul(kron(one, comul), comul)),
        ("frobenius left",
         mat_mul(kron(one, mul), kron(comul, one)) == mat_mul(comul, mul)),
        ("frobenius right",
         mat_mul(kron(mul, one), kron(one, comul)) == mat_mul(comul, mul)),
    )
    return AxiomReport(results)


@lru_cache(maxsize=None)
def qz5() -> FrobeniusAlgebra:
    """Group algebra of the cyclic group of order 5."""
    return group_algebra(FiniteGroup.cyclic(5))


@lru_cache(maxsize=None)
def zqs3() -> FrobeniusAlgebra:
    """Center of the group algebra of the symmetric group of degree 3."""
    return center_of_group_algebra(FiniteGroup.symmetric(3))


@lru_cache(maxsize=None)
def faithful_algebra() -> FrobeniusAlgebra:
    """The 15-dimensional tensor product whose field theory is faithful."""
    return tensor_algebra(qz5(), zqs3())


ALGEBRA_TAGS = ("qz5", "zqs3", "A")


def algebra_by_tag(tag: str) -> FrobeniusAlgebra:
    if tag == "qz5":
        return qz5()
    if tag == "zqs3":
        return zqs3()
    if tag == "A":
        return faithful_algebra()
    raise ValueError(f"unknown algebra tag {tag!r}; expected one of {ALGEBRA_TAGS}")
