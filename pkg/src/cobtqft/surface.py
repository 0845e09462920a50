"""Normal forms for 2-dimensional cobordisms and their category operations.

A cobordism ``n -> m`` is stored by its complete classifying data:

* which ingoing/outgoing boundary circles lie on a common connected
  component, and the genus of each such component;
* the multiset of genera of closed (boundaryless) components.

Two cobordisms are equivalent iff these data agree, so structural
equality of the canonicalized representation decides equivalence.

Orientation runs top to bottom: the ingoing circles are at the top,
and ``compose(K, L)`` glues the outgoing circles of ``K`` to the
ingoing circles of ``L`` ("K first, then L", diagrammatic order).

Gluing bookkeeping goes through the Euler characteristic: gluing along
circles is additive (a circle has characteristic 0), so a merged
component with characteristic chi and b remaining boundary circles has
genus (2 - chi - b)/2.  This needs no special case for loops created
by gluing two components along several circles at once.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

INGOING = 0
OUTGOING = 1


class BoundaryLabel(NamedTuple):
    index: int
    side: int  # INGOING or OUTGOING


class Component(NamedTuple):
    """One connected component carrying at least one boundary circle."""

    ingoing: tuple[int, ...]
    outgoing: tuple[int, ...]
    genus: int


def component(ingoing: Iterable[int], outgoing: Iterable[int], genus: int) -> Component:
    ins = tuple(sorted(ingoing))
    outs = tuple(sorted(outgoing))
    if not ins and not outs:
        raise ValueError("component with no boundary circles (closed pieces "
                         "live in closed_genera)")
    if genus < 0:
        raise ValueError(f"negative genus {genus}")
    return Component(ins, outs, genus)


class Cobordism:
    """Canonical normal form of a 2-cobordism ``n_in -> n_out``.

    Components are kept in a fixed total order (anchored at the least
    ingoing circle, else n_in + least outgoing circle), and the closed
    genera sorted descending, so ``==`` decides cobordism equivalence.
    """

    __slots__ = ("n_in", "n_out", "components", "closed_genera", "_hash")

    def __init__(self, n_in: int, n_out: int,
                 components: Iterable = (), closed_genera: Iterable[int] = ()):
        comps = tuple(sorted(
            (c if isinstance(c, Component) else component(*c) for c in components),
            key=lambda c: c.ingoing[0] if c.ingoing else n_in + c.outgoing[0]))
        closed = tuple(sorted(closed_genera, reverse=True))
        seen_in: list[int] = []
        seen_out: list[int] = []
        for c in comps:
            if not isinstance(c, Component):
                raise TypeError(f"not a component: {c!r}")
            if c.genus < 0 or (not c.ingoing and not c.outgoing):
                raise ValueError(f"invalid component {c!r}")
            seen_in.extend(c.ingoing)
            seen_out.extend(c.outgoing)
        if sorted(seen_in) != list(range(n_in)):
            raise ValueError(
                f"ingoing circles {sorted(seen_in)} do not partition 0..{n_in - 1}")
        if sorted(seen_out) != list(range(n_out)):
            raise ValueError(
                f"outgoing circles {sorted(seen_out)} do not partition 0..{n_out - 1}")
        if any(g < 0 for g in closed):
            raise ValueError("negative closed genus")
        self.n_in = n_in
        self.n_out = n_out
        self.components = comps
        self.closed_genera = closed
        self._hash = hash((n_in, n_out, comps, closed))

    def key(self):
        """Sort key realizing the enumeration order of cobordisms."""
        return (self.n_in, self.n_out, self.components, self.closed_genera)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cobordism):
            return NotImplemented
        return (self._hash == other._hash
                and self.n_in == other.n_in and self.n_out == other.n_out
                and self.components == other.components
                and self.closed_genera == other.closed_genera)

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        parts = [f"{list(c.ingoing)}->{list(c.outgoing)}g{c.genus}"
                 for c in self.components]
        if self.closed_genera:
            parts.append(f"closed{list(self.closed_genera)}")
        return f"Cobordism({self.n_in}->{self.n_out}: {', '.join(parts) or 'empty'})"

    def euler_characteristic(self) -> int:
        chi = sum(2 - 2 * c.genus - len(c.ingoing) - len(c.outgoing)
                  for c in self.components)
        return chi + sum(2 - 2 * g for g in self.closed_genera)

    def to_json_obj(self) -> dict:
        return {"in": self.n_in, "out": self.n_out,
                "components": [{"in": list(c.ingoing), "out": list(c.outgoing),
                                "genus": c.genus} for c in self.components],
                "closed": list(self.closed_genera)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Cobordism":
        return cls(obj["in"], obj["out"],
                   [component(c["in"], c["out"], c["genus"])
                    for c in obj["components"]],
                   obj["closed"])


def e_block(m: int, k: int, n: int) -> Cobordism:
    """The connected cobordism with n ingoing, m outgoing circles, genus k."""
    if m == 0 and n == 0:
        return Cobordism(0, 0, (), (k,))
    return Cobordism(n, m, [component(range(n), range(m), k)])


def identity(n: int) -> Cobordism:
    return Cobordism(n, n, [component((i,), (i,), 0) for i in range(n)])


def permutation(p: Sequence[int]) -> Cobordism:
    """n cylinders connecting ingoing circle i to outgoing circle p[i]."""
    n = len(p)
    if sorted(p) != list(range(n)):
        raise ValueError(f"{tuple(p)} is not a permutation of 0..{n - 1}")
    return Cobordism(n, n, [component((i,), (p[i],), 0) for i in range(n)])


def compose(first: Cobordism, second: Cobordism) -> Cobordism:
    """Glue outgoing circles of `first` to ingoing circles of `second`."""
    if first.n_out != second.n_in:
        raise ValueError(
            f"cannot glue {first.n_in}->{first.n_out} onto "
            f"{second.n_in}->{second.n_out}: boundary arities differ")
    # union-find over component slots of both factors
    parent: dict[tuple[int, int], tuple[int, int]] = {}

    def find(x):
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(x, x) != x:
            parent[x], x = root, parent[x]
        return root

    out_owner = {}
    for idx, c in enumerate(first.components):
        for j in c.outgoing:
            out_owner[j] = (0, idx)
    in_owner = {}
    for idx, c in enumerate(second.components):
        for j in c.ingoing:
            in_owner[j] = (1, idx)
    for j in range(first.n_out):
        a, b = find(out_owner[j]), find(in_owner[j])
        if a != b:
            parent[a] = b

    groups: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for side, comps in ((0, first.components), (1, second.components)):
        for idx in range(len(comps)):
            groups.setdefault(find((side, idx)), []).append((side, idx))

    new_components = []
    closed = list(first.closed_genera) + list(second.closed_genera)
    for members in groups.values():
        chi = 0
        ins: list[int] = []
        outs: list[int] = []
        for side, idx in members:
            c = (first if side == 0 else second).components[idx]
            chi += 2 - 2 * c.genus - len(c.ingoing) - len(c.outgoing)
            if side == 0:
                ins.extend(c.ingoing)
            else:
                outs.extend(c.outgoing)
        boundary = len(ins) + len(outs)
        twice_genus = 2 - chi - boundary
        assert twice_genus >= 0 and twice_genus % 2 == 0, (chi, boundary)
        genus = twice_genus // 2
        if boundary == 0:
            closed.append(genus)
        else:
            new_components.append(component(ins, outs, genus))
    return Cobordism(first.n_in, second.n_out, new_components, closed)


def tensor(first: Cobordism, second: Cobordism) -> Cobordism:
    """Disjoint union, with `second`'s circles placed after `first`'s."""
    comps = list(first.components)
    for c in second.components:
        comps.append(Component(tuple(i + first.n_in for i in c.ingoing),
                               tuple(j + first.n_out for j in c.outgoing),
                               c.genus))
    return Cobordism(first.n_in + second.n_in, first.n_out + second.n_out,
                     comps, first.closed_genera + second.closed_genera)


def rho(K: Cobordism) -> tuple[tuple[BoundaryLabel, ...], ...]:
    """The partition of boundary labels by connected component.

    Closed pieces carry no labels and do not appear.  The classes are
    returned sorted, so two cobordisms have equal boundary partitions
    iff the returned values compare equal.
    """
    classes = []
    for c in K.components:
        labels = tuple(sorted(
            [BoundaryLabel(i, INGOING) for i in c.ingoing]
            + [BoundaryLabel(j, OUTGOING) for j in c.outgoing]))
        classes.append(labels)
    return tuple(sorted(classes))


def _check_label(K: Cobordism, b) -> BoundaryLabel:
    b = BoundaryLabel(*b)
    arity = K.n_in if b.side == INGOING else K.n_out
    if b.side not in (INGOING, OUTGOING) or not 0 <= b.index < arity:
        raise ValueError(f"no boundary circle {b} on a {K.n_in}->{K.n_out} cobordism")
    return b


def fill_hole(K: Cobordism, b) -> Cobordism:
    """Cap the boundary circle `b` with a disk.

    An ingoing circle is filled by preceding K with id ⊗ E_{1,0,0} ⊗ id,
    an outgoing one by following it with id ⊗ E_{0,0,1} ⊗ id; the
    remaining circles on that side close up the index gap.
    """
    b = _check_label(K, b)
    if b.side == INGOING:
        context = tensor(tensor(identity(b.index), e_block(1, 0, 0)),
                         identity(K.n_in - b.index - 1))
        return compose(context, K)
    context = tensor(tensor(identity(b.index), e_block(0, 0, 1)),
                     identity(K.n_out - b.index - 1))
    return compose(K, context)


def stretch1(K: Cobordism) -> Cobordism:
    """Turn a 1 -> 0 cobordism into the 1 -> 1 cobordism (K ⊗ id) ∘ E_{2,0,1}."""
    if (K.n_in, K.n_out) != (1, 0):
        raise ValueError(f"stretch1 needs arity 1->0, got {K.n_in}->{K.n_out}")
    return compose(e_block(2, 0, 1), tensor(K, identity(1)))


def stretch1_dual(K: Cobordism) -> Cobordism:
    """Turn a 0 -> 1 cobordism into the 1 -> 1 cobordism E_{1,0,2} ∘ (K ⊗ id)."""
    if (K.n_in, K.n_out) != (0, 1):
        raise ValueError(f"stretch1_dual needs arity 0->1, got {K.n_in}->{K.n_out}")
    return compose(tensor(K, identity(1)), e_block(1, 0, 2))


def stretch2(K: Cobordism) -> Cobordism:
    """Turn a 2 -> 0 cobordism into (K ⊗ id) ∘ (id ⊗ E_{2,0,0})."""
    if (K.n_in, K.n_out) != (2, 0):
        raise ValueError(f"stretch2 needs arity 2->0, got {K.n_in}->{K.n_out}")
    return compose(tensor(identity(1), e_block(2, 0, 0)),
                   tensor(K, identity(1)))


def stretch2_dual(K: Cobordism) -> Cobordism:
    """Turn a 0 -> 2 cobordism into (id ⊗ E_{0,0,2}) ∘ (K ⊗ id)."""
    if (K.n_in, K.n_out) != (0, 2):
        raise ValueError(f"stretch2_dual needs arity 0->2, got {K.n_in}->{K.n_out}")
    return compose(tensor(K, identity(1)),
                   tensor(identity(1), e_block(0, 0, 2)))


def closure(K: Cobordism, a: int) -> Cobordism:
    """Close a 1 -> 1 cobordism inside E_{0,a,1} ∘ K ∘ E_{1,a,0}."""
    if (K.n_in, K.n_out) != (1, 1):
        raise ValueError(f"closure needs arity 1->1, got {K.n_in}->{K.n_out}")
    return compose(compose(e_block(1, a, 0), K), e_block(0, a, 1))
