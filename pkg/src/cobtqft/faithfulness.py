"""Faithfulness machinery: number theory, separation, exhaustive scan.

The scan certifies, over stated bounds, that pairwise-distinct
cobordisms receive pairwise-distinct matrices under the faithful
15-dimensional algebra.  Every equal-arity pair is checked twice, by
independent routes:

* the matrix route evaluates both cobordisms and compares exactly;
* the separation route drives both through the same closing context
  (fill all holes except a separating one or two, stretch to a 1 -> 1
  shape, then close off) and compares the closed-surface genus
  multisets and their invariant products.

The invariant product separates genus multisets because each closed
genus-k surface contributes 5·(3/2)^(k-1)·(2^(2k-1)+1): the power of 5
counts components, the power of 2 in the denominator recovers the
total genus, and primitive prime divisors of 2^(2k-1)+1 (Zsigmondy)
pin down the individual genera.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

from . import surface
from .frobenius import FrobeniusAlgebra, faithful_algebra
from .surface import BoundaryLabel, Cobordism, INGOING, OUTGOING
from .tqft import closed_invariant, ensure_verified, evaluate


class GenusMultiset(NamedTuple):
    """A multiset of closed-component genera, stored descending."""

    genera: tuple[int, ...]


def genus_multiset(genera) -> GenusMultiset:
    ks = tuple(sorted(genera, reverse=True))
    if any(k < 0 for k in ks):
        raise ValueError("negative genus")
    return GenusMultiset(ks)


# --- Zsigmondy witnesses ---------------------------------------------------

class ExceptionalTriple(Exception):
    """The one excluded case: 2^3 + 1^3 = 9 has no primitive prime divisor."""


def _prime_factors(n: int) -> list[int]:
    out = []
    for p in (2, 3):
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                out.append(p)
                while n % p == 0:
                    n //= p
        f += 6
    if n > 1:
        out.append(n)
    return out


def zsigmondy_witness(a: int, b: int, n: int) -> int:
    """Least prime dividing a^n + b^n but no a^k + b^k with k < n.

    Requires coprime a > b >= 1 and n >= 1; raises
    :class:`ExceptionalTriple` for (n, a, b) = (3, 2, 1), the single
    triple without such a prime.
    """
    if not (a > b >= 1):
        raise ValueError(f"need a > b >= 1, got a={a}, b={b}")
    if math.gcd(a, b) != 1:
        raise ValueError(f"a={a} and b={b} are not coprime")
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if (n, a, b) == (3, 2, 1):
        raise ExceptionalTriple(
            "2^3 + 1^3 = 9: every prime divisor already divides 2^1 + 1^1")
    smaller = [a ** k + b ** k for k in range(1, n)]
    for p in _prime_factors(a ** n + b ** n):
        if all(s % p for s in smaller):
            return p
    raise AssertionError(f"no primitive prime divisor of {a}^{n}+{b}^{n}")


# --- genus-multiset invariants ---------------------------------------------

@lru_cache(maxsize=None)
def _closed_value(k: int) -> Fraction:
    return closed_invariant("A", k)


def multiset_invariant(ks: GenusMultiset | Sequence[int]) -> Fraction:
    """Product of the closed-surface invariants of the multiset entries."""
    genera = ks.genera if isinstance(ks, GenusMultiset) else ks
    value = Fraction(1)
    for k in genera:
        value *= _closed_value(k)
    return value


@dataclass(frozen=True)
class InjectivityReport:
    max_size: int
    max_genus: int
    multisets_checked: int
    injective: bool
    collision: Optional[tuple[GenusMultiset, GenusMultiset]]


def lemma4_injectivity(max_size: int, max_genus: int) -> InjectivityReport:
    """Exhaustively check that the invariant separates all genus
    multisets with at most `max_size` entries, each at most `max_genus`."""
    seen: dict[Fraction, GenusMultiset] = {}
    count = 0
    for size in range(max_size + 1):
        for combo in itertools.combinations_with_replacement(
                range(max_genus, -1, -1), size):
            ms = GenusMultiset(combo)
            count += 1
            value = multiset_invariant(ms)
            if value in seen:
                return InjectivityReport(max_size, max_genus, count, False,
                                         (seen[value], ms))
            seen[value] = ms
    return InjectivityReport(max_size, max_genus, count, True, None)


# --- the separating context pipeline ---------------------------------------

@lru_cache(maxsize=None)
def _label_data(K: Cobordism):
    """Per-label component ids and genera, plus the partition signature."""
    comp_of = {}
    genus_of = {}
    for idx, c in enumerate(K.components):
        for i in c.ingoing:
            comp_of[BoundaryLabel(i, INGOING)] = idx
            genus_of[BoundaryLabel(i, INGOING)] = c.genus
        for j in c.outgoing:
            comp_of[BoundaryLabel(j, OUTGOING)] = idx
            genus_of[BoundaryLabel(j, OUTGOING)] = c.genus
    return comp_of, genus_of, surface.rho(K)


def _all_labels(K: Cobordism) -> list[BoundaryLabel]:
    return ([BoundaryLabel(i, INGOING) for i in range(K.n_in)]
            + [BoundaryLabel(j, OUTGOING) for j in range(K.n_out)])


@lru_cache(maxsize=None)
def _fill_except(K: Cobordism, kept: frozenset) -> Cobordism:
    """Cap every boundary circle not in `kept`, ingoing first, ascending."""
    filled_in = 0
    for i in range(K.n_in):
        if BoundaryLabel(i, INGOING) not in kept:
            K = surface.fill_hole(K, BoundaryLabel(i - filled_in, INGOING))
            filled_in += 1
    filled_out = 0
    for j in range(K.n_out):
        if BoundaryLabel(j, OUTGOING) not in kept:
            K = surface.fill_hole(K, BoundaryLabel(j - filled_out, OUTGOING))
            filled_out += 1
    return K


@lru_cache(maxsize=None)
def _to_loop(K: Cobordism) -> Cobordism:
    """Stretch a fully-filled-except cobordism to arity 1 -> 1."""
    shape = (K.n_in, K.n_out)
    if shape == (1, 1):
        return K
    if shape == (1, 0):
        return surface.stretch1(K)
    if shape == (0, 1):
        return surface.stretch1_dual(K)
    if shape == (2, 0):
        return surface.stretch2(K)
    if shape == (0, 2):
        return surface.stretch2_dual(K)
    raise AssertionError(f"unexpected arity {shape} in separation pipeline")


@lru_cache(maxsize=None)
def _close_off(K: Cobordism, a: int) -> GenusMultiset:
    closed = surface.closure(K, a)
    return GenusMultiset(closed.closed_genera)


def _max_genus(K: Cobordism) -> int:
    return max([c.genus for c in K.components]
               + list(K.closed_genera) + [0])


def separating_closure(K: Cobordism, L: Cobordism
                       ) -> tuple[GenusMultiset, GenusMultiset]:
    """Drive two distinct equal-arity cobordisms through one closing
    context, producing distinct closed genus multisets.

    Case analysis on how K and L differ: if their boundary partitions
    and all per-label genera agree, filling every hole already exposes
    differing closed multisets.  If some label's genus differs, keep
    that hole, fill the rest, stretch to a loop and close off.  If the
    partitions differ, keep a pair of labels related in exactly one of
    the two, fill the rest, stretch (same context on both sides) and
    close off.  The closing genus exceeds every genus present, so the
    resulting multisets always differ.
    """
    if (K.n_in, K.n_out) != (L.n_in, L.n_out):
        raise ValueError(f"arity mismatch: {K.n_in}->{K.n_out} vs "
                         f"{L.n_in}->{L.n_out}")
    if K == L:
        raise ValueError("the cobordisms are equal; nothing separates them")
    comp_k, genus_k, rho_k = _label_data(K)
    comp_l, genus_l, rho_l = _label_data(L)
    labels = _all_labels(K)

    if rho_k == rho_l:
        diff = next((x for x in labels if genus_k[x] != genus_l[x]), None)
        if diff is None:
            # only the closed parts differ: fill everything
            ms_k = GenusMultiset(_fill_except(K, frozenset()).closed_genera)
            ms_l = GenusMultiset(_fill_except(L, frozenset()).closed_genera)
            assert ms_k != ms_l
            return ms_k, ms_l
        kept = frozenset([diff])
    else:
        pair = next(
            (x, y) for x, y in itertools.combinations(labels, 2)
            if (comp_k[x] == comp_k[y]) != (comp_l[x] == comp_l[y]))
        kept = frozenset(pair)

    a = 1 + max(_max_genus(K), _max_genus(L))
    ms_k = _close_off(_to_loop(_fill_except(K, kept)), a)
    ms_l = _close_off(_to_loop(_fill_except(L, kept)), a)
    assert ms_k != ms_l, (K, L, ms_k)
    return ms_k, ms_l


# --- enumeration and the scan ----------------------------------------------

@dataclass(frozen=True)
class ScanBounds:
    max_circles: int        # per side
    max_genus: int          # per component with boundary
    max_closed: int         # number of closed pieces
    max_closed_genus: int

    def to_json_obj(self) -> dict:
        return {"max_circles": self.max_circles, "max_genus": self.max_genus,
                "max_closed": self.max_closed,
                "max_closed_genus": self.max_closed_genus}


def _set_partitions(items: Sequence):
    """All partitions of `items` into nonempty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


@lru_cache(maxsize=None)
def enumerate_cobordisms(bounds: ScanBounds) -> tuple[Cobordism, ...]:
    """Every distinct cobordism within bounds, in the certificate order
    (lexicographic on arity, component list, closed multiset)."""
    out = []
    closed_options = [()]
    for count in range(1, bounds.max_closed + 1):
        closed_options.extend(itertools.combinations_with_replacement(
            range(bounds.max_closed_genus, -1, -1), count))
    genera = range(bounds.max_genus + 1)
    for n_in in range(bounds.max_circles + 1):
        for n_out in range(bounds.max_circles + 1):
            labels = ([BoundaryLabel(i, INGOING) for i in range(n_in)]
                      + [BoundaryLabel(j, OUTGOING) for j in range(n_out)])
            block: list[Cobordism] = []
            for part in _set_partitions(labels):
                for gs in itertools.product(genera, repeat=len(part)):
                    comps = [surface.component(
                        (x.index for x in blk if x.side == INGOING),
                        (x.index for x in blk if x.side == OUTGOING),
                        g) for blk, g in zip(part, gs)]
                    for closed in closed_options:
                        block.append(Cobordism(n_in, n_out, comps, closed))
            block.sort(key=Cobordism.key)
            out.extend(block)
    return tuple(out)


@dataclass(frozen=True)
class ScanCertificate:
    algebra: str
    bounds: ScanBounds
    enumerated: int
    pairs_checked: int
    verdict: str  # "distinct" or "collision"
    collision: Optional[tuple[Cobordism, Cobordism]] = None

    @property
    def distinct(self) -> bool:
        return self.verdict == "distinct"

    def to_json_obj(self) -> dict:
        obj = {"algebra": self.algebra, "bounds": self.bounds.to_json_obj(),
               "enumerated": self.enumerated,
               "pairs_checked": self.pairs_checked, "verdict": self.verdict}
        if self.collision is not None:
            obj["collision"] = {"left": self.collision[0].to_json_obj(),
                                "right": self.collision[1].to_json_obj()}
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


def _scan_class(algebra, cobs, cross_check):
    """Check one equal-arity class.

    Returns (pairs confirmed distinct, items processed, collision or None).
    """
    pairs = 0
    seen: dict = {}
    for idx, K in enumerate(cobs):
        matrix_key = evaluate(algebra, K).matrix.key()
        if matrix_key in seen:
            return pairs, idx + 1, (seen[matrix_key], K)
        pairs += idx  # K is now confirmed distinct from all before it
        seen[matrix_key] = K
    if cross_check:
        for K, L in itertools.combinations(cobs, 2):
            ms_k, ms_l = separating_closure(K, L)
            if multiset_invariant(ms_k) == multiset_invariant(ms_l):
                return pairs, len(cobs), (K, L)
    return pairs, len(cobs), None


def faithfulness_scan(bounds: ScanBounds,
                      algebra: Optional[FrobeniusAlgebra] = None,
                      tag: str = "A",
                      workers: int = 1) -> ScanCertificate:
    """Certify pairwise distinctness of all cobordisms within bounds.

    With the default algebra every equal-arity pair is checked by both
    the matrix route and the separation route; for other algebras the
    scan runs the matrix route only, reporting the first collision in
    enumeration order (cross-arity pairs differ by shape and are
    counted without further work).
    """
    if bounds.max_circles > 3:
        raise ValueError("more than 3 circles per side outgrows desk scale")
    if algebra is None:
        algebra = faithful_algebra()
        tag = "A"
    ensure_verified(algebra)
    cross_check = algebra is faithful_algebra()
    every = enumerate_cobordisms(bounds)
    classes = [tuple(group) for _, group in itertools.groupby(
        every, key=lambda K: (K.n_in, K.n_out))]

    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_scan_class, algebra, cobs, cross_check)
                       for cobs in classes]
            results = [fut.result() for fut in futures]
    else:
        results = []
        for cobs in classes:
            result = _scan_class(algebra, cobs, cross_check)
            results.append(result)
            if result[2] is not None:
                break

    total = len(every)
    pairs = 0
    sizes_before = 0
    # aggregate in enumeration order regardless of completion order, so
    # the certificate is deterministic; pairs against earlier classes
    # differ by arity alone
    for cobs, (class_pairs, done, collision) in zip(classes, results):
        pairs += sizes_before * done + class_pairs
        if collision is not None:
            return ScanCertificate(tag, bounds, total, pairs, "collision",
                                   collision)
        sizes_before += len(cobs)
    assert pairs == total * (total - 1) // 2
    return ScanCertificate(tag, bounds, total, pairs, "distinct")
