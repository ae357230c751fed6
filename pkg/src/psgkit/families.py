"""Generators for the named example structures and seeded random instances."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Union

import numpy as np

from .core import UNDEFINED, PartialSemigroup, StructureError, validate
from .dynamics import PartialDynSystem, PartialMap, translation_system

FAMILIES = (
    "pf-disjoint-union",
    "fp-sequence",
    "bounded-words",
    "bounded-words-shift-system",
    "right-zero",
    "cyclic-group",
    "zero-semigroup",
    "pf-translation-system",
    "random-partial",
)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple = field(default_factory=tuple)


def _nonempty_subsets(n: int) -> list[frozenset[int]]:
    out = []
    for k in range(1, n + 1):
        out.extend(frozenset(c) for c in combinations(range(1, n + 1), k))
    return out


def _set_name(fs: frozenset[int]) -> str:
    return "{" + ",".join(map(str, sorted(fs))) + "}"


def pf_disjoint_union(n: int) -> PartialSemigroup:
    """Nonempty subsets of {1..n} under union, defined only when disjoint."""
    if n < 1:
        raise ValueError("n must be >= 1")
    elems = _nonempty_subsets(n)
    pos = {fs: i for i, fs in enumerate(elems)}
    k = len(elems)
    table = np.full((k, k), UNDEFINED, dtype=np.int16)
    for i, f in enumerate(elems):
        for j, g in enumerate(elems):
            if not f & g:
                table[i, j] = pos[f | g]
    return PartialSemigroup(table, [_set_name(f) for f in elems])


def fp_sequence(cap: int) -> PartialSemigroup:
    """Formal products over index sets F in {1..cap}; F*G defined iff
    max F < min G.  Distinct index sets stay distinct elements."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    elems = _nonempty_subsets(cap)
    pos = {fs: i for i, fs in enumerate(elems)}
    k = len(elems)
    table = np.full((k, k), UNDEFINED, dtype=np.int16)
    for i, f in enumerate(elems):
        for j, g in enumerate(elems):
            if max(f) < min(g):
                table[i, j] = pos[f | g]
    names = ["".join(f"x{i}" for i in sorted(f)) for f in elems]
    return PartialSemigroup(table, names)


def _words(k: int) -> list[str]:
    out = []
    for length in range(1, k + 1):
        for i in range(1 << length):
            out.append(format(i, f"0{length}b"))
    return out


def bounded_words(k: int) -> PartialSemigroup:
    """Binary words of length 1..k, concatenation defined when it fits."""
    if k < 1:
        raise ValueError("k must be >= 1")
    elems = _words(k)
    pos = {w: i for i, w in enumerate(elems)}
    m = len(elems)
    table = np.full((m, m), UNDEFINED, dtype=np.int16)
    for i, u in enumerate(elems):
        for j, v in enumerate(elems):
            if len(u) + len(v) <= k:
                table[i, j] = pos[u + v]
    return PartialSemigroup(table, elems)


def right_zero(n: int) -> PartialSemigroup:
    """Total table with x*y = y."""
    if n < 1:
        raise ValueError("n must be >= 1")
    table = np.tile(np.arange(n, dtype=np.int16), (n, 1))
    return PartialSemigroup(table)


def cyclic_group(n: int) -> PartialSemigroup:
    if n < 1:
        raise ValueError("n must be >= 1")
    idx = np.arange(n)
    table = ((idx[:, None] + idx[None, :]) % n).astype(np.int16)
    return PartialSemigroup(table)


def zero_semigroup(n: int) -> PartialSemigroup:
    """Total table with every product equal to element 0."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return PartialSemigroup(np.zeros((n, n), dtype=np.int16))


def direct_product(a: PartialSemigroup, b: PartialSemigroup) -> PartialSemigroup:
    """Componentwise product; defined iff both components are."""
    na, nb = a.size, b.size
    n = na * nb
    table = np.full((n, n), UNDEFINED, dtype=np.int16)
    for xa in range(na):
        for xb in range(nb):
            for ya in range(na):
                for yb in range(nb):
                    va = a.product(xa, ya)
                    vb = b.product(xb, yb)
                    if va != UNDEFINED and vb != UNDEFINED:
                        table[xa * nb + xb, ya * nb + yb] = va * nb + vb
    names = [
        f"({a.element_name(xa)},{b.element_name(xb)})"
        for xa in range(na)
        for xb in range(nb)
    ]
    return PartialSemigroup(table, names)


def bounded_words_shift_system(k: int) -> PartialDynSystem:
    """Words of length <= k shifted from the left; acting elements {1..k-1}
    under bounded addition, T_j chopping j letters off words longer than j."""
    if k < 2:
        raise ValueError("k must be >= 2")
    amounts = list(range(1, k))
    m = len(amounts)
    table = np.full((m, m), UNDEFINED, dtype=np.int16)
    for i, p in enumerate(amounts):
        for j, q in enumerate(amounts):
            if p + q <= k - 1:
                table[i, j] = p + q - 1
    sg = PartialSemigroup(table, [str(p) for p in amounts])
    words = _words(k)
    pos = {w: i for i, w in enumerate(words)}
    maps = []
    for p in amounts:
        dom = 0
        image = np.full(len(words), UNDEFINED, dtype=np.int16)
        for i, w in enumerate(words):
            if len(w) > p:
                dom |= 1 << i
                image[i] = pos[w[p:]]
        maps.append(PartialMap(len(words), dom, image))
    return PartialDynSystem(sg, len(words), maps, point_names=words)


def pf_translation_system(n: int, modulus: int, seed: int = 0) -> PartialDynSystem:
    """Disjoint-union index sets acting by total translations on Z_modulus:
    each index set F moves s to s + sum of f over F."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    sg = pf_disjoint_union(n)
    rng = random.Random(seed)
    f = [rng.randrange(modulus) for _ in range(n)]
    elems = _nonempty_subsets(n)
    maps = []
    for fs in elems:
        shift = sum(f[i - 1] for i in fs) % modulus
        image = np.array(
            [(x + shift) % modulus for x in range(modulus)], dtype=np.int16
        )
        maps.append(PartialMap(modulus, (1 << modulus) - 1, image))
    names = [str(x) for x in range(modulus)]
    return PartialDynSystem(sg, modulus, maps, point_names=names)


def random_partial(
    n: int, density: float = 0.3, seed: int = 0, max_tries: int = 200
) -> PartialSemigroup:
    """Seeded random weakly-associative table.

    Cells are filled with probability `density`, then entries participating
    in violations are removed until the scan comes back clean (removal
    terminates since each pass deletes at least one entry).  Draws leaving
    no defined entry are retried.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    for _ in range(max_tries):
        table = np.full((n, n), UNDEFINED, dtype=np.int16)
        for i in range(n):
            for j in range(n):
                if rng.random() < density:
                    table[i, j] = rng.randrange(n)
        while True:
            sg = PartialSemigroup(table)
            report = validate(sg)
            if report.ok:
                break
            drop = set()
            for v in report.violations:
                xy = table[v.x, v.y]
                yz = table[v.y, v.z]
                if v.reason == "unequal":
                    drop.add((v.x, v.y))
                elif xy != UNDEFINED and table[xy, v.z] != UNDEFINED:
                    drop.add((int(xy), v.z))
                else:
                    drop.add((v.y, v.z))
            table = table.copy()
            for i, j in drop:
                table[i, j] = UNDEFINED
        if (table != UNDEFINED).any():
            return PartialSemigroup(table)
    raise StructureError("random generation retry cap exceeded")


def generate(spec: FamilySpec) -> Union[PartialSemigroup, PartialDynSystem]:
    """Build the instance described by a FamilySpec."""
    fam, p = spec.family, spec.params
    if fam == "pf-disjoint-union":
        return pf_disjoint_union(*p)
    if fam == "fp-sequence":
        return fp_sequence(*p)
    if fam == "bounded-words":
        return bounded_words(*p)
    if fam == "bounded-words-shift-system":
        return bounded_words_shift_system(*p)
    if fam == "right-zero":
        return right_zero(*p)
    if fam == "cyclic-group":
        return cyclic_group(*p)
    if fam == "zero-semigroup":
        return zero_semigroup(*p)
    if fam == "pf-translation-system":
        return pf_translation_system(*p)
    if fam == "random-partial":
        return random_partial(*p)
    raise ValueError(f"unknown family {fam!r}")


NAMED_CORPUS = (
    ("pf-disjoint-union(2)", FamilySpec("pf-disjoint-union", (2,))),
    ("fp-sequence(2)", FamilySpec("fp-sequence", (2,))),
    ("bounded-words(2)", FamilySpec("bounded-words", (2,))),
    ("right-zero(2)", FamilySpec("right-zero", (2,))),
    ("right-zero(3)", FamilySpec("right-zero", (3,))),
    ("right-zero(4)", FamilySpec("right-zero", (4,))),
    ("cyclic-group(2)", FamilySpec("cyclic-group", (2,))),
    ("cyclic-group(3)", FamilySpec("cyclic-group", (3,))),
    ("cyclic-group(5)", FamilySpec("cyclic-group", (5,))),
    ("cyclic-group(6)", FamilySpec("cyclic-group", (6,))),
    ("zero-semigroup(2)", FamilySpec("zero-semigroup", (2,))),
    ("zero-semigroup(4)", FamilySpec("zero-semigroup", (4,))),
)


def corpus(seed: int = 1, budget: int = 50) -> list[tuple[str, PartialSemigroup]]:
    """Deterministic instance mix: named families plus seeded random tables.

    The same (seed, budget) always yields byte-identical tables; every
    property suite runs over this list.
    """
    items = [(name, generate(spec)) for name, spec in NAMED_CORPUS]
    rng = random.Random(seed)
    for i in range(budget):
        n = rng.randrange(3, 7)
        density = rng.choice([0.15, 0.3, 0.5, 0.8])
        sub = seed * 100_000 + i
        items.append(
            (f"random-partial(n={n},d={density},seed={sub})",
             random_partial(n, density, sub))
        )
    return items


def dynamical_fixtures() -> list[tuple[str, PartialDynSystem]]:
    """The three standing dynamical fixtures used across the suites."""
    return [
        ("shift(words<=3)", bounded_words_shift_system(3)),
        ("translation(cyclic-2)", translation_system(cyclic_group(2))),
        ("translation(right-zero-3)", translation_system(right_zero(3))),
    ]
