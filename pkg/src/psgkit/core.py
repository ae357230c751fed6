"""Finite partial semigroups: representation, validation, ideals, idempotents.

A partial semigroup is a finite set {0, .., n-1} with an n x n table whose
entries are element indices or UNDEFINED (-1).  Weak associativity means
(x*y)*z and x*(y*z) are defined for exactly the same triples and agree; a
composite counts as defined only when every inner product is defined.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from . import _kernels
from .bitset import SubsetMask, bit_indices

UNDEFINED = -1

DEFAULT_CAP = 16


class StructureError(ValueError):
    """Malformed table data (shape or entry out of range)."""


class PreconditionError(ValueError):
    """An operation was called with inputs violating its stated precondition."""


class CapExceeded(RuntimeError):
    """An exhaustive sweep was refused because the instance exceeds the cap."""


class InternalCheckError(AssertionError):
    """A verification the theory guarantees has failed; indicates a bug."""


def subset_cap(cap: Optional[int] = None) -> int:
    """Effective cap for 2^n sweeps: explicit arg, PSG_CAP env, or default."""
    if cap is not None:
        return cap
    env = os.environ.get("PSG_CAP", "").strip()
    if env:
        return int(env)
    return DEFAULT_CAP


class PartialSemigroup:
    """Immutable finite partial semigroup over indices 0..size-1."""

    def __init__(self, table, names: Optional[list[str]] = None):
        arr = np.asarray(
            [[UNDEFINED if v is None else v for v in row] for row in table],
            dtype=np.int16,
        )
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise StructureError(f"table must be square, got shape {arr.shape}")
        n = arr.shape[0]
        if n == 0:
            raise StructureError("carrier must be nonempty")
        if ((arr < UNDEFINED) | (arr >= n)).any():
            bad = np.argwhere((arr < UNDEFINED) | (arr >= n))[0]
            raise StructureError(
                f"table entry at ({bad[0]}, {bad[1]}) out of range"
            )
        if names is not None:
            names = [str(s) for s in names]
            if len(names) != n:
                raise StructureError("names length must equal size")
        arr.setflags(write=False)
        self.size = n
        self.table = arr
        self.names = names

    def product(self, a: int, b: int) -> int:
        """Raw table lookup; UNDEFINED (-1) when the product does not exist."""
        return int(self.table[a, b])

    @cached_property
    def right_masks(self) -> list[int]:
        """right_masks[x] = bitmask of R(x) = {s : x*s defined}."""
        defined = self.table != UNDEFINED
        weights = 1 << np.arange(self.size, dtype=object)
        return [int((defined[x] * weights).sum()) for x in range(self.size)]

    @cached_property
    def left_masks(self) -> list[int]:
        """left_masks[x] = bitmask of L(x) = {s : s*x defined}."""
        defined = self.table != UNDEFINED
        weights = 1 << np.arange(self.size, dtype=object)
        return [int((defined[:, x] * weights).sum()) for x in range(self.size)]

    @cached_property
    def left_absorb_masks(self) -> list[int]:
        """left_absorb_masks[x] = bitmask of L(x)*x = {y*x : y in L(x)}."""
        out = []
        for x in range(self.size):
            bits = 0
            for y in bit_indices(self.left_masks[x]):
                bits |= 1 << self.product(y, x)
            out.append(bits)
        return out

    @cached_property
    def right_absorb_masks(self) -> list[int]:
        """right_absorb_masks[x] = bitmask of x*R(x)."""
        out = []
        for x in range(self.size):
            bits = 0
            for y in bit_indices(self.right_masks[x]):
                bits |= 1 << self.product(x, y)
            out.append(bits)
        return out

    def transpose(self) -> "PartialSemigroup":
        return PartialSemigroup(self.table.T, self.names)

    def restrict(self, mask: SubsetMask) -> tuple["PartialSemigroup", list[int]]:
        """Induced sub-semigroup on a product-closed subset.

        Returns the subtable plus the list mapping new indices to old ones.
        Raises PreconditionError if some defined product escapes the subset.
        """
        elems = mask.indices()
        if not elems:
            raise PreconditionError("cannot restrict to the empty set")
        pos = {e: i for i, e in enumerate(elems)}
        k = len(elems)
        sub = np.full((k, k), UNDEFINED, dtype=np.int16)
        for i, a in enumerate(elems):
            for j, b in enumerate(elems):
                v = self.product(a, b)
                if v != UNDEFINED:
                    if v not in pos:
                        raise PreconditionError(
                            f"subset not closed: {a}*{b} = {v} escapes"
                        )
                    sub[i, j] = pos[v]
        names = [self.element_name(e) for e in elems]
        return PartialSemigroup(sub, names), elems

    def element_name(self, x: int) -> str:
        return self.names[x] if self.names else str(x)

    def mask(self, indices) -> SubsetMask:
        return SubsetMask.from_indices(self.size, indices)

    def full_mask(self) -> SubsetMask:
        return SubsetMask.full(self.size)

    def __repr__(self) -> str:
        return f"PartialSemigroup(size={self.size})"


@dataclass(frozen=True)
class Violation:
    x: int
    y: int
    z: int
    reason: str  # "one-side-undefined" | "unequal"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]


_REASONS = ("one-side-undefined", "unequal")


def validate(sg: PartialSemigroup) -> ValidationReport:
    """Exhaustive weak-associativity scan over all size^3 triples."""
    rows = _kernels.assoc_violations(sg.table)
    violations = tuple(
        Violation(int(x), int(y), int(z), _REASONS[int(code)])
        for x, y, z, code in rows
    )
    return ValidationReport(ok=not violations, violations=violations)


def right_set(sg: PartialSemigroup, x: int) -> SubsetMask:
    """R(x): everything composable on the right of x."""
    return SubsetMask(sg.size, sg.right_masks[x])


def left_set(sg: PartialSemigroup, x: int) -> SubsetMask:
    """L(x): everything composable on the left of x."""
    return SubsetMask(sg.size, sg.left_masks[x])


def _family_intersection(masks: list[int], H: SubsetMask, width: int) -> int:
    bits = (1 << width) - 1
    for s in H:
        bits &= masks[s]
    return bits


def right_set_family(sg: PartialSemigroup, H: SubsetMask) -> SubsetMask:
    """R(H), the intersection of R(s) over s in H; H must be nonempty."""
    if not H:
        raise PreconditionError("H must be nonempty")
    return SubsetMask(sg.size, _family_intersection(sg.right_masks, H, sg.size))


def left_set_family(sg: PartialSemigroup, H: SubsetMask) -> SubsetMask:
    if not H:
        raise PreconditionError("H must be nonempty")
    return SubsetMask(sg.size, _family_intersection(sg.left_masks, H, sg.size))


def universal_right_set(sg: PartialSemigroup) -> SubsetMask:
    """Intersection of all R(s): the elements composable after everything.

    This is the finite stand-in for the right-composability core; it is
    nonempty exactly when the semigroup is right adequate.
    """
    return right_set_family(sg, sg.full_mask())


def universal_left_set(sg: PartialSemigroup) -> SubsetMask:
    return left_set_family(sg, sg.full_mask())


def is_right_adequate(sg: PartialSemigroup) -> bool:
    """True iff R(H) is nonempty for every nonempty H; by antitonicity of
    R over inclusion this reduces to R(S) being nonempty."""
    return bool(universal_right_set(sg))


def is_left_adequate(sg: PartialSemigroup) -> bool:
    return bool(universal_left_set(sg))


def is_adequate(sg: PartialSemigroup) -> bool:
    return is_right_adequate(sg) and is_left_adequate(sg)


def quotient_set(sg: PartialSemigroup, s: int, A: SubsetMask) -> SubsetMask:
    """s^{-1}A = {t in R(s) : s*t in A}."""
    bits = 0
    for t in bit_indices(sg.right_masks[s]):
        if sg.product(s, t) in A:
            bits |= 1 << t
    return SubsetMask(sg.size, bits)


def union_quotients(sg: PartialSemigroup, H: SubsetMask, A: SubsetMask) -> SubsetMask:
    """Union of t^{-1}A over t in H."""
    bits = 0
    for t in H:
        bits |= quotient_set(sg, t, A).bits
    return SubsetMask(sg.size, bits)


def principal_product(sg: PartialSemigroup, a: int, b: int) -> Optional[int]:
    """The product a*b, or None when undefined (undefined is a value here)."""
    v = sg.product(a, b)
    return None if v == UNDEFINED else v


def idempotents(sg: PartialSemigroup) -> SubsetMask:
    bits = 0
    for x in range(sg.size):
        if sg.product(x, x) == x:
            bits |= 1 << x
    return SubsetMask(sg.size, bits)


def _require_nonempty(I: SubsetMask) -> None:
    if not I:
        raise PreconditionError("ideals are nonempty by convention")


def is_left_ideal(sg: PartialSemigroup, I: SubsetMask) -> bool:
    """y*x stays in I for every x in I and y in L(x)."""
    _require_nonempty(I)
    for x in I:
        if sg.left_absorb_masks[x] & ~I.bits:
            return False
    return True


def is_right_ideal(sg: PartialSemigroup, I: SubsetMask) -> bool:
    _require_nonempty(I)
    for x in I:
        if sg.right_absorb_masks[x] & ~I.bits:
            return False
    return True


def is_ideal(sg: PartialSemigroup, I: SubsetMask) -> bool:
    return is_left_ideal(sg, I) and is_right_ideal(sg, I)


def left_ideal_closure(sg: PartialSemigroup, seed_bits: int) -> int:
    """Smallest superset of the seed closed under defined left multiplication."""
    cur = seed_bits
    while True:
        nxt = cur
        for z in bit_indices(cur):
            nxt |= sg.left_absorb_masks[z]
        if nxt == cur:
            return cur
        cur = nxt


def right_ideal_closure(sg: PartialSemigroup, seed_bits: int) -> int:
    cur = seed_bits
    while True:
        nxt = cur
        for z in bit_indices(cur):
            nxt |= sg.right_absorb_masks[z]
        if nxt == cur:
            return cur
        cur = nxt


def ideal_closure(sg: PartialSemigroup, x: int) -> SubsetMask:
    """Smallest two-sided ideal containing x."""
    cur = 1 << x
    while True:
        nxt = cur
        for z in bit_indices(cur):
            nxt |= sg.left_absorb_masks[z] | sg.right_absorb_masks[z]
        if nxt == cur:
            return SubsetMask(sg.size, cur)
        cur = nxt


def principal_ideals(sg: PartialSemigroup, x: int) -> tuple[SubsetMask, SubsetMask, SubsetMask]:
    """(L(x)*x, x*R(x), two-sided closure of S*x*S); empty masks allowed."""
    left = SubsetMask(sg.size, sg.left_absorb_masks[x])
    right = SubsetMask(sg.size, sg.right_absorb_masks[x])
    sxs = 0
    for y in bit_indices(sg.left_masks[x]):
        yx = sg.product(y, x)
        for z in bit_indices(sg.right_masks[yx]):
            sxs |= 1 << sg.product(yx, z)
    two_sided = sxs
    while True:
        nxt = two_sided
        for z in bit_indices(two_sided):
            nxt |= sg.left_absorb_masks[z] | sg.right_absorb_masks[z]
        if nxt == two_sided:
            break
        two_sided = nxt
    return left, right, SubsetMask(sg.size, two_sided)


def minimal_left_ideals(sg: PartialSemigroup) -> list[SubsetMask]:
    """All minimal left ideals.

    Candidates are the left-multiplication closures of L(x)*x (which need
    not contain x itself) together with the singletons {x} that absorb
    trivially (L(x)*x inside {x}, including the vacuous L(x) = empty case).
    Every minimal left ideal occurs among these and the inclusion-minimal
    candidates are exactly the minimal ones; tests cross-check against
    exhaustive enumeration.
    """
    candidates = set()
    for x in range(sg.size):
        seed = sg.left_absorb_masks[x]
        if seed:
            candidates.add(left_ideal_closure(sg, seed))
        if seed & ~(1 << x) == 0:
            candidates.add(1 << x)
    minimal = [
        c
        for c in candidates
        if not any(other != c and other & ~c == 0 for other in candidates)
    ]
    return [SubsetMask(sg.size, bits) for bits in sorted(minimal)]


def minimal_right_ideals(sg: PartialSemigroup) -> list[SubsetMask]:
    return [
        SubsetMask(sg.size, m.bits) for m in minimal_left_ideals(sg.transpose())
    ]


def is_minimal_left_ideal(sg: PartialSemigroup, L: SubsetMask) -> bool:
    """L is a left ideal containing no strictly smaller one (polynomial check)."""
    if not L or not is_left_ideal(sg, L):
        return False
    if len(L) == 1:
        return True
    for z in L:
        seed = sg.left_absorb_masks[z]
        if seed == 0 or left_ideal_closure(sg, seed) != L.bits:
            return False
    return True


def enumerate_left_ideals(sg: PartialSemigroup, cap: Optional[int] = None) -> list[SubsetMask]:
    """Every left ideal, by exhaustive subset sweep (gated by the cap)."""
    if sg.size > subset_cap(cap):
        raise CapExceeded(f"size {sg.size} exceeds subset-sweep cap")
    required = np.array(sg.left_absorb_masks, dtype=np.int64)
    return [SubsetMask(sg.size, int(m)) for m in _kernels.closed_subsets(required)]


def enumerate_right_ideals(sg: PartialSemigroup, cap: Optional[int] = None) -> list[SubsetMask]:
    if sg.size > subset_cap(cap):
        raise CapExceeded(f"size {sg.size} exceeds subset-sweep cap")
    required = np.array(sg.right_absorb_masks, dtype=np.int64)
    return [SubsetMask(sg.size, int(m)) for m in _kernels.closed_subsets(required)]


def enumerate_ideals(sg: PartialSemigroup, cap: Optional[int] = None) -> list[SubsetMask]:
    if sg.size > subset_cap(cap):
        raise CapExceeded(f"size {sg.size} exceeds subset-sweep cap")
    required = np.array(
        [l | r for l, r in zip(sg.left_absorb_masks, sg.right_absorb_masks)],
        dtype=np.int64,
    )
    return [SubsetMask(sg.size, int(m)) for m in _kernels.closed_subsets(required)]


def smallest_ideal(sg: PartialSemigroup) -> Optional[SubsetMask]:
    """The smallest two-sided ideal, when one exists; None otherwise.

    Every ideal contains the principal ideal closure of each of its
    members, so the intersection of all ideals equals the intersection of
    the size-many principal closures.  A smallest ideal exists exactly when
    that intersection is itself a nonempty ideal, and then it is the
    smallest one; no subset sweep is needed.  For adequate semigroups this
    coincides with the union of the minimal left ideals, which is verified
    as a property, not assumed here.
    """
    meet = (1 << sg.size) - 1
    for y in range(sg.size):
        meet &= ideal_closure(sg, y).bits
        if not meet:
            return None
    candidate = SubsetMask(sg.size, meet)
    if not is_ideal(sg, candidate):
        return None
    return candidate


def minimal_idempotents(sg: PartialSemigroup) -> SubsetMask:
    """Idempotents lying in the smallest ideal; empty when it is absent."""
    k = smallest_ideal(sg)
    if k is None:
        return SubsetMask.empty(sg.size)
    return idempotents(sg) & k
