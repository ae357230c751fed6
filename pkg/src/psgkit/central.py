"""Central subsets and their dynamical witnesses.

A subset is central when it meets the idempotents of the smallest ideal.
The dynamical witness realizes the subset as {s : T_s(x) in U} inside a
shift-like system on partial binary indicator functions over the semigroup
with a fresh identity adjoined, where the action pulls an indicator back
along right multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import core, dynamics
from .bitset import SubsetMask, bit_indices
from .core import (
    UNDEFINED,
    CapExceeded,
    InternalCheckError,
    PartialSemigroup,
    PreconditionError,
    subset_cap,
)
from .dynamics import PartialDynSystem, PartialMap

ORBIT_CAP = 50_000


def adjoin_identity(sg: PartialSemigroup) -> PartialSemigroup:
    """Add a fresh two-sided identity as the last element (even when an
    identity already exists); the original table is untouched."""
    n = sg.size
    table = np.full((n + 1, n + 1), UNDEFINED, dtype=np.int16)
    table[:n, :n] = sg.table
    for s in range(n + 1):
        table[n, s] = s
        table[s, n] = s
    names = None
    if sg.names:
        names = list(sg.names) + ["e"]
    out = PartialSemigroup(table, names)
    if not core.validate(out).ok:
        raise InternalCheckError("adjoining an identity broke associativity")
    return out


def is_central(sg: PartialSemigroup, B: SubsetMask) -> bool:
    """B meets the idempotents of the smallest ideal."""
    if B.width != sg.size:
        raise ValueError("subset width must match the semigroup size")
    return bool(core.minimal_idempotents(sg) & B)


@dataclass(frozen=True)
class IndicatorPoint:
    """A 0/1 function on a nonempty subset of the ambient carrier."""

    width: int
    domain: int  # bitmask over the ambient carrier
    ones: int    # bitmask of points mapped to 1; subset of domain

    def __post_init__(self):
        if self.domain == 0:
            raise ValueError("indicator domain must be nonempty")
        if self.ones & ~self.domain:
            raise ValueError("values set outside the domain")

    def value(self, t: int) -> int:
        if not self.domain >> t & 1:
            raise KeyError(f"{t} outside the indicator domain")
        return self.ones >> t & 1


def indicator_from_subset(ambient: PartialSemigroup, B: SubsetMask) -> IndicatorPoint:
    """The characteristic function of B, total on the ambient carrier."""
    full = (1 << ambient.size) - 1
    return IndicatorPoint(ambient.size, full, B.bits)


def indicator_apply(
    ambient: PartialSemigroup, s: int, f: IndicatorPoint
) -> Optional[IndicatorPoint]:
    """Pull f back along right multiplication by s.

    Defined when the domain of f contains L(s)*s; the result lives on
    L(s) and sends t to f(t*s).  Returns None when undefined.
    """
    ls = ambient.left_masks[s]
    needed = ambient.left_absorb_masks[s]
    if needed & ~f.domain:
        return None
    ones = 0
    for t in bit_indices(ls):
        if f.ones >> ambient.product(t, s) & 1:
            ones |= 1 << t
    return IndicatorPoint(ambient.size, ls, ones)


def indicator_orbit_system(
    sg: PartialSemigroup,
    ambient: PartialSemigroup,
    start: IndicatorPoint,
    cap: int = ORBIT_CAP,
) -> tuple[PartialDynSystem, list[IndicatorPoint]]:
    """The reachable part of the indicator shift, as a concrete system.

    Acting elements are those of sg (the original semigroup); the products
    inside the pulled-back formula are taken in the ambient semigroup.
    The full indicator space is never materialized.
    """
    points = [start]
    index = {start: 0}
    frontier = [start]
    while frontier:
        fresh = []
        for f in frontier:
            for s in range(sg.size):
                g = indicator_apply(ambient, s, f)
                if g is not None and g not in index:
                    if len(points) >= cap:
                        raise CapExceeded("indicator orbit exceeded the cap")
                    index[g] = len(points)
                    points.append(g)
                    fresh.append(g)
        frontier = fresh
    maps = []
    for s in range(sg.size):
        pairs = {}
        for i, f in enumerate(points):
            g = indicator_apply(ambient, s, f)
            if g is not None:
                pairs[i] = index[g]
        maps.append(PartialMap.from_pairs(len(points), pairs))
    names = [f"f{i}" for i in range(len(points))]
    system = PartialDynSystem(sg, len(points), maps, point_names=names)
    return system, points


@dataclass
class CentralWitness:
    sg: PartialSemigroup
    system: PartialDynSystem
    points: list[IndicatorPoint]
    x: int                      # index of the starting indicator
    y: int                      # index of the recurrent proximal partner
    neighborhood: SubsetMask    # U, a point set containing y
    recovered: SubsetMask       # {s : T_s(x) in U}
    idempotent: int             # the minimal idempotent used to build y


def _recovered_set(system: PartialDynSystem, x: int, U: SubsetMask) -> SubsetMask:
    bits = 0
    for s in bit_indices(system.acting_masks[x]):
        if int(system.maps[s].image[x]) in U:
            bits |= 1 << s
    return SubsetMask(system.sg.size, bits)


def build_central_witness(sg: PartialSemigroup, B: SubsetMask) -> CentralWitness:
    """Construct the dynamical witness for a central set B.

    Follows the constructive route: x is the indicator of B over the
    identity-adjoined carrier, y its image under a minimal idempotent u
    inside B, and U the reachable points agreeing with y at the adjoined
    identity.  The three witness clauses are replayed before returning;
    a replay failure is an internal error since the theory guarantees it.
    """
    if not is_central(sg, B):
        raise PreconditionError("subset is not central")
    ambient = adjoin_identity(sg)
    e = sg.size
    u = next(iter(core.minimal_idempotents(sg) & B))
    x_point = indicator_from_subset(ambient, SubsetMask(ambient.size, B.bits))
    system, points = indicator_orbit_system(sg, ambient, x_point)
    index = {f: i for i, f in enumerate(points)}
    y_point = indicator_apply(ambient, u, x_point)
    if y_point is None or y_point not in index:
        raise InternalCheckError("image under the minimal idempotent not reachable")
    x, y = index[x_point], index[y_point]
    if y_point.value(e) != 1:
        raise InternalCheckError("recurrent point does not mark the identity")
    u_bits = 0
    for i, f in enumerate(points):
        if f.domain >> e & 1 and f.value(e) == y_point.value(e):
            u_bits |= 1 << i
    neighborhood = SubsetMask(len(points), u_bits)
    recovered = _recovered_set(system, x, neighborhood)
    witness = CentralWitness(
        sg, system, points, x, y, neighborhood, recovered, u
    )
    if recovered != B:
        raise InternalCheckError("witness does not recover the subset")
    if not verify_witness(witness):
        raise InternalCheckError("constructed witness failed verification")
    return witness


def verify_witness(w: CentralWitness) -> bool:
    """Re-evaluate the three witness clauses from scratch:
    U contains y, y is uniformly recurrent, (x, y) is proximal, and the
    recovered set matches {s : T_s(x) in U}."""
    if w.y not in w.neighborhood:
        return False
    if w.y not in dynamics.uniformly_recurrent_points(w.system):
        return False
    if not dynamics.is_proximal(w.system, w.x, w.y):
        return False
    return _recovered_set(w.system, w.x, w.neighborhood) == w.recovered


def candidate_witnesses(
    sg: PartialSemigroup, B: SubsetMask
) -> list[tuple[CentralWitness, str]]:
    """All canonical witness attempts for B: one per minimal idempotent,
    each with the identity-mark neighborhood and the singleton {y}."""
    ambient = adjoin_identity(sg)
    e = sg.size
    x_point = indicator_from_subset(ambient, SubsetMask(ambient.size, B.bits))
    system, points = indicator_orbit_system(sg, ambient, x_point)
    index = {f: i for i, f in enumerate(points)}
    x = index[x_point]
    out = []
    for u in core.minimal_idempotents(sg):
        y_point = indicator_apply(ambient, u, x_point)
        if y_point is None:
            continue
        y = index[y_point]
        mark_bits = 0
        for i, f in enumerate(points):
            if f.domain >> e & 1 and f.value(e) == y_point.value(e):
                mark_bits |= 1 << i
        for label, bits in (
            ("identity-mark", mark_bits),
            ("singleton", 1 << y),
        ):
            nbhd = SubsetMask(len(points), bits)
            w = CentralWitness(
                sg, system, points, x, y, nbhd,
                _recovered_set(system, x, nbhd), u,
            )
            out.append((w, label))
    return out


def central_dynamical_check(sg: PartialSemigroup, cap: Optional[int] = None) -> bool:
    """Sweep every subset B: central ones must yield verified witnesses
    recovering exactly B; non-central ones must defeat every canonical
    candidate, matching the algebraic reading of sufficiency (a verified
    witness would put a minimal idempotent inside B)."""
    if sg.size > subset_cap(cap):
        raise CapExceeded(f"size {sg.size} exceeds the subset-sweep cap")
    for b_bits in range(1 << sg.size):
        B = SubsetMask(sg.size, b_bits)
        if is_central(sg, B):
            w = build_central_witness(sg, B)
            if not (verify_witness(w) and w.recovered == B):
                return False
        else:
            if bool(core.minimal_idempotents(sg) & B):
                return False
            for w, _label in candidate_witnesses(sg, B):
                if verify_witness(w) and w.recovered == B:
                    return False
    return True
