"""Finite partial dynamical systems: a partial semigroup acting by partial
self-maps of a finite point set, plus map algebra and the enveloping
semigroup built from total extensions on X + {inf}."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from . import _kernels, core
from .bitset import SubsetMask, bit_indices
from .core import (
    UNDEFINED,
    CapExceeded,
    PartialSemigroup,
    PreconditionError,
    StructureError,
    subset_cap,
)

ENVELOPE_CAP = 20_000


class PartialMap:
    """Partial self-map of {0..carrier-1}: a domain bitmask and images."""

    __slots__ = ("carrier", "domain", "image")

    def __init__(self, carrier: int, domain: int, image):
        image = np.asarray(image, dtype=np.int16)
        if image.shape != (carrier,):
            raise StructureError("image array must have one slot per point")
        for x in range(carrier):
            if domain >> x & 1:
                if not 0 <= image[x] < carrier:
                    raise StructureError(f"image of {x} out of range")
            elif image[x] != UNDEFINED:
                raise StructureError(f"image set outside domain at {x}")
        image.setflags(write=False)
        self.carrier = carrier
        self.domain = domain
        self.image = image

    @classmethod
    def from_pairs(cls, carrier: int, pairs: dict[int, int]) -> "PartialMap":
        image = np.full(carrier, UNDEFINED, dtype=np.int16)
        domain = 0
        for x, y in pairs.items():
            domain |= 1 << x
            image[x] = y
        return cls(carrier, domain, image)

    @classmethod
    def identity(cls, carrier: int) -> "PartialMap":
        return cls(carrier, (1 << carrier) - 1, np.arange(carrier, dtype=np.int16))

    def defined_at(self, x: int) -> bool:
        return bool(self.domain >> x & 1)

    def __call__(self, x: int) -> int:
        if not self.defined_at(x):
            raise KeyError(f"point {x} outside domain")
        return int(self.image[x])

    def domain_mask(self) -> SubsetMask:
        return SubsetMask(self.carrier, self.domain)

    def key(self) -> tuple:
        return (self.carrier, self.domain, self.image.tobytes())

    def __eq__(self, other) -> bool:
        return isinstance(other, PartialMap) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        pairs = {x: int(self.image[x]) for x in bit_indices(self.domain)}
        return f"PartialMap({self.carrier}, {pairs})"


class TotalMapInf:
    """Total self-map of X + {inf}; inf is index carrier and is fixed."""

    __slots__ = ("carrier", "values")

    def __init__(self, carrier: int, values):
        values = np.asarray(values, dtype=np.int16)
        if values.shape != (carrier + 1,):
            raise StructureError("values must cover X plus the added point")
        if ((values < 0) | (values > carrier)).any():
            raise StructureError("value out of range")
        if values[carrier] != carrier:
            raise StructureError("the added point must be fixed")
        values.setflags(write=False)
        self.carrier = carrier
        self.values = values

    def key(self) -> tuple:
        return (self.carrier, self.values.tobytes())

    def __eq__(self, other) -> bool:
        return isinstance(other, TotalMapInf) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def compose(self, other: "TotalMapInf") -> "TotalMapInf":
        """self after other."""
        return TotalMapInf(self.carrier, self.values[other.values])

    def __repr__(self) -> str:
        return f"TotalMapInf({list(map(int, self.values))})"


def infinity_extend(f: PartialMap) -> TotalMapInf:
    """Send everything outside the domain (and inf itself) to inf."""
    n = f.carrier
    values = np.full(n + 1, n, dtype=np.int16)
    for x in bit_indices(f.domain):
        values[x] = f.image[x]
    return TotalMapInf(n, values)


def restrict(g: TotalMapInf) -> PartialMap:
    """Inverse of infinity_extend; rejects maps not fixing the added point."""
    n = g.carrier
    domain = 0
    image = np.full(n, UNDEFINED, dtype=np.int16)
    for x in range(n):
        if g.values[x] != n:
            domain |= 1 << x
            image[x] = g.values[x]
    return PartialMap(n, domain, image)


def compose_partial(f: PartialMap, g: PartialMap) -> PartialMap:
    """f after g, on {x in dom g : g(x) in dom f}; may be empty."""
    if f.carrier != g.carrier:
        raise PreconditionError("carriers differ")
    n = f.carrier
    domain = 0
    image = np.full(n, UNDEFINED, dtype=np.int16)
    for x in bit_indices(g.domain):
        gx = int(g.image[x])
        if f.defined_at(gx):
            domain |= 1 << x
            image[x] = f.image[gx]
    return PartialMap(n, domain, image)


class PartialDynSystem:
    """A partial semigroup acting by partial maps on a finite point set.

    Construction checks shapes only; the axioms are examined by
    validate_pspds, never assumed.
    """

    def __init__(
        self,
        sg: PartialSemigroup,
        points: int,
        maps: list[PartialMap],
        point_names: Optional[list[str]] = None,
    ):
        if points < 1:
            raise StructureError("point set must be nonempty")
        if len(maps) != sg.size:
            raise StructureError("one map per semigroup element required")
        for m in maps:
            if m.carrier != points:
                raise StructureError("map carrier mismatch")
        if point_names is not None and len(point_names) != points:
            raise StructureError("point name count mismatch")
        self.sg = sg
        self.points = points
        self.maps = list(maps)
        self.point_names = point_names

    @cached_property
    def acting_masks(self) -> list[int]:
        """acting_masks[x] = bitmask of {s : T_s defined at x}."""
        out = []
        for x in range(self.points):
            bits = 0
            for s, m in enumerate(self.maps):
                if m.defined_at(x):
                    bits |= 1 << s
            out.append(bits)
        return out

    def acting_set(self, x: int) -> SubsetMask:
        return SubsetMask(self.sg.size, self.acting_masks[x])

    def point_name(self, x: int) -> str:
        return self.point_names[x] if self.point_names else str(x)

    def point_mask(self, indices) -> SubsetMask:
        return SubsetMask.from_indices(self.points, indices)

    def __repr__(self) -> str:
        return f"PartialDynSystem(|S|={self.sg.size}, |X|={self.points})"


@dataclass(frozen=True)
class CompositionViolation:
    s: int
    t: int
    x: int
    reason: str  # "value-mismatch" | "missing-composite" | "missing-stepwise"


@dataclass(frozen=True)
class PspdsReport:
    ok: bool
    composition_violations: tuple[CompositionViolation, ...]
    empty_map_domains: tuple[int, ...]       # elements s with Dom(T_s) empty
    unreached_points: tuple[int, ...]        # points x no element acts on
    common_acting_set: SubsetMask            # intersection of all acting sets
    notes: tuple[str, ...]


def validate_pspds(d: PartialDynSystem) -> PspdsReport:
    """Check the action axioms.

    Composition compatibility (both definedness directions, mirroring weak
    associativity) decides ok.  Nonempty map domains and the nonempty-
    acting-set/common-intersection conditions are reported but are only
    advisory: the standing fixtures (shift systems, translations of
    non-adequate tables) violate them while remaining usable.
    """
    violations = []
    sg = d.sg
    for s in range(sg.size):
        for t in range(sg.size):
            st = sg.product(s, t)
            if st == UNDEFINED:
                continue
            ts, tt, tst = d.maps[s], d.maps[t], d.maps[st]
            for x in range(d.points):
                step = tt.defined_at(x) and ts.defined_at(int(tt.image[x]))
                whole = tst.defined_at(x)
                if step and not whole:
                    violations.append(
                        CompositionViolation(s, t, x, "missing-composite")
                    )
                elif whole and not step:
                    violations.append(
                        CompositionViolation(s, t, x, "missing-stepwise")
                    )
                elif step and whole:
                    if int(ts.image[int(tt.image[x])]) != int(tst.image[x]):
                        violations.append(
                            CompositionViolation(s, t, x, "value-mismatch")
                        )
    empty_domains = tuple(s for s in range(sg.size) if d.maps[s].domain == 0)
    unreached = tuple(x for x in range(d.points) if d.acting_masks[x] == 0)
    common = (1 << sg.size) - 1
    for x in range(d.points):
        common &= d.acting_masks[x]
    notes = (
        "continuity and compactness are automatic for finite discrete points",
    )
    return PspdsReport(
        ok=not violations,
        composition_violations=tuple(violations),
        empty_map_domains=empty_domains,
        unreached_points=unreached,
        common_acting_set=SubsetMask(sg.size, common),
        notes=notes,
    )


def translation_system(sg: PartialSemigroup) -> PartialDynSystem:
    """The semigroup acting on itself by left multiplication."""
    maps = []
    for s in range(sg.size):
        image = np.full(sg.size, UNDEFINED, dtype=np.int16)
        for x in bit_indices(sg.right_masks[s]):
            image[x] = sg.product(s, x)
        maps.append(PartialMap(sg.size, sg.right_masks[s], image))
    names = [sg.element_name(x) for x in range(sg.size)]
    return PartialDynSystem(sg, sg.size, maps, point_names=names)


def is_translation_system(d: PartialDynSystem) -> bool:
    if d.points != d.sg.size:
        return False
    return all(
        d.maps[s] == m for s, m in enumerate(translation_system(d.sg).maps)
    )


@dataclass
class EnvelopingSemigroup:
    """Closure of the extended action maps under composition."""

    elements: list[TotalMapInf]
    generator_index: dict[int, int]
    cayley: PartialSemigroup  # total table: i*j = index of elements[i] after elements[j]

    def index_of(self, m: TotalMapInf) -> int:
        return self.elements.index(m)


def enveloping(d: PartialDynSystem, cap: int = ENVELOPE_CAP) -> EnvelopingSemigroup:
    """Close the extended maps under composition by breadth-first fixpoint.

    Elements are kept in discovery order with a canonical generator order;
    exceeding the cap raises CapExceeded.
    """
    gens = [infinity_extend(m) for m in d.maps]
    elements: list[TotalMapInf] = []
    seen: dict[tuple, int] = {}
    for g in gens:
        if g.key() not in seen:
            seen[g.key()] = len(elements)
            elements.append(g)
    generator_index = {s: seen[g.key()] for s, g in enumerate(gens)}
    frontier = list(range(len(elements)))
    while frontier:
        fresh = []
        for i in frontier:
            for j in range(len(elements)):
                for prod in (elements[i].compose(elements[j]),
                             elements[j].compose(elements[i])):
                    if prod.key() not in seen:
                        if len(elements) >= cap:
                            raise CapExceeded(
                                f"enveloping closure exceeded {cap} maps"
                            )
                        seen[prod.key()] = len(elements)
                        elements.append(prod)
                        fresh.append(len(elements) - 1)
        frontier = fresh
    k = len(elements)
    table = np.empty((k, k), dtype=np.int16)
    for i in range(k):
        for j in range(k):
            table[i, j] = seen[elements[i].compose(elements[j]).key()]
    env = EnvelopingSemigroup(elements, generator_index, PartialSemigroup(table))
    for s in range(d.sg.size):
        for t in range(d.sg.size):
            st = d.sg.product(s, t)
            if st == UNDEFINED:
                continue
            composed = elements[generator_index[s]].compose(
                elements[generator_index[t]]
            )
            if composed != elements[generator_index[st]]:
                raise core.InternalCheckError(
                    "generator map is not a partial homomorphism; "
                    "validate the system first"
                )
    return env


def orbit(d: PartialDynSystem, x: int) -> SubsetMask:
    """{T_s(x) : s acts on x}; contains x only when some map fixes it."""
    bits = 0
    for s in bit_indices(d.acting_masks[x]):
        bits |= 1 << int(d.maps[s].image[x])
    return SubsetMask(d.points, bits)


def _image_requirements(d: PartialDynSystem) -> list[int]:
    req = [0] * d.points
    for m in d.maps:
        for x in bit_indices(m.domain):
            req[x] |= 1 << int(m.image[x])
    return req


def invariant_sets(
    d: PartialDynSystem, cap: Optional[int] = None
) -> list[SubsetMask]:
    """All nonempty invariant point sets (images of members stay inside).

    Exhaustive sweep up to the cap; beyond it, falls back to the forward
    closures of single points (every minimal invariant set still appears).
    """
    req = _image_requirements(d)
    if d.points <= subset_cap(cap):
        masks = _kernels.closed_subsets(np.array(req, dtype=np.int64))
        return [SubsetMask(d.points, int(m)) for m in masks]
    found = sorted({_forward_closure(req, 1 << x) for x in range(d.points)})
    return [SubsetMask(d.points, m) for m in found]


def _forward_closure(req: list[int], seed: int) -> int:
    cur = seed
    while True:
        nxt = cur
        for x in bit_indices(cur):
            nxt |= req[x]
        if nxt == cur:
            return cur
        cur = nxt


def minimal_subsystems(d: PartialDynSystem) -> list[SubsetMask]:
    """Inclusion-minimal nonempty invariant sets.

    Each equals the forward closure of one of its points, so the minimal
    members of {closure({x})} are exactly the minimal subsystems.
    """
    req = _image_requirements(d)
    closures = sorted({_forward_closure(req, 1 << x) for x in range(d.points)})
    minimal = [
        c for c in closures
        if not any(o != c and o & ~c == 0 for o in closures)
    ]
    return [SubsetMask(d.points, m) for m in minimal]


def left_ideal_correspondence(d: PartialDynSystem, cap: Optional[int] = None) -> bool:
    """For the self-translation system: invariant sets are exactly the left
    ideals and minimal subsystems exactly the minimal left ideals."""
    if not is_translation_system(d):
        raise PreconditionError("requires the translation system of its semigroup")
    inv = {m.bits for m in invariant_sets(d, cap)}
    ideals = {m.bits for m in core.enumerate_left_ideals(d.sg, cap)}
    if inv != ideals:
        return False
    min_sub = {m.bits for m in minimal_subsystems(d)}
    min_ideals = {m.bits for m in core.minimal_left_ideals(d.sg)}
    return min_sub == min_ideals


def return_set(d: PartialDynSystem, y: int) -> SubsetMask:
    """{s acting on y : T_s(y) = y}, the returns into the minimal
    neighborhood {y}."""
    bits = 0
    for s in bit_indices(d.acting_masks[y]):
        if int(d.maps[s].image[y]) == y:
            bits |= 1 << s
    return SubsetMask(d.sg.size, bits)


def uniformly_recurrent_points(d: PartialDynSystem) -> SubsetMask:
    """Points whose return set into {y} is partially syndetic.

    Finite discrete topology makes {y} the smallest neighborhood, and
    partial syndeticity is upward closed, so checking {y} suffices.
    """
    from .largeness import is_partially_syndetic

    bits = 0
    for y in range(d.points):
        if is_partially_syndetic(d.sg, return_set(d, y)).holds:
            bits |= 1 << y
    return SubsetMask(d.points, bits)


def proximal_pairs(d: PartialDynSystem) -> list[tuple[int, int]]:
    """Unordered point pairs glued by some commonly-acting element."""
    out = []
    for x in range(d.points):
        for y in range(x, d.points):
            both = d.acting_masks[x] & d.acting_masks[y]
            for s in bit_indices(both):
                if int(d.maps[s].image[x]) == int(d.maps[s].image[y]):
                    out.append((x, y))
                    break
    return out


def is_proximal(d: PartialDynSystem, x: int, y: int) -> bool:
    both = d.acting_masks[x] & d.acting_masks[y]
    return any(
        int(d.maps[s].image[x]) == int(d.maps[s].image[y])
        for s in bit_indices(both)
    )


def recurrence_equivalences_check(d: PartialDynSystem) -> bool:
    """Per point, four characterizations of uniform recurrence must agree:

    (a) the return set into {x} is partially syndetic;
    (b) some member u of some minimal left ideal acts on x with T_u(x) = x;
    (c) same with u idempotent;
    (d) x = T_e(y) for some point y and idempotent e in a minimal left ideal.
    """
    mins = core.minimal_left_ideals(d.sg)
    if not mins:
        raise PreconditionError("no minimal left ideal")
    idem = core.idempotents(d.sg)
    ur = uniformly_recurrent_points(d)
    ideal_union = 0
    for m in mins:
        ideal_union |= m.bits
    idem_in_min = idem.bits & ideal_union
    for x in range(d.points):
        a = x in ur
        b = any(
            int(d.maps[u].image[x]) == x
            for u in bit_indices(ideal_union & d.acting_masks[x])
        )
        c = any(
            int(d.maps[e].image[x]) == x
            for e in bit_indices(idem_in_min & d.acting_masks[x])
        )
        dd = any(
            any(int(d.maps[e].image[y]) == x
                for y in bit_indices(d.maps[e].domain))
            for e in bit_indices(idem_in_min)
        )
        if not (a == b == c == dd):
            return False
    return True


@dataclass(frozen=True)
class HomomorphismReport:
    ok: bool
    mismatches: tuple[tuple[int, int], ...]      # (s, x) with values differing
    undefined_targets: tuple[tuple[int, int], ...]  # x in Dom(T_s), phi(x) not in Dom(R_s)

    def __bool__(self) -> bool:
        return self.ok


def verify_dynamical_homomorphism(
    d1: PartialDynSystem, d2: PartialDynSystem, phi: list[int]
) -> HomomorphismReport:
    """Check R_s(phi(x)) = phi(T_s(x)) wherever both sides exist.

    phi must be a total map from the first point set onto the second;
    definedness gaps are reported separately from value mismatches.
    """
    if d1.sg.size != d2.sg.size:
        raise PreconditionError("systems must share the acting semigroup")
    if len(phi) != d1.points:
        raise PreconditionError("phi must be total on the source points")
    if set(phi) != set(range(d2.points)):
        raise PreconditionError("phi must be onto the target points")
    mismatches = []
    undefined = []
    for s in range(d1.sg.size):
        t1, t2 = d1.maps[s], d2.maps[s]
        for x in bit_indices(t1.domain):
            fx = phi[x]
            if not t2.defined_at(fx):
                undefined.append((s, x))
                continue
            if int(t2.image[fx]) != phi[int(t1.image[x])]:
                mismatches.append((s, x))
    return HomomorphismReport(
        ok=not mismatches,
        mismatches=tuple(mismatches),
        undefined_targets=tuple(undefined),
    )
