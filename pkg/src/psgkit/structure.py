"""Partial-group recognition and the structural decompositions built on
minimal left ideals and idempotents."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import core
from .bitset import SubsetMask, bit_indices
from .core import (
    UNDEFINED,
    InternalCheckError,
    PartialSemigroup,
    PreconditionError,
)


@dataclass(frozen=True)
class PartialGroupCertificate:
    kind: str  # two-sided | left-identity-left-inverse |
    #            right-identity-right-inverse | not-a-partial-group
    identity: Optional[int]
    inverse_map: Optional[dict[int, int]]
    failure_witness: Optional[int]

    @property
    def ok(self) -> bool:
        return self.kind != "not-a-partial-group"


def _left_identities(sg: PartialSemigroup) -> list[int]:
    return [
        e
        for e in range(sg.size)
        if all(sg.product(e, s) == s for s in range(sg.size))
    ]


def _right_identities(sg: PartialSemigroup) -> list[int]:
    return [
        e
        for e in range(sg.size)
        if all(sg.product(s, e) == s for s in range(sg.size))
    ]


def _left_inverses(sg: PartialSemigroup, e: int) -> Optional[dict[int, int]]:
    inv = {}
    for x in range(sg.size):
        y = next(
            (y for y in bit_indices(sg.left_masks[x]) if sg.product(y, x) == e),
            None,
        )
        if y is None:
            return None
        inv[x] = y
    return inv


def _two_sided_inverses(sg: PartialSemigroup, e: int) -> Optional[dict[int, int]]:
    inv = {}
    for x in range(sg.size):
        y = next(
            (
                y
                for y in bit_indices(sg.left_masks[x] & sg.right_masks[x])
                if sg.product(y, x) == e and sg.product(x, y) == e
            ),
            None,
        )
        if y is None:
            return None
        inv[x] = y
    return inv


def partial_group_check(sg: PartialSemigroup) -> PartialGroupCertificate:
    """Search for identity/inverse witnesses and record the strongest form.

    The defining form is a left identity with left inverses; when it holds
    the equivalent two-sided form is also expected and tried first, with
    the mirrored right-sided form as a fallback record.
    """
    left_ids = _left_identities(sg)
    best_witness = None
    for e in left_ids:
        inv = _left_inverses(sg, e)
        if inv is None:
            worst = next(
                x
                for x in range(sg.size)
                if all(
                    sg.product(y, x) != e
                    for y in bit_indices(sg.left_masks[x])
                )
            )
            best_witness = worst
            continue
        two = _two_sided_inverses(sg, e)
        if two is not None and all(sg.product(s, e) == s for s in range(sg.size)):
            return PartialGroupCertificate("two-sided", e, two, None)
        return PartialGroupCertificate("left-identity-left-inverse", e, inv, None)
    for e in _right_identities(sg):
        inv = {}
        for x in range(sg.size):
            y = next(
                (
                    y
                    for y in bit_indices(sg.right_masks[x])
                    if sg.product(x, y) == e
                ),
                None,
            )
            if y is None:
                inv = None
                break
            inv[x] = y
        if inv is not None:
            return PartialGroupCertificate(
                "right-identity-right-inverse", e, inv, None
            )
    return PartialGroupCertificate(
        "not-a-partial-group", None, None, best_witness
    )


def partial_group_equivalences_agree(sg: PartialSemigroup) -> bool:
    """The three characterizations of partial groups, evaluated separately
    by exhaustive search, must give one answer."""
    # (a) some left identity with left inverses
    a = any(
        _left_inverses(sg, e) is not None for e in _left_identities(sg)
    )
    # (b) a two-sided identity with two-sided inverses in R(x) n L(x)
    b = any(
        all(sg.product(s, e) == s for s in range(sg.size))
        and _two_sided_inverses(sg, e) is not None
        for e in _left_identities(sg)
    )
    # (c) a left identity exists and every left identity admits left inverses
    left_ids = _left_identities(sg)
    c = bool(left_ids) and all(
        _left_inverses(sg, e) is not None for e in left_ids
    )
    return a == b == c


@dataclass(frozen=True)
class LeftGroupDecomposition:
    identity: int
    group_part: SubsetMask        # S*e, a partial group
    idempotent_part: SubsetMask   # E(S), a partial right zero semigroup
    pairs: dict[tuple[int, int], int]  # (g, y) -> g*y on its definedness domain


class DecompositionHypothesisError(PreconditionError):
    def __init__(self, message: str, witness: Optional[int] = None):
        super().__init__(message)
        self.witness = witness


def left_group_decomposition(sg: PartialSemigroup) -> LeftGroupDecomposition:
    """Split S into a partial group times its idempotents.

    Hypothesis: a left identity e such that every x has y in R(x) with
    x*y = e.  The factorization map (g, y) -> g*y is verified bijective
    onto S and a partial homomorphism; since the theory guarantees this
    under the hypothesis, a verification failure raises InternalCheckError.
    """
    chosen = None
    witness = None
    for e in _left_identities(sg):
        bad = next(
            (
                x
                for x in range(sg.size)
                if all(
                    sg.product(x, y) != e
                    for y in bit_indices(sg.right_masks[x])
                )
            ),
            None,
        )
        if bad is None:
            chosen = e
            break
        witness = bad
    if chosen is None:
        if witness is not None:
            raise DecompositionHypothesisError(
                f"element {witness} has no right inverse for any left identity",
                witness,
            )
        raise DecompositionHypothesisError("no left identity")
    e = chosen
    g_bits = 0
    for s in range(sg.size):
        if sg.product(s, e) != UNDEFINED:
            g_bits |= 1 << sg.product(s, e)
    group_part = SubsetMask(sg.size, g_bits)
    idem = core.idempotents(sg)
    for x in idem:
        for y in bit_indices(sg.right_masks[x] & idem.bits):
            if sg.product(x, y) != y:
                raise InternalCheckError("idempotent part is not right zero")
    sub, _ = sg.restrict(group_part)
    if not partial_group_check(sub).ok:
        raise InternalCheckError("group part fails the partial group axioms")
    pairs = {}
    images = {}
    for g in group_part:
        for y in idem:
            v = sg.product(g, y)
            if v != UNDEFINED:
                pairs[(g, y)] = v
                images.setdefault(v, (g, y))
    if len(images) != len(pairs) or set(images) != set(range(sg.size)):
        raise InternalCheckError("factorization map is not a bijection onto S")
    for (g1, y1), s1 in pairs.items():
        for (g2, y2), s2 in pairs.items():
            lhs = sg.product(s1, s2)
            gg = sg.product(g1, g2)
            yy = sg.product(y1, y2)
            rhs = (
                pairs.get((gg, yy), UNDEFINED)
                if gg != UNDEFINED and yy != UNDEFINED
                else UNDEFINED
            )
            if lhs != UNDEFINED and rhs != UNDEFINED and lhs != rhs:
                raise InternalCheckError("factorization map is not a homomorphism")
    return LeftGroupDecomposition(e, group_part, idem, pairs)


@dataclass(frozen=True)
class CornerGroupResult:
    corner: SubsetMask            # e*L*e
    one_sided: SubsetMask         # e*L
    coincide: bool                # e*L == e*L*e on this instance
    certificate: PartialGroupCertificate


def corner_group(sg: PartialSemigroup, L: SubsetMask, e: int) -> CornerGroupResult:
    """e*L*e for an idempotent e in a minimal left ideal L.

    The corner is checked to be a partial group with identity e.  The
    statement-level set e*L is computed alongside and compared; the proof
    works with e*L*e, so that is the verified object.
    """
    if not core.is_minimal_left_ideal(sg, L):
        raise PreconditionError("L must be a minimal left ideal")
    if e not in L or sg.product(e, e) != e:
        raise PreconditionError("e must be an idempotent inside L")
    el_bits = 0
    for x in L:
        v = sg.product(e, x)
        if v != UNDEFINED:
            el_bits |= 1 << v
    corner_bits = 0
    for x in L:
        ex = sg.product(e, x)
        if ex != UNDEFINED and sg.product(ex, e) != UNDEFINED:
            corner_bits |= 1 << sg.product(ex, e)
    corner = SubsetMask(sg.size, corner_bits)
    sub, elems = sg.restrict(corner)
    cert = partial_group_check(sub)
    if not cert.ok or elems[cert.identity] != e:
        raise InternalCheckError("corner set fails the partial group axioms")
    return CornerGroupResult(
        corner=corner,
        one_sided=SubsetMask(sg.size, el_bits),
        coincide=el_bits == corner_bits,
        certificate=cert,
    )


def translate_minimal_left_ideal(
    sg: PartialSemigroup, L: SubsetMask, a: int
) -> SubsetMask:
    """L*a for a composable after all of L; minimal again by the
    translation theorem, so failure of minimality is an internal error."""
    if not core.is_minimal_left_ideal(sg, L):
        raise PreconditionError("L must be a minimal left ideal")
    if not all(sg.product(s, a) != UNDEFINED for s in L):
        raise PreconditionError("a must be composable after every member of L")
    bits = 0
    for s in L:
        bits |= 1 << sg.product(s, a)
    out = SubsetMask(sg.size, bits)
    if not core.is_minimal_left_ideal(sg, out):
        raise InternalCheckError("translate of a minimal left ideal not minimal")
    return out
