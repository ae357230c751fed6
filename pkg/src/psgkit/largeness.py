"""Classifiers for the six largeness notions on subsets of a finite partial
semigroup, with replayable witnesses.

The quantifiers over ultrafilters collapse to element quantifiers in the
finite model.  Elements with an empty composability set on the relevant
side are skipped and the skips recorded: such an element admits no
candidate family at all, which would make the universal notions vacuously
false and the existential ones vacuously ignorable, so the skip surfaces
the convention instead of burying it.

Every classifier uses the maximal-family reduction (the candidate families
are monotone in inclusion, so only the largest one needs testing); the
reductions are property-tested against the raw definitional sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitset import SubsetMask, bit_indices
from .core import (
    PartialSemigroup,
    quotient_set,
    union_quotients,
    universal_right_set,
)

NOTIONS = (
    "partially-syndetic",
    "syndetic",
    "partially-thick",
    "c-thick",
    "partially-piecewise-syndetic",
    "c-piecewise-syndetic",
)


@dataclass(frozen=True)
class LargenessVerdict:
    notion: str
    holds: bool
    witness: dict


@dataclass(frozen=True)
class ClassificationReport:
    subset: SubsetMask
    verdicts: dict[str, LargenessVerdict]
    implication_audit: list[dict] = field(default_factory=list)


def _check_subset(sg: PartialSemigroup, A: SubsetMask) -> None:
    if A.width != sg.size:
        raise ValueError("subset width must match the semigroup size")


def is_partially_syndetic(sg: PartialSemigroup, A: SubsetMask) -> LargenessVerdict:
    """For every u with left composers, some nonempty H inside L(u) has
    R(H) covered by the quotient sets of H; H = L(u) is the easiest H."""
    _check_subset(sg, A)
    skipped = [u for u in range(sg.size) if sg.left_masks[u] == 0]
    per_element = []
    for u in range(sg.size):
        family = sg.left_masks[u]
        if family == 0:
            continue
        rh = right_family_bits(sg, family)
        covered = union_quotients(sg, SubsetMask(sg.size, family), A).bits
        if rh & ~covered:
            x = (rh & ~covered).bit_length() - 1
            witness = {
                "rule": "max-left-family",
                "u": u,
                "family": bit_indices(family),
                "uncovered": x,
                "skipped": skipped,
            }
            return LargenessVerdict("partially-syndetic", False, witness)
        per_element.append({"u": u, "family": bit_indices(family)})
    witness = {
        "rule": "max-left-family",
        "per_element": per_element,
        "skipped": skipped,
    }
    return LargenessVerdict("partially-syndetic", True, witness)


def right_family_bits(sg: PartialSemigroup, family_bits: int) -> int:
    bits = (1 << sg.size) - 1
    for s in bit_indices(family_bits):
        bits &= sg.right_masks[s]
    return bits


def is_syndetic(sg: PartialSemigroup, A: SubsetMask) -> LargenessVerdict:
    """Some finite H covers the whole right-composability core by quotient
    sets; vacuously true when the core is empty."""
    _check_subset(sg, A)
    delta = universal_right_set(sg)
    if not delta:
        return LargenessVerdict("syndetic", True, {"vacuous": True})
    covered = 0
    family = []
    for t in range(sg.size):
        q = quotient_set(sg, t, A).bits
        if q & delta.bits:
            covered |= q
            family.append(t)
    if delta.bits & ~covered:
        missing = (delta.bits & ~covered).bit_length() - 1
        return LargenessVerdict("syndetic", False, {"uncovered": missing})
    return LargenessVerdict("syndetic", True, {"family": family})


def is_partially_thick(sg: PartialSemigroup, A: SubsetMask) -> LargenessVerdict:
    """Some u with left composers admits, for every nonempty F inside L(u),
    a t in R(F) with F*t inside A; F = L(u) is the hardest F."""
    _check_subset(sg, A)
    skipped = [u for u in range(sg.size) if sg.left_masks[u] == 0]
    failures = []
    for u in range(sg.size):
        family = sg.left_masks[u]
        if family == 0:
            continue
        for t in bit_indices(right_family_bits(sg, family)):
            if all(sg.product(s, t) in A for s in bit_indices(family)):
                witness = {
                    "rule": "max-left-family",
                    "u": u,
                    "family": bit_indices(family),
                    "t": t,
                    "skipped": skipped,
                }
                return LargenessVerdict("partially-thick", True, witness)
        failures.append({"u": u, "family": bit_indices(family)})
    witness = {"rule": "max-left-family", "failures": failures, "skipped": skipped}
    return LargenessVerdict("partially-thick", False, witness)


def is_c_thick(sg: PartialSemigroup, A: SubsetMask) -> LargenessVerdict:
    """Some p in the right-composability core has all left multiples in A.

    Membership in the core makes every element a left composer of p, so
    the multiple set is {s*p : s in S}."""
    _check_subset(sg, A)
    delta = universal_right_set(sg)
    candidates = []
    for p in delta:
        if all(sg.product(s, p) in A for s in range(sg.size)):
            return LargenessVerdict("c-thick", True, {"p": p})
        candidates.append(p)
    return LargenessVerdict("c-thick", False, {"candidates": candidates})


def is_partially_piecewise_syndetic(
    sg: PartialSemigroup, A: SubsetMask
) -> LargenessVerdict:
    """For every s with right composers, some nonempty H inside R(s) works:
    every finite nonempty T inside R(H) admits x in R(T) with T*x inside
    the union of quotient sets of H.  H = R(s) and T = R(H) are extremal.
    """
    _check_subset(sg, A)
    skipped = [s for s in range(sg.size) if sg.right_masks[s] == 0]
    per_element = []
    for s in range(sg.size):
        h = sg.right_masks[s]
        if h == 0:
            continue
        rh = right_family_bits(sg, h)
        if rh == 0:
            per_element.append({"s": s, "H": bit_indices(h), "vacuous": True})
            continue
        covered = union_quotients(sg, SubsetMask(sg.size, h), A).bits
        x = _tail_witness(sg, rh, rh, covered)
        if x is None:
            witness = {
                "rule": "max-right-family",
                "s": s,
                "H": bit_indices(h),
                "T": bit_indices(rh),
                "skipped": skipped,
            }
            return LargenessVerdict(
                "partially-piecewise-syndetic", False, witness
            )
        per_element.append({"s": s, "H": bit_indices(h), "x": x})
    witness = {
        "rule": "max-right-family",
        "per_element": per_element,
        "skipped": skipped,
    }
    return LargenessVerdict("partially-piecewise-syndetic", True, witness)


def _tail_witness(sg, t_bits: int, constrained_bits: int, covered: int):
    """x composable after all of T with (T n constraint)*x inside covered."""
    for x in bit_indices(right_family_bits(sg, t_bits)):
        if all(
            (1 << sg.product(t, x)) & covered
            for t in bit_indices(constrained_bits)
        ):
            return x
    return None


def is_c_piecewise_syndetic(sg: PartialSemigroup, A: SubsetMask) -> LargenessVerdict:
    """Some s and nonempty H inside R(s): every nonempty T inside R(s) has
    x in R(T) with (T n R(H))*x inside the union of quotient sets of H.

    The unquantified s of the source definition is read existentially.
    H = R(s) and T = R(s) are again the extremal choices.
    """
    _check_subset(sg, A)
    tried = []
    for s in range(sg.size):
        h = sg.right_masks[s]
        if h == 0:
            continue
        rh = right_family_bits(sg, h)
        covered = union_quotients(sg, SubsetMask(sg.size, h), A).bits
        x = _tail_witness(sg, h, h & rh, covered)
        if x is not None:
            witness = {
                "rule": "max-right-family",
                "s": s,
                "H": bit_indices(h),
                "x": x,
            }
            return LargenessVerdict("c-piecewise-syndetic", True, witness)
        tried.append(s)
    return LargenessVerdict("c-piecewise-syndetic", False, {"tried": tried})


_CLASSIFIERS = {
    "partially-syndetic": is_partially_syndetic,
    "syndetic": is_syndetic,
    "partially-thick": is_partially_thick,
    "c-thick": is_c_thick,
    "partially-piecewise-syndetic": is_partially_piecewise_syndetic,
    "c-piecewise-syndetic": is_c_piecewise_syndetic,
}


def classifier(notion: str):
    return _CLASSIFIERS[notion]


def has_thick_orbit_point(sg: PartialSemigroup, A: SubsetMask) -> bool:
    """Some p with left composers has L(p)*p inside A.

    This is the principal form of the thickness characterization through
    one-point orbits; equivalence with partial thickness is a theorem for
    right adequate semigroups and is audited, not assumed.
    """
    for p in range(sg.size):
        lp = sg.left_masks[p]
        if lp and all(sg.product(s, p) in A for s in bit_indices(lp)):
            return True
    return False


def classify(sg: PartialSemigroup, A: SubsetMask) -> ClassificationReport:
    """All six verdicts plus an audit of the in-paper implications."""
    verdicts = {name: fn(sg, A) for name, fn in _CLASSIFIERS.items()}
    comp = A.complement()
    audit = [
        {
            "name": "thick-iff-complement-not-partially-syndetic",
            "held": verdicts["partially-thick"].holds
            != is_partially_syndetic(sg, comp).holds,
        },
        {
            "name": "syndetic-iff-complement-not-partially-thick",
            "held": verdicts["partially-syndetic"].holds
            != is_partially_thick(sg, comp).holds,
        },
        {
            "name": "c-thick-implies-partially-thick",
            "held": (not verdicts["c-thick"].holds)
            or verdicts["partially-thick"].holds,
        },
        {
            "name": "thick-orbit-point-implies-partially-thick",
            "held": (not has_thick_orbit_point(sg, A))
            or verdicts["partially-thick"].holds,
        },
    ]
    return ClassificationReport(subset=A, verdicts=verdicts, implication_audit=audit)
