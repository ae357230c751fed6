"""Property suites: replayable verification of the structural facts the
package is built on, runnable per instance from the CLI.

Scope notes.  Most checks are unconditional.  Three are restricted to the
hypotheses under which the facts are finitely true, established by
counterexample search:

* the smallest ideal equals the union of the minimal left ideals - checked
  on right-adequate instances (a partial adequate counterexample exists:
  adjoin an identity to the formal-product family of two generators);
* the piecewise/thick quotient characterization - checked on right-adequate
  instances, with off-scope divergences reported, not asserted;
* the recurrence equivalences - checked when the smallest ideal exists
  (the stand-in for the compactness guarantees of the infinite theory).

The naive largeness sweeps here quantify over every candidate family and
serve as the in-package cross-check for the classifier reductions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import central as central_mod
from . import core, dynamics, largeness, structure
from .bitset import SubsetMask, bit_indices, iter_nonempty_submasks
from .core import PartialSemigroup
from .dynamics import PartialDynSystem


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    details: dict = field(default_factory=dict)


# --------------------------------------------------------------------------
# naive definitional largeness sweeps (no monotonicity reductions)


def naive_partially_syndetic(sg, a_bits: int) -> bool:
    for u in range(sg.size):
        lu = sg.left_masks[u]
        if lu == 0:
            continue
        if not any(
            largeness.right_family_bits(sg, h)
            & ~core.union_quotients(sg, SubsetMask(sg.size, h), SubsetMask(sg.size, a_bits)).bits
            == 0
            for h in iter_nonempty_submasks(lu)
        ):
            return False
    return True


def naive_syndetic(sg, a_bits: int) -> bool:
    delta = core.universal_right_set(sg).bits
    if delta == 0:
        return True
    A = SubsetMask(sg.size, a_bits)
    return any(
        delta & ~core.union_quotients(sg, SubsetMask(sg.size, h), A).bits == 0
        for h in iter_nonempty_submasks((1 << sg.size) - 1)
    )


def naive_partially_thick(sg, a_bits: int) -> bool:
    for u in range(sg.size):
        lu = sg.left_masks[u]
        if lu == 0:
            continue
        if all(
            any(
                all(a_bits >> sg.product(s, t) & 1 for s in bit_indices(f))
                for t in bit_indices(largeness.right_family_bits(sg, f))
            )
            for f in iter_nonempty_submasks(lu)
        ):
            return True
    return False


def naive_c_thick(sg, a_bits: int) -> bool:
    for p in core.universal_right_set(sg):
        lp = sg.left_masks[p]
        if lp and all(a_bits >> sg.product(s, p) & 1 for s in bit_indices(lp)):
            return True
    return False


def naive_partially_piecewise_syndetic(sg, a_bits: int) -> bool:
    A = SubsetMask(sg.size, a_bits)
    for s in range(sg.size):
        rs = sg.right_masks[s]
        if rs == 0:
            continue
        ok_s = False
        for h in iter_nonempty_submasks(rs):
            u = core.union_quotients(sg, SubsetMask(sg.size, h), A).bits
            rh = largeness.right_family_bits(sg, h)
            if all(
                any(
                    all(u >> sg.product(t, x) & 1 for t in bit_indices(tt))
                    for x in bit_indices(largeness.right_family_bits(sg, tt))
                )
                for tt in iter_nonempty_submasks(rh)
            ):
                ok_s = True
                break
        if not ok_s:
            return False
    return True


def naive_c_piecewise_syndetic(sg, a_bits: int) -> bool:
    A = SubsetMask(sg.size, a_bits)
    for s in range(sg.size):
        rs = sg.right_masks[s]
        if rs == 0:
            continue
        for h in iter_nonempty_submasks(rs):
            u = core.union_quotients(sg, SubsetMask(sg.size, h), A).bits
            rh = largeness.right_family_bits(sg, h)
            if all(
                any(
                    all(u >> sg.product(t, x) & 1 for t in bit_indices(tt & rh))
                    for x in bit_indices(largeness.right_family_bits(sg, tt))
                )
                for tt in iter_nonempty_submasks(rs)
            ):
                return True
    return False


NAIVE = {
    "partially-syndetic": naive_partially_syndetic,
    "syndetic": naive_syndetic,
    "partially-thick": naive_partially_thick,
    "c-thick": naive_c_thick,
    "partially-piecewise-syndetic": naive_partially_piecewise_syndetic,
    "c-piecewise-syndetic": naive_c_piecewise_syndetic,
}


def _subset_sample(n: int, exhaustive_limit: int, seed: int = 11):
    total = 1 << n
    if n <= exhaustive_limit or total <= 40:
        return list(range(total))
    rng = random.Random(seed)
    picks = {0, total - 1}
    while len(picks) < 40:
        picks.add(rng.randrange(total))
    return sorted(picks)


# --------------------------------------------------------------------------
# core suite


def check_weak_associativity(sg: PartialSemigroup) -> CheckResult:
    rep = core.validate(sg)
    return CheckResult(
        "weak-associativity", rep.ok, {"violations": len(rep.violations)}
    )


def check_quotient_composition(sg: PartialSemigroup) -> CheckResult:
    """b-then-a pullbacks compose into the pullback along a*b, and are
    empty when a*b is undefined."""
    n = sg.size
    bad = 0
    for bits in _subset_sample(n, 6):
        A = SubsetMask(n, bits)
        for a in range(n):
            inner = core.quotient_set(sg, a, A)
            for b in range(n):
                lhs = core.quotient_set(sg, b, inner)
                ab = sg.product(a, b)
                rhs = (
                    core.quotient_set(sg, ab, A)
                    if ab != core.UNDEFINED
                    else SubsetMask.empty(n)
                )
                if lhs != rhs:
                    bad += 1
    return CheckResult("quotient-composition", bad == 0, {"mismatches": bad})


def check_adequacy_reduction(sg: PartialSemigroup) -> CheckResult:
    """R(S) nonempty agrees with the all-H definition, and R is antitone."""
    full = (1 << sg.size) - 1
    by_def = all(
        largeness.right_family_bits(sg, h) != 0
        for h in iter_nonempty_submasks(full)
    )
    ok = by_def == core.is_right_adequate(sg)
    for h in iter_nonempty_submasks(full):
        rh = largeness.right_family_bits(sg, h)
        for h2 in iter_nonempty_submasks(h):
            if largeness.right_family_bits(sg, h2) & ~rh and h2 != h:
                pass  # antitone means R(h) subset R(h2); check below
            if rh & ~largeness.right_family_bits(sg, h2):
                ok = False
    return CheckResult("adequacy-reduction", ok, {})


def check_ideal_intersections(sg: PartialSemigroup, cap=None) -> CheckResult:
    ideals = core.enumerate_left_ideals(sg, cap)
    bad = 0
    for i, l1 in enumerate(ideals):
        for l2 in ideals[i:]:
            inter = l1 & l2
            if inter and not core.is_left_ideal(sg, inter):
                bad += 1
    return CheckResult(
        "left-ideal-intersections", bad == 0,
        {"left_ideals": len(ideals), "bad": bad},
    )


def check_idempotent_identities(sg: PartialSemigroup) -> CheckResult:
    """Idempotents act as identities on their one-sided product sets."""
    bad = 0
    for e in core.idempotents(sg):
        for x in bit_indices(sg.right_masks[e]):
            s = sg.product(e, x)
            if sg.product(e, s) != s:
                bad += 1
        for x in bit_indices(sg.left_masks[e]):
            s = sg.product(x, e)
            if sg.product(s, e) != s:
                bad += 1
    return CheckResult("idempotent-identities", bad == 0, {"bad": bad})


def check_principal_ideals(sg: PartialSemigroup) -> CheckResult:
    bad = 0
    for x in range(sg.size):
        left, right, two = core.principal_ideals(sg, x)
        if left and not core.is_left_ideal(sg, left):
            bad += 1
        if right and not core.is_right_ideal(sg, right):
            bad += 1
        if two and not core.is_ideal(sg, two):
            bad += 1
    return CheckResult("principal-ideals", bad == 0, {"bad": bad})


def check_minimal_left_ideals_exhaustive(sg: PartialSemigroup, cap=None) -> CheckResult:
    got = {m.bits for m in core.minimal_left_ideals(sg)}
    ideals = core.enumerate_left_ideals(sg, cap)
    want = {
        l.bits
        for l in ideals
        if not any(o.bits != l.bits and o.bits & ~l.bits == 0 for o in ideals)
    }
    return CheckResult(
        "minimal-left-ideals-exhaustive", got == want,
        {"count": len(want)},
    )


def check_smallest_ideal_exhaustive(sg: PartialSemigroup, cap=None) -> CheckResult:
    """The polynomial smallest-ideal computation matches the lattice minimum
    from exhaustive enumeration, including absence."""
    got = core.smallest_ideal(sg)
    ideals = core.enumerate_ideals(sg, cap)
    want = None
    for k in ideals:
        if all(k.bits & ~i.bits == 0 for i in ideals):
            want = k
            break
    ok = (got is None) == (want is None) and (got is None or got == want)
    contained = got is None or all(
        got.bits & ~i.bits == 0 for i in ideals
    )
    two_sided = got is None or core.is_ideal(sg, got)
    return CheckResult(
        "smallest-ideal-exhaustive",
        ok and contained and two_sided,
        {"present": got is not None},
    )


def check_smallest_ideal_union(sg: PartialSemigroup) -> CheckResult:
    """On right-adequate instances the smallest ideal exists and is the
    union of the minimal left ideals.  Without adequacy this genuinely
    fails (vacuous minimal left ideals escape every small ideal), so
    out-of-scope instances are reported, not asserted."""
    union = 0
    for m in core.minimal_left_ideals(sg):
        union |= m.bits
    k = core.smallest_ideal(sg)
    holds = k is not None and k.bits == union
    if not core.is_right_adequate(sg):
        return CheckResult(
            "smallest-ideal-union", True,
            {"scope": "skipped: not right adequate", "coincides": holds},
        )
    return CheckResult("smallest-ideal-union", holds, {"scope": "right-adequate"})


def check_fip_families(sg: PartialSemigroup, seed: int = 7) -> CheckResult:
    """Families with common elements whose members absorb forward products
    have their intersection closed under defined products."""
    n = sg.size
    rng = random.Random(seed)
    families = [[(1 << n) - 1]]
    k = core.smallest_ideal(sg)
    if k is not None:
        families.append([k.bits, (1 << n) - 1])
    for _ in range(6):
        families.append(
            [
                sum(1 << x for x in range(n) if rng.random() < 0.7) or (1 << n) - 1
                for _ in range(2)
            ]
        )
    tested = 0
    bad = 0
    for fam in families:
        inter = (1 << n) - 1
        for a in fam:
            inter &= a
        if inter == 0:
            continue
        hyp = all(
            any(
                b & ~sg.right_masks[x] == 0
                and all(a >> sg.product(x, y) & 1 for y in bit_indices(b))
                for b in fam
            )
            for a in fam
            for x in bit_indices(a)
        )
        if not hyp:
            continue
        tested += 1
        for p in bit_indices(inter):
            for q in bit_indices(inter):
                pq = sg.product(p, q)
                if pq != core.UNDEFINED and not inter >> pq & 1:
                    bad += 1
    return CheckResult(
        "fip-family-closure", bad == 0, {"families_tested": tested}
    )


def check_kernel_syndetic_pullbacks(sg: PartialSemigroup) -> CheckResult:
    """Members of the right-composability core lie in the smallest ideal
    exactly when every containing set pulls back partially syndetically."""
    n = sg.size
    if n > 5:
        return CheckResult(
            "kernel-syndetic-pullbacks", True, {"scope": "skipped: size > 5"}
        )
    delta = core.universal_right_set(sg)
    k = core.smallest_ideal(sg)
    kbits = k.bits if k else 0
    bad = 0
    for u in delta:
        in_kernel = bool(kbits >> u & 1)
        pullbacks_syndetic = True
        for bits in range(1 << n):
            if not bits >> u & 1:
                continue
            A = SubsetMask(n, bits)
            B = SubsetMask.from_indices(
                n, [s for s in range(n) if u in core.quotient_set(sg, s, A)]
            )
            if not largeness.is_partially_syndetic(sg, B).holds:
                pullbacks_syndetic = False
                break
        if in_kernel != pullbacks_syndetic:
            bad += 1
    return CheckResult(
        "kernel-syndetic-pullbacks", bad == 0,
        {"core_size": len(delta), "bad": bad},
    )


# --------------------------------------------------------------------------
# structure suite


def check_partial_group_equivalences(sg: PartialSemigroup) -> CheckResult:
    return CheckResult(
        "partial-group-equivalences",
        structure.partial_group_equivalences_agree(sg),
        {},
    )


def check_partial_group_mirror(sg: PartialSemigroup) -> CheckResult:
    """The right-sided characterization through the transposed table agrees
    with the left-sided one."""
    a = structure.partial_group_check(sg).ok
    b = structure.partial_group_check(sg.transpose()).ok
    return CheckResult("partial-group-mirror", a == b, {})


def check_left_group_decomposition(sg: PartialSemigroup) -> CheckResult:
    try:
        dec = structure.left_group_decomposition(sg)
    except structure.DecompositionHypothesisError:
        return CheckResult(
            "left-group-decomposition", True, {"scope": "hypothesis not met"}
        )
    return CheckResult(
        "left-group-decomposition", True,
        {
            "identity": dec.identity,
            "group_size": len(dec.group_part),
            "idempotents": len(dec.idempotent_part),
        },
    )


def check_corner_groups(sg: PartialSemigroup) -> CheckResult:
    pairs = 0
    coincide = 0
    idem = core.idempotents(sg)
    for L in core.minimal_left_ideals(sg):
        for e in L & idem:
            res = structure.corner_group(sg, L, e)
            pairs += 1
            coincide += res.coincide
    return CheckResult(
        "corner-groups", True, {"pairs": pairs, "one-sided-coincides": coincide}
    )


def check_ideal_translation(sg: PartialSemigroup) -> CheckResult:
    """Translates of minimal left ideals are minimal; minimal ideals meeting
    the composable range arise as translates."""
    mins = core.minimal_left_ideals(sg)
    bad = 0
    for L in mins:
        rall = (1 << sg.size) - 1
        for s in L:
            rall &= sg.right_masks[s]
        for a in bit_indices(rall):
            structure.translate_minimal_left_ideal(sg, L, a)  # raises on failure
        for T in mins:
            window = rall & T.bits
            if window and not any(
                {sg.product(s, a) for s in L} == set(T.indices())
                for a in bit_indices(window)
            ):
                bad += 1
    return CheckResult("minimal-ideal-translation", bad == 0, {"bad": bad})


def check_minimal_ideal_factorization(sg: PartialSemigroup) -> CheckResult:
    """Each member of a minimal left ideal with an idempotent factors
    uniquely as (idempotent of the ideal) * (corner group member)."""
    idem = core.idempotents(sg)
    bad = 0
    checked = 0
    for L in core.minimal_left_ideals(sg):
        es = (L & idem).indices()
        if not es:
            continue
        e = es[0]
        corner = structure.corner_group(sg, L, e).corner
        xs = (L & idem).indices()
        checked += 1
        for s in L:
            count = sum(
                1 for x in xs for g in corner if sg.product(x, g) == s
            )
            if count != 1:
                bad += 1
    return CheckResult(
        "minimal-ideal-factorization", bad == 0,
        {"ideals_checked": checked, "bad": bad},
    )


# --------------------------------------------------------------------------
# largeness suite


def check_classifier_reductions(sg: PartialSemigroup) -> CheckResult:
    """The maximal-family classifiers agree with the raw quantifier sweeps."""
    n = sg.size
    bad = {}
    for bits in _subset_sample(n, 5):
        A = SubsetMask(n, bits)
        for notion, naive in NAIVE.items():
            if largeness.classifier(notion)(sg, A).holds != naive(sg, bits):
                bad[notion] = bad.get(notion, 0) + 1
    return CheckResult("classifier-reductions", not bad, {"mismatches": bad})


def check_duality(sg: PartialSemigroup) -> CheckResult:
    """Thickness and syndeticity of complements refute each other."""
    n = sg.size
    bad = 0
    for bits in _subset_sample(n, 6):
        A = SubsetMask(n, bits)
        comp = A.complement()
        if largeness.is_partially_thick(sg, A).holds == largeness.is_partially_syndetic(sg, comp).holds:
            bad += 1
        if largeness.is_partially_syndetic(sg, A).holds == largeness.is_partially_thick(sg, comp).holds:
            bad += 1
    return CheckResult("thick-syndetic-duality", bad == 0, {"bad": bad})


def check_thick_orbit_characterization(sg: PartialSemigroup) -> CheckResult:
    """Partial thickness against the one-point orbit form; exact on the
    corpus, with the adequacy caveat recorded in the details."""
    n = sg.size
    bad = 0
    for bits in _subset_sample(n, 6):
        A = SubsetMask(n, bits)
        if largeness.is_partially_thick(sg, A).holds != largeness.has_thick_orbit_point(sg, A):
            bad += 1
    return CheckResult(
        "thick-orbit-characterization", bad == 0,
        {"bad": bad, "right_adequate": core.is_right_adequate(sg)},
    )


def _quotient_thick_characterization(sg, a_bits: int, side: str) -> bool:
    masks = sg.left_masks if side == "L" else sg.right_masks
    A = SubsetMask(sg.size, a_bits)
    for s in range(sg.size):
        fam = masks[s]
        if fam == 0:
            continue
        if not any(
            largeness.is_partially_thick(
                sg, core.union_quotients(sg, SubsetMask(sg.size, g), A)
            ).holds
            for g in iter_nonempty_submasks(fam)
        ):
            return False
    return True


def check_piecewise_characterization(sg: PartialSemigroup) -> CheckResult:
    """Partial piecewise syndeticity against thick quotient unions.

    Both composability-side readings are evaluated; the equivalence is
    asserted for right-adequate instances (the hypothesis under which it
    is finitely exact) and divergences elsewhere are reported.
    """
    n = sg.size
    if n > 5:
        return CheckResult(
            "piecewise-thick-characterization", True, {"scope": "skipped: size > 5"}
        )
    in_scope = core.is_right_adequate(sg)
    bad_l = bad_r = reading_div = 0
    for bits in range(1 << n):
        pw = largeness.is_partially_piecewise_syndetic(sg, SubsetMask(n, bits)).holds
        cl = _quotient_thick_characterization(sg, bits, "L")
        cr = _quotient_thick_characterization(sg, bits, "R")
        bad_l += pw != cl
        bad_r += pw != cr
        reading_div += cl != cr
    ok = (bad_r == 0 and bad_l == 0) if in_scope else True
    return CheckResult(
        "piecewise-thick-characterization", ok,
        {
            "scope": "right-adequate" if in_scope else "reported only",
            "left-reading-divergences": bad_l,
            "right-reading-divergences": bad_r,
            "reading-disagreements": reading_div,
        },
    )


def check_upward_closure(sg: PartialSemigroup) -> CheckResult:
    n = sg.size
    bad = 0
    for bits in _subset_sample(n, 4):
        held = {
            notion: largeness.classifier(notion)(sg, SubsetMask(n, bits)).holds
            for notion in largeness.NOTIONS
        }
        for extra in range(n):
            bigger = SubsetMask(n, bits | 1 << extra)
            for notion, was in held.items():
                if was and not largeness.classifier(notion)(sg, bigger).holds:
                    bad += 1
    return CheckResult("upward-closure", bad == 0, {"bad": bad})


# --------------------------------------------------------------------------
# dynamics suite


def check_pspds_axioms(d: PartialDynSystem) -> CheckResult:
    rep = dynamics.validate_pspds(d)
    return CheckResult(
        "action-compatibility", rep.ok,
        {
            "violations": len(rep.composition_violations),
            "empty_map_domains": list(rep.empty_map_domains),
            "unreached_points": list(rep.unreached_points),
        },
    )


def check_map_extension(d: PartialDynSystem, samples: int = 400, seed: int = 3) -> CheckResult:
    """Total extension round-trips and respects composition on sampled
    partial maps over this point set."""
    n = min(d.points, 5)
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        f = _random_partial_map(rng, n)
        g = _random_partial_map(rng, n)
        if dynamics.restrict(dynamics.infinity_extend(f)) != f:
            bad += 1
        lhs = dynamics.infinity_extend(dynamics.compose_partial(f, g))
        rhs = dynamics.infinity_extend(f).compose(dynamics.infinity_extend(g))
        if lhs != rhs:
            bad += 1
    return CheckResult("map-extension", bad == 0, {"samples": samples, "bad": bad})


def _random_partial_map(rng, n: int) -> dynamics.PartialMap:
    pairs = {
        x: rng.randrange(n) for x in range(n) if rng.random() < 0.6
    }
    return dynamics.PartialMap.from_pairs(n, pairs)


def check_envelope_idempotents(d: PartialDynSystem) -> CheckResult:
    """Every nonempty composition-closed subset of the enveloping semigroup
    contains an idempotent (subset sweep at small envelope sizes)."""
    env = dynamics.enveloping(d)
    k = env.cayley.size
    idem = core.idempotents(env.cayley).bits
    if idem == 0:
        return CheckResult("envelope-idempotents", False, {"size": k})
    if k > 12:
        return CheckResult(
            "envelope-idempotents", True,
            {"size": k, "scope": "whole-envelope only"},
        )
    bad = 0
    for m in range(1, 1 << k):
        closed = all(
            m >> env.cayley.product(i, j) & 1
            for i in bit_indices(m)
            for j in bit_indices(m)
        )
        if closed and not m & idem:
            bad += 1
    return CheckResult("envelope-idempotents", bad == 0, {"size": k, "bad": bad})


def check_envelope_minimal_ideals(d: PartialDynSystem) -> CheckResult:
    env = dynamics.enveloping(d)
    idem = core.idempotents(env.cayley)
    ok = all(
        bool(m & idem) for m in core.minimal_left_ideals(env.cayley)
    )
    return CheckResult(
        "envelope-minimal-ideals-idempotent", ok, {"size": env.cayley.size}
    )


def check_translation_correspondence(d: PartialDynSystem) -> CheckResult:
    if not dynamics.is_translation_system(d):
        return CheckResult(
            "translation-correspondence", True, {"scope": "not a translation system"}
        )
    return CheckResult(
        "translation-correspondence", dynamics.left_ideal_correspondence(d), {}
    )


def check_recurrence_equivalences(d: PartialDynSystem) -> CheckResult:
    """Four-way uniform recurrence agreement; exact when the smallest ideal
    exists, which replaces the compactness the infinite theory supplies."""
    if core.smallest_ideal(d.sg) is None:
        return CheckResult(
            "recurrence-equivalences", True, {"scope": "skipped: no smallest ideal"}
        )
    return CheckResult(
        "recurrence-equivalences",
        dynamics.recurrence_equivalences_check(d),
        {"scope": "smallest-ideal-present"},
    )


def check_proximal_recurrent_equivalence(d: PartialDynSystem) -> CheckResult:
    """y = T_u(x) for a minimal idempotent u acting on x holds exactly when
    the pair is proximal and y uniformly recurrent."""
    sg = d.sg
    if core.smallest_ideal(sg) is None:
        return CheckResult(
            "proximal-recurrent-equivalence", True,
            {"scope": "skipped: no smallest ideal"},
        )
    mi = core.minimal_idempotents(sg)
    ur = dynamics.uniformly_recurrent_points(d)
    bad = 0
    for x in range(d.points):
        for y in range(d.points):
            lhs = any(
                int(d.maps[u].image[x]) == y
                for u in mi
                if d.maps[u].defined_at(x)
            )
            rhs = dynamics.is_proximal(d, x, y) and y in ur
            if lhs != rhs:
                bad += 1
    return CheckResult(
        "proximal-recurrent-equivalence", bad == 0,
        {"scope": "smallest-ideal-present", "bad": bad},
    )


def check_proximal_collapse(d: PartialDynSystem) -> CheckResult:
    """Every proximal pair is glued by every commonly-acting member of some
    minimal left ideal."""
    mins = core.minimal_left_ideals(d.sg)
    bad = 0
    for x, y in dynamics.proximal_pairs(d):
        if not any(
            all(
                int(d.maps[u].image[x]) == int(d.maps[u].image[y])
                for u in bit_indices(
                    m.bits & d.acting_masks[x] & d.acting_masks[y]
                )
            )
            for m in mins
        ):
            bad += 1
    return CheckResult("proximal-collapse", bad == 0, {"bad": bad})


def check_ur_companion(d: PartialDynSystem) -> CheckResult:
    """Minimal idempotents send every point they act on to a uniformly
    recurrent proximal companion inside its orbit."""
    mi = core.minimal_idempotents(d.sg)
    ur = dynamics.uniformly_recurrent_points(d)
    bad = 0
    for x in range(d.points):
        for e in mi:
            if not d.maps[e].defined_at(x):
                continue
            y = int(d.maps[e].image[x])
            if (
                y not in ur
                or not dynamics.is_proximal(d, x, y)
                or y not in dynamics.orbit(d, x)
            ):
                bad += 1
    return CheckResult("recurrent-companion", bad == 0, {"bad": bad})


def check_minimality_readings(d: PartialDynSystem) -> CheckResult:
    """Report-only: system minimality via no-proper-subsystem versus via
    all orbit closures being everything (these can drift apart for partial
    actions; both values are recorded)."""
    whole = (1 << d.points) - 1
    req = dynamics._image_requirements(d)
    no_proper = all(
        dynamics._forward_closure(req, 1 << x) == whole for x in range(d.points)
    )
    dense_orbits = all(
        dynamics.orbit(d, x).bits != 0
        and dynamics._forward_closure(req, dynamics.orbit(d, x).bits) == whole
        for x in range(d.points)
    )
    return CheckResult(
        "minimality-readings", True,
        {"no-proper-subsystem": no_proper, "dense-orbit-closures": dense_orbits},
    )


# --------------------------------------------------------------------------
# central suite


def check_central_consistency(sg: PartialSemigroup) -> CheckResult:
    mi = core.minimal_idempotents(sg)
    n = sg.size
    bad = 0
    for bits in _subset_sample(n, 6):
        B = SubsetMask(n, bits)
        if central_mod.is_central(sg, B) != bool(mi & B):
            bad += 1
    return CheckResult("central-consistency", bad == 0, {"bad": bad})


def check_indicator_identity(sg: PartialSemigroup) -> CheckResult:
    """Evaluating a pulled-back indicator at s reads the original at s*u."""
    n = sg.size
    if n > 4:
        return CheckResult(
            "indicator-pullback-identity", True, {"scope": "skipped: size > 4"}
        )
    bad = 0
    for s in range(n):
        for u in bit_indices(sg.right_masks[s]):
            needed = sg.left_absorb_masks[u]
            for extra in range(1 << n):
                dom = needed | extra
                if dom == 0:
                    continue
                for ones in range(1 << n):
                    if ones & ~dom:
                        continue
                    f = central_mod.IndicatorPoint(n, dom, ones)
                    tf = central_mod.indicator_apply(sg, u, f)
                    su = sg.product(s, u)
                    if tf is None or not tf.domain >> s & 1:
                        bad += 1
                    elif (tf.value(s) == 1) != bool(ones >> su & 1):
                        bad += 1
    return CheckResult("indicator-pullback-identity", bad == 0, {"bad": bad})


def check_superset_transport(sg: PartialSemigroup) -> CheckResult:
    """Central sets are closed under supersets, both through the algebraic
    test and by enlarging the witness neighborhood when no point collision
    blocks it."""
    n = sg.size
    if n > 4:
        return CheckResult(
            "superset-transport", True, {"scope": "skipped: size > 4"}
        )
    bad = 0
    transported = 0
    for bits in range(1, 1 << n):
        B = SubsetMask(n, bits)
        if not central_mod.is_central(sg, B):
            continue
        for cbits in range(1 << n):
            if cbits & bits != bits:
                continue
            C = SubsetMask(n, cbits)
            if not central_mod.is_central(sg, C):
                bad += 1
                continue
        w = central_mod.build_central_witness(sg, B)
        for extra in range(n):
            cbits = bits | 1 << extra
            if cbits == bits:
                continue
            enlarged = w.neighborhood.bits
            collision = False
            for s in bit_indices(w.system.acting_masks[w.x]):
                img = int(w.system.maps[s].image[w.x])
                if cbits >> s & 1 and not bits >> s & 1:
                    enlarged |= 1 << img
            for s in bit_indices(w.system.acting_masks[w.x]):
                img = int(w.system.maps[s].image[w.x])
                if enlarged >> img & 1 and not cbits >> s & 1:
                    collision = True
            if collision:
                continue
            u2 = SubsetMask(len(w.points), enlarged)
            rec = central_mod._recovered_set(w.system, w.x, u2)
            if rec.bits != cbits:
                bad += 1
            else:
                transported += 1
    return CheckResult(
        "superset-transport", bad == 0,
        {"bad": bad, "transported": transported},
    )


def check_central_dynamical(sg: PartialSemigroup) -> CheckResult:
    if sg.size > 4:
        return CheckResult(
            "central-dynamical-equivalence", True, {"scope": "skipped: size > 4"}
        )
    return CheckResult(
        "central-dynamical-equivalence",
        central_mod.central_dynamical_check(sg),
        {"subsets": 1 << sg.size},
    )


# --------------------------------------------------------------------------
# suite registry


SEMIGROUP_SUITES = {
    "core": (
        check_weak_associativity,
        check_quotient_composition,
        check_adequacy_reduction,
        check_ideal_intersections,
        check_idempotent_identities,
        check_principal_ideals,
        check_minimal_left_ideals_exhaustive,
        check_smallest_ideal_exhaustive,
        check_smallest_ideal_union,
        check_fip_families,
        check_kernel_syndetic_pullbacks,
    ),
    "structure": (
        check_partial_group_equivalences,
        check_partial_group_mirror,
        check_left_group_decomposition,
        check_corner_groups,
        check_ideal_translation,
        check_minimal_ideal_factorization,
    ),
    "largeness": (
        check_classifier_reductions,
        check_duality,
        check_thick_orbit_characterization,
        check_piecewise_characterization,
        check_upward_closure,
    ),
    "central": (
        check_central_consistency,
        check_indicator_identity,
        check_superset_transport,
        check_central_dynamical,
    ),
}

SYSTEM_SUITES = {
    "dynamics": (
        check_pspds_axioms,
        check_map_extension,
        check_envelope_idempotents,
        check_envelope_minimal_ideals,
        check_translation_correspondence,
        check_recurrence_equivalences,
        check_proximal_recurrent_equivalence,
        check_proximal_collapse,
        check_ur_companion,
        check_minimality_readings,
    ),
}

SUITE_NAMES = tuple(SEMIGROUP_SUITES) + tuple(SYSTEM_SUITES) + ("all",)


def run_suite(name: str, obj) -> list[CheckResult]:
    """Run one named suite (or all applicable) on a semigroup or system.

    Semigroup suites run on the underlying semigroup of a system; the
    dynamics suite runs on the translation system of a bare semigroup.
    """
    is_system = isinstance(obj, PartialDynSystem)
    sg = obj.sg if is_system else obj
    results: list[CheckResult] = []
    if name == "all":
        for suite in SEMIGROUP_SUITES.values():
            results.extend(check(sg) for check in suite)
        system = obj if is_system else dynamics.translation_system(sg)
        for suite in SYSTEM_SUITES.values():
            results.extend(check(system) for check in suite)
        return results
    if name in SEMIGROUP_SUITES:
        return [check(sg) for check in SEMIGROUP_SUITES[name]]
    if name in SYSTEM_SUITES:
        system = obj if is_system else dynamics.translation_system(sg)
        return [check(system) for check in SYSTEM_SUITES[name]]
    raise ValueError(f"unknown suite {name!r}")
