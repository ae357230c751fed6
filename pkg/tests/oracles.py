"""Independent brute-force oracles used to cross-check the production code.

Everything here works with plain Python sets and raw definitional
quantifier sweeps (no bitmask tricks, no monotonicity reductions), so a
disagreement with the package always points at one side.
"""

from itertools import chain, combinations


def prod(sg, a, b):
    v = sg.product(a, b)
    return None if v == -1 else v


def elements(sg):
    return list(range(sg.size))


def nonempty_subsets(items):
    items = list(items)
    return [
        frozenset(c)
        for r in range(1, len(items) + 1)
        for c in combinations(items, r)
    ]


def all_subsets(items):
    items = list(items)
    return [
        frozenset(c)
        for r in range(len(items) + 1)
        for c in combinations(items, r)
    ]


def R(sg, x):
    return frozenset(s for s in elements(sg) if prod(sg, x, s) is not None)


def L(sg, x):
    return frozenset(s for s in elements(sg) if prod(sg, s, x) is not None)


def R_family(sg, H):
    out = frozenset(elements(sg))
    for s in H:
        out &= R(sg, s)
    return out


def quotient(sg, s, A):
    return frozenset(t for t in R(sg, s) if prod(sg, s, t) in A)


def union_quotients(sg, H, A):
    out = set()
    for t in H:
        out |= quotient(sg, t, A)
    return frozenset(out)


def brute_validate(sg):
    """All weak-associativity violations by triple enumeration."""
    bad = []
    for x in elements(sg):
        for y in elements(sg):
            for z in elements(sg):
                xy = prod(sg, x, y)
                yz = prod(sg, y, z)
                left = prod(sg, xy, z) if xy is not None else None
                right = prod(sg, x, yz) if yz is not None else None
                if (left is None) != (right is None):
                    bad.append((x, y, z, "one-side-undefined"))
                elif left is not None and left != right:
                    bad.append((x, y, z, "unequal"))
    return bad


def is_left_ideal(sg, I):
    return bool(I) and all(
        prod(sg, y, x) in I
        for x in I
        for y in L(sg, x)
    )


def is_right_ideal(sg, I):
    return bool(I) and all(
        prod(sg, x, y) in I
        for x in I
        for y in R(sg, x)
    )


def is_ideal(sg, I):
    return is_left_ideal(sg, I) and is_right_ideal(sg, I)


def brute_left_ideals(sg):
    return [I for I in nonempty_subsets(elements(sg)) if is_left_ideal(sg, I)]


def brute_ideals(sg):
    return [I for I in nonempty_subsets(elements(sg)) if is_ideal(sg, I)]


def minimal_members(family):
    return [
        a for a in family if not any(b < a for b in family)
    ]


def brute_minimal_left_ideals(sg):
    return minimal_members(brute_left_ideals(sg))


def brute_smallest_ideal(sg):
    """The unique ideal contained in every ideal, if one exists."""
    ideals = brute_ideals(sg)
    for k in ideals:
        if all(k <= i for i in ideals):
            return k
    return None


def brute_idempotents(sg):
    return frozenset(x for x in elements(sg) if prod(sg, x, x) == x)


# --- largeness notions, raw quantifier sweeps ---------------------------


def brute_partially_syndetic(sg, A):
    for u in elements(sg):
        lu = L(sg, u)
        if not lu:
            continue
        if not any(
            R_family(sg, H) <= union_quotients(sg, H, A)
            for H in nonempty_subsets(lu)
        ):
            return False
    return True


def brute_syndetic(sg, A):
    delta = R_family(sg, elements(sg))
    if not delta:
        return True
    return any(
        delta <= union_quotients(sg, H, A)
        for H in nonempty_subsets(elements(sg))
    )


def brute_partially_thick(sg, A):
    for u in elements(sg):
        lu = L(sg, u)
        if not lu:
            continue
        if all(
            any(
                all(prod(sg, s, t) in A for s in F)
                for t in R_family(sg, F)
            )
            for F in nonempty_subsets(lu)
        ):
            return True
    return False


def brute_c_thick(sg, A):
    delta = R_family(sg, elements(sg))
    for p in delta:
        lp = L(sg, p)
        if lp and all(prod(sg, s, p) in A for s in lp):
            return True
    return False


def brute_partially_piecewise_syndetic(sg, A):
    for s in elements(sg):
        rs = R(sg, s)
        if not rs:
            continue
        found = False
        for H in nonempty_subsets(rs):
            u = union_quotients(sg, H, A)
            rh = R_family(sg, H)
            if all(
                any(
                    all(prod(sg, t, x) in u for t in T)
                    for x in R_family(sg, T)
                )
                for T in nonempty_subsets(rh)
            ):
                found = True
                break
        if not found:
            return False
    return True


def brute_c_piecewise_syndetic(sg, A):
    for s in elements(sg):
        rs = R(sg, s)
        if not rs:
            continue
        for H in nonempty_subsets(rs):
            u = union_quotients(sg, H, A)
            rh = R_family(sg, H)
            if all(
                any(
                    all(prod(sg, t, x) in u for t in T & rh)
                    for x in R_family(sg, T)
                )
                for T in nonempty_subsets(rs)
            ):
                return True
    return False


BRUTE_CLASSIFIERS = {
    "partially-syndetic": brute_partially_syndetic,
    "syndetic": brute_syndetic,
    "partially-thick": brute_partially_thick,
    "c-thick": brute_c_thick,
    "partially-piecewise-syndetic": brute_partially_piecewise_syndetic,
    "c-piecewise-syndetic": brute_c_piecewise_syndetic,
}


# --- dynamics ------------------------------------------------------------


def brute_invariant_sets(d):
    """Nonempty Y with T_s(Y n dom) inside Y, by subset sweep."""
    out = []
    for Y in nonempty_subsets(range(d.points)):
        ok = True
        for m in d.maps:
            for x in Y:
                if m.defined_at(x) and int(m.image[x]) not in Y:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(Y)
    return out


def brute_minimal_subsystems(d):
    return minimal_members(brute_invariant_sets(d))
