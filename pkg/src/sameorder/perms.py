"""Permutation elements and the standard family constructors.

Families: cyclic C(n), dihedral D(n), dicyclic Dic(n) (so Q8 = Dic(2)),
symmetric S(n), alternating A(n), the semidirect products F(m,n,k) of a
cyclic normal subgroup of order m by a cyclic group of order n acting as
multiplication by k, explicit generator lists, and one bespoke order-168
construction (cex3).  Points are 0-indexed internally; the DSL's cycle
notation is 1-indexed.
"""

from __future__ import annotations

import math

from .core import DEFAULT_CAP, Group, GroupElement
from .errors import InvalidParameterError
from .numtheory import multiplicative_order


class Permutation(GroupElement):
    """A permutation of {0..n-1}, stored as its image array."""

    __slots__ = ("images", "_key")
    kind = "perm"

    def __init__(self, images):
        self.images = tuple(images)
        self._key = None

    def op(self, other: "Permutation") -> "Permutation":
        """self then other: images[i] = other(self(i))."""
        o = other.images
        return Permutation([o[i] for i in self.images])

    def inv(self) -> "Permutation":
        out = [0] * len(self.images)
        for i, j in enumerate(self.images):
            out[j] = i
        return Permutation(out)

    def key(self) -> bytes:
        if self._key is None:
            self._key = bytes(self.images)
        return self._key

    def known_order(self) -> int:
        return perm_order(self)

    def degree(self) -> int:
        return len(self.images)

    def cycles(self) -> list:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __repr__(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycs)


def perm_order(p: Permutation) -> int:
    """lcm of the cycle lengths."""
    order = 1
    for c in p.cycles():
        order = math.lcm(order, len(c))
    return order


def perm_identity(degree: int) -> Permutation:
    return Permutation(range(degree))


def perm_from_cycles(cycles, degree: int) -> Permutation:
    """Build a permutation from 0-indexed disjoint cycles."""
    images = list(range(degree))
    seen = set()
    for cyc in cycles:
        for p in cyc:
            if p in seen:
                raise InvalidParameterError(
                    f"point {p + 1} repeated across cycles of one permutation"
                )
            if not 0 <= p < degree:
                raise InvalidParameterError(f"point {p + 1} outside degree {degree}")
            seen.add(p)
        for i, p in enumerate(cyc):
            images[p] = cyc[(i + 1) % len(cyc)]
    return Permutation(images)


def permutation_group(generators, name=None, cap=DEFAULT_CAP) -> Group:
    if not generators:
        raise InvalidParameterError("a permutation group needs at least one generator")
    deg = generators[0].degree()
    for g in generators:
        if g.degree() != deg:
            raise InvalidParameterError("generators act on different point counts")
    return Group(generators, perm_identity(deg), name=name, cap=cap)


# -- family constructors --------------------------------------------------------


def cyclic_generators(n: int) -> list:
    if n < 1:
        raise InvalidParameterError(f"C({n}): order must be >= 1")
    return [Permutation([(i + 1) % n for i in range(n)])]


def dihedral_generators(n: int) -> list:
    """D(n) of order 2n.

    n = 1 and n = 2 get bespoke point sets: the natural action on n points
    collapses there (negation mod 1 or 2 fixes everything).
    """
    if n < 1:
        raise InvalidParameterError(f"D({n}): parameter must be >= 1")
    if n == 1:
        return [Permutation([1, 0])]
    if n == 2:
        return [Permutation([1, 0, 2, 3]), Permutation([0, 1, 3, 2])]
    rot = Permutation([(i + 1) % n for i in range(n)])
    ref = Permutation([(-i) % n for i in range(n)])
    return [rot, ref]


def dicyclic_generators(n: int) -> list:
    """Dic(n) of order 4n via its left regular representation.

    Elements are a^i b^j with a of order 2n, b^2 = a^n, b a b^-1 = a^-1;
    the point a^i b^j gets index j*2n + i.
    """
    if n < 1:
        raise InvalidParameterError(f"Dic({n}): parameter must be >= 1")
    m = 2 * n

    def left_mul(i0, j0):
        images = []
        for j in range(2):
            for i in range(m):
                # (a^i0 b^j0) * (a^i b^j)
                if j0 == 0:
                    ii, jj = (i0 + i) % m, j
                elif j == 0:
                    ii, jj = (i0 - i) % m, 1
                else:
                    ii, jj = (i0 - i + n) % m, 0
                images.append(jj * m + ii)
        return Permutation(images)

    return [left_mul(1, 0), left_mul(0, 1)]


def symmetric_generators(n: int) -> list:
    if n < 1:
        raise InvalidParameterError(f"S({n}): parameter must be >= 1")
    if n == 1:
        return [Permutation([0])]
    cycle = Permutation([(i + 1) % n for i in range(n)])
    if n == 2:
        return [cycle]
    swap = perm_from_cycles([(0, 1)], n)
    return [swap, cycle]


def alternating_generators(n: int) -> list:
    if n < 1:
        raise InvalidParameterError(f"A({n}): parameter must be >= 1")
    if n <= 2:
        return [perm_identity(max(n, 1))]
    if n == 3:
        return [perm_from_cycles([(0, 1, 2)], 3)]
    three = perm_from_cycles([(0, 1, 2)], n)
    if n % 2 == 1:
        big = Permutation([(i + 1) % n for i in range(n)])
    else:
        # an n-cycle is odd for even n; rotate all but the first point instead
        big = Permutation([0] + [1 + (i + 1) % (n - 1) for i in range(n - 1)])
    return [three, big]


def frobenius_generators(m: int, n: int, k: int) -> list:
    """F(m,n,k): C_m extended by C_n acting as x -> k*x mod m.

    Requires k to have multiplicative order exactly n mod m, which also
    forces gcd(k, m) = 1; the group has order m*n and acts on m points.
    """
    if m < 2:
        raise InvalidParameterError(f"F({m},{n},{k}): modulus must be >= 2")
    if n < 1 or k < 0:
        raise InvalidParameterError(f"F({m},{n},{k}): parameters out of range")
    kk = k % m
    if math.gcd(kk, m) != 1:
        raise InvalidParameterError(
            f"F({m},{n},{k}): gcd({k},{m}) = {math.gcd(kk, m)}, multiplier must be a unit"
        )
    if pow(kk, n, m) != 1:
        raise InvalidParameterError(
            f"F({m},{n},{k}): {k}^{n} = {pow(kk, n, m)} (mod {m}), need 1"
        )
    d = multiplicative_order(kk, m)
    if d != n:
        raise InvalidParameterError(
            f"F({m},{n},{k}): {k} has multiplicative order {d} (mod {m}), need exactly {n}"
        )
    shift = Permutation([(x + 1) % m for x in range(m)])
    mult = Permutation([(kk * x) % m for x in range(m)])
    return [shift, mult]


def cex3_generators() -> list:
    """The third order-168 construction: C2 x ((C14 x C2) : C3).

    Writing C14 x C2 = C7 x (C2 x C2), the C3 acts diagonally: as squaring
    on the C7 part and as the 3-cycle on the involutions of the Klein four
    part.  This is the action pinned here; letting C3 act on only one factor
    gives five distinct class sizes no longer (the type gains a sixth size).
    Points 0-6 carry the C7, 7-10 the four-point regular action of the Klein
    group, 11-12 the outer C2.
    """
    deg = 13
    seven = perm_from_cycles([(0, 1, 2, 3, 4, 5, 6)], deg)
    t1 = perm_from_cycles([(7, 8), (9, 10)], deg)
    t2 = perm_from_cycles([(7, 9), (8, 10)], deg)
    images = list(range(deg))
    for x in range(7):
        images[x] = (2 * x) % 7
    images[8], images[9], images[10] = 9, 10, 8
    act = Permutation(images)
    outer = perm_from_cycles([(11, 12)], deg)
    return [seven, t1, t2, act, outer]


FAMILY_BUILDERS = {
    "C": (cyclic_generators, 1),
    "D": (dihedral_generators, 1),
    "Dic": (dicyclic_generators, 1),
    "S": (symmetric_generators, 1),
    "A": (alternating_generators, 1),
    "F": (frobenius_generators, 3),
    "cex3": (cex3_generators, 0),
}


def family_generators(family: str, params) -> list:
    """Generators for a named permutation family; see FAMILY_BUILDERS."""
    if family not in FAMILY_BUILDERS:
        raise InvalidParameterError(f"unknown permutation family {family!r}")
    builder, arity = FAMILY_BUILDERS[family]
    if len(params) != arity:
        raise InvalidParameterError(
            f"{family} takes {arity} parameter(s), got {len(params)}"
        )
    return builder(*params)


def family_group(family: str, params, name=None, cap=DEFAULT_CAP) -> Group:
    return permutation_group(family_generators(family, params), name=name, cap=cap)


def direct_product(a: Group, b: Group, name=None, cap=DEFAULT_CAP) -> Group:
    """Product of two permutation groups, acting on disjoint point sets."""
    da = a.identity.degree()
    db = b.identity.degree()
    gens = [Permutation(list(g.images) + list(range(da, da + db))) for g in a.generators]
    gens += [Permutation(list(range(da)) + [da + i for i in h.images]) for h in b.generators]
    return Group(gens, perm_identity(da + db), name=name, cap=cap)
