"""Twist calculus for Z^3-graded free data over S = Q[Y_1..Y_b, Z_1..Z_c].

deg(Y_j) = (0,1,h_j) and deg(Z_k) = (1,0,g_k), with h and g sorted
descending.  A free S-module summand S(-b1, -b2, -a) contributes to the
(i, n, *) component one Q-twist a + sum(u_j h_j) + sum(v_k g_k) for every
composition u of n - b2 into b parts and v of i - b1 into c parts, and
nothing when i < b1 or n < b2.  The constants

    c_l = max over level-l generators of (a - g1*b1 - h1*b2)
    e   = max over levels of (c_l - l)

bound the maximal twist of every component by g1*i + h1*n + c_l, hence the
component regularity of the resolved module by g1*i + h1*n + e.

This module consumes resolution DATA (generator multidegrees per level),
not actual modules; connecting its lines to measured regularity tables is
the harness's job.
"""

from __future__ import annotations

from math import comb

from .freemod import NEG_INF


class TrigradedRingSpec:
    """Variable counts (d, b, c) and twist weights h (len b), g (len c);
    both weight lists are sorted descending on construction."""

    __slots__ = ("d", "b", "c", "h", "g")

    def __init__(self, d, b, c, h, g):
        if len(h) != b or len(g) != c:
            raise ValueError("weight list lengths must match b and c")
        self.d = d
        self.b = b
        self.c = c
        self.h = tuple(sorted(h, reverse=True))
        self.g = tuple(sorted(g, reverse=True))

    @property
    def h1(self):
        return self.h[0] if self.h else 0

    @property
    def g1(self):
        return self.g[0] if self.g else 0

    @property
    def homological_range(self):
        """d' = d + b + c, the largest level the data may populate."""
        return self.d + self.b + self.c


class TrigradedFreeData:
    """Generator multidegrees (b1, b2, a) per homological level 0..d'."""

    __slots__ = ("levels",)

    def __init__(self, levels, spec: TrigradedRingSpec = None):
        self.levels = {}
        for l, gens in dict(levels).items():
            l = int(l)
            if l < 0:
                raise ValueError("negative homological level")
            if spec is not None and l > spec.homological_range:
                raise ValueError(
                    f"level {l} exceeds d' = {spec.homological_range}"
                )
            gens = [tuple(int(x) for x in gtuple) for gtuple in gens]
            for gtuple in gens:
                if len(gtuple) != 3:
                    raise ValueError("multidegrees are (b1, b2, a) triples")
            if gens:
                self.levels[l] = gens

    def level(self, l):
        return self.levels.get(l, [])


def bound_constants(spec: TrigradedRingSpec, data: TrigradedFreeData):
    """({l: c_l} over non-empty levels, e = max(c_l - l))."""
    if not data.level(0):
        raise ValueError("data must have at least one generator at level 0")
    cs = {}
    for l, gens in sorted(data.levels.items()):
        cs[l] = max(a - spec.g1 * b1 - spec.h1 * b2 for b1, b2, a in gens)
    e = max(cl - l for l, cl in cs.items())
    return cs, e


def compositions(total, parts):
    """Weak compositions of total into parts non-negative integers, in
    colexicographic order; a single empty composition when parts = 0 and
    total = 0."""
    if parts == 0:
        return [()] if total == 0 else []
    out = []

    def rec(prefix, remaining, pos):
        if pos == parts - 1:
            out.append(tuple(prefix + [remaining]))
            return
        for v in range(remaining + 1):
            rec(prefix + [v], remaining - v, pos + 1)

    rec([], total, 0)
    out.sort(key=lambda t: t[::-1])
    return out


def component_twists(spec: TrigradedRingSpec, data: TrigradedFreeData, l, i, n):
    """Multiset (sorted list) of Q-twists in the (i, n, *) component of F_l."""
    out = []
    for b1, b2, a in data.level(l):
        if i < b1 or n < b2:
            continue
        for u in compositions(n - b2, spec.b):
            hu = sum(uj * hj for uj, hj in zip(u, spec.h))
            for v in compositions(i - b1, spec.c):
                out.append(a + hu + sum(vk * gk for vk, gk in zip(v, spec.g)))
    out.sort()
    return out


def component_twist_count(spec, b1, b2, i, n):
    """Stars-and-bars cardinality for one generator: the number of (u, v)
    composition pairs contributing at (i, n)."""
    if i < b1 or n < b2:
        return 0
    return comb(n - b2 + spec.b - 1, spec.b - 1) * comb(
        i - b1 + spec.c - 1, spec.c - 1
    )


def component_bound(spec: TrigradedRingSpec, data: TrigradedFreeData, i, n):
    """The bound line g1*i + h1*n + e at the grid point (i, n)."""
    _, e = bound_constants(spec, data)
    return spec.g1 * i + spec.h1 * n + e


def max_twist_bound_check(spec, data, l, i, n) -> bool:
    """max component twist <= g1*i + h1*n + c_l; vacuously true when the
    component (or the level) is empty."""
    twists = component_twists(spec, data, l, i, n)
    if not twists:
        return True
    gens = data.level(l)
    if not gens:
        return True
    cl = max(a - spec.g1 * b1 - spec.h1 * b2 for b1, b2, a in gens)
    return max(twists) <= spec.g1 * i + spec.h1 * n + cl


def free_component_regularity(spec, data, i, n):
    """For free data concentrated in level 0 the component is a free
    Q-module, so its regularity is the maximal twist (NEG_INF if empty)."""
    twists = component_twists(spec, data, 0, i, n)
    return max(twists) if twists else NEG_INF
