"""Shared builders for the test suite: standard setups and seeded random
modules."""

from __future__ import annotations

import random

from cmreg.fields import GF32003
from cmreg.freemod import (
    GradedFreeModule,
    GradedMap,
    ModulePresentation,
    free_presentation,
)
from cmreg.rees import IdealData, unit_ideal
from cmreg.rings import PolyRing, QuotientRing, base_poly_ring


def cyclic_quotient(ring, polys, twist=0):
    """coker of the row [p1 .. pk] : the module (A/(p1..pk))(-twist)."""
    F = GradedFreeModule(ring, (twist,))
    ps = [ring.poly(t) if isinstance(t, str) else t for t in polys]
    ps = [p for p in ps if not p.is_zero()]
    if not ps:
        return free_presentation(ring, (twist,))
    src = tuple(twist + p.degree for p in ps)
    return ModulePresentation(
        GradedMap(GradedFreeModule(ring, src), F, [list(ps)])
    )


def hypersurface_setup():
    """A = K[X]/(X^2), M = N = A/(x), I = A."""
    Q = PolyRing(1, GF32003)
    A = QuotientRing(Q, [Q.poly("x1^2")])
    M = cyclic_quotient(A, ["x1"])
    return A, M, M, unit_ideal(A)


def two_relation_setup():
    """A = K[X,Y]/(X^2, Y^3), M = N = A/(y), I = A."""
    Q = PolyRing(2, GF32003)
    A = QuotientRing(Q, [Q.poly("x1^2"), Q.poly("x2^3")])
    M = cyclic_quotient(A, ["x2"])
    return A, M, M, unit_ideal(A)


def reduced_hypersurface_setup():
    """A = K[X,Y]/(XY), M = A/(x), N = (x) = (A/(y))(-1), I = (x)."""
    Q = PolyRing(2, GF32003)
    A = QuotientRing(Q, [Q.poly("x1*x2")])
    M = cyclic_quotient(A, ["x1"])
    N = ModulePresentation(
        GradedMap(
            GradedFreeModule(A, (2,)),
            GradedFreeModule(A, (1,)),
            [[A.poly("x2")]],
        )
    )
    I = IdealData(A, [A.poly("x1")])
    return A, M, N, I


def random_poly(rng: random.Random, ring, degree):
    """Random homogeneous polynomial of the given degree (may be zero).

    Over a quotient ring only standard monomials are used, so the result is
    already in normal form."""
    base = base_poly_ring(ring)
    if degree < 0:
        return base.zero
    if isinstance(ring, QuotientRing):
        monos = ring.std_monomials_of_degree(degree)
    else:
        monos = ring.monomials_of_degree(degree)
    terms = {}
    for exps in monos:
        c = rng.randrange(-2, 3)
        if c:
            terms[exps] = base.field(c)
    return base.from_terms(terms)


def random_presentation(
    rng: random.Random, ring, max_gens=2, max_rels=2, max_deg=3
):
    """Seeded random graded module: small cover, homogeneous relation
    columns with entry degrees <= max_deg."""
    ngens = rng.randint(1, max_gens)
    twists = tuple(sorted(rng.randint(0, 2) for _ in range(ngens)))
    F = GradedFreeModule(ring, twists)
    nrels = rng.randint(0, max_rels)
    cols = []
    src = []
    for _ in range(nrels):
        s = min(twists) + rng.randint(1, max_deg)
        col = tuple(random_poly(rng, ring, s - t) for t in twists)
        if all(p.is_zero() for p in col):
            continue
        cols.append(col)
        src.append(s)
    if not cols:
        return free_presentation(ring, twists)
    matrix = [[cols[m][k] for m in range(len(cols))] for k in range(ngens)]
    return ModulePresentation(
        GradedMap(GradedFreeModule(ring, tuple(src)), F, matrix)
    )


def random_ses(rng: random.Random, ring):
    """0 -> U -> M -> M'' -> 0 with U the image of random cover vectors;
    None when no nonzero vector came up."""
    from cmreg.ext_tor import to_presentation
    from cmreg.freemod import map_from_columns, vec_degree, vec_is_zero

    M = random_presentation(rng, ring)
    F = M.cover
    psi_cols = [tuple(c) for c in M.relations.columns()]
    gvecs = []
    for _ in range(rng.randint(1, 2)):
        s = min(F.twists) + rng.randint(0, 2)
        col = tuple(random_poly(rng, ring, s - t) for t in F.twists)
        if not vec_is_zero(col):
            gvecs.append(col)
    if not gvecs:
        return None
    sub = to_presentation(F, gvecs + psi_cols, psi_cols)
    quot_cols = psi_cols + gvecs
    twists = tuple(vec_degree(F, c) for c in quot_cols)
    quot = ModulePresentation(map_from_columns(twists, F, quot_cols))
    return sub.presentation, M, quot
