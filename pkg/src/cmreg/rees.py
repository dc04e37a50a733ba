"""Ideal powers acting on modules, reduction certificates, d(J), and a
certified upper bound for the reduction-degree invariant rho_N(I).

rho_N(I) is the least d(J) over homogeneous ideals J <= I with
I^{n+1}N = J I^n N for some n.  Finding true minimal reductions needs
genericity arguments, so rho_upper only certifies an upper bound: it tries
candidate ideals (by default all subsets of the minimal generators of I),
keeps those whose reduction property it can witness on the checked range,
and reports the smallest d(J) among them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .errors import ReductionPreconditionError
from .ext_tor import to_presentation
from .freemod import (
    GradedFreeModule,
    ModulePresentation,
    map_from_columns,
    vec_degree,
    vec_is_zero,
)
from .groebner import (
    DEFAULT_DEGREE_CAP,
    minimal_generators,
    normal_form,
    submodule_contains,
    submodule_equal,
    submodule_gb,
)
from .rings import QuotientRing, base_poly_ring


class IdealData:
    """A homogeneous ideal of A by minimal generators, degrees descending."""

    __slots__ = ("ring", "generators", "degrees", "improper")

    def __init__(self, ring, generators, cap=DEFAULT_DEGREE_CAP):
        self.ring = ring
        nf = ring.normal_form if isinstance(ring, QuotientRing) else (lambda p: p)
        gens = [nf(g) for g in generators]
        gens = [g for g in gens if not g.is_zero()]
        F = GradedFreeModule(ring, (0,))
        mins = minimal_generators([(g,) for g in gens], F)
        self.generators = tuple(v[0] for v in mins)
        self.degrees = tuple(g.degree for g in self.generators)
        one = (base_poly_ring(ring).one,)
        if self.generators:
            gb = submodule_gb([(g,) for g in self.generators], F, cap=cap)
            self.improper = submodule_contains(gb, one)
        else:
            self.improper = False

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def d1(self):
        """Largest minimal-generator degree (the d(J) value lives here)."""
        return self.degrees[0] if self.degrees else 0

    def __repr__(self):
        if self.improper:
            return "Ideal(unit)"
        return f"Ideal(degrees={list(self.degrees)})"


def unit_ideal(ring) -> IdealData:
    return IdealData(ring, [base_poly_ring(ring).one])


def _power_products(I: IdealData, n: int):
    """All degree-n products of the generators, nonzero normal forms only."""
    ring = I.ring
    nf = ring.normal_form if isinstance(ring, QuotientRing) else (lambda p: p)
    if n == 0:
        return [base_poly_ring(ring).one]
    out = []
    for pick in combinations_with_replacement(range(len(I.generators)), n):
        p = I.generators[pick[0]]
        for t in pick[1:]:
            p = p * I.generators[t]
        p = nf(p)
        if not p.is_zero():
            out.append(p)
    return out


def _scaled_basis_columns(F: GradedFreeModule, scalars):
    zero = F.base.zero
    cols = []
    for s in scalars:
        for k in range(F.rank):
            cols.append(tuple(s if i == k else zero for i in range(F.rank)))
    return cols


def power_module(
    I: IdealData, n: int, N: ModulePresentation, degree_cap=DEFAULT_DEGREE_CAP
) -> ModulePresentation:
    """I^n N as a graded module presentation (I^0 N = N)."""
    if n == 0 or I.improper:
        return N
    F = N.cover
    psi = N.relations.columns()
    prods = _power_products(I, n)
    gens = _scaled_basis_columns(F, prods)
    sub = to_presentation(F, gens + list(psi), list(psi), degree_cap)
    return sub.presentation


def quotient_module(
    N: ModulePresentation, I: IdealData, n: int, degree_cap=DEFAULT_DEGREE_CAP
) -> ModulePresentation:
    """N / I^n N (the zero module when n = 0)."""
    F = N.cover
    cols = [c for c in N.relations.columns() if not vec_is_zero(c)]
    if I.is_zero and n > 0:
        return N
    prods = _power_products(I, n)
    cols = cols + _scaled_basis_columns(F, prods)
    if not cols:
        return ModulePresentation(
            map_from_columns((), F, [])
        )
    twists = tuple(vec_degree(F, c) for c in cols)
    return ModulePresentation(map_from_columns(twists, F, cols))


@dataclass
class ReductionCertificate:
    """Witness that I^{n0+1} N = J I^{n0} N, or the absence of one below
    n_max (inconclusive, not a disproof)."""

    ideal: IdealData
    witness: object  # int or None
    n_max: int

    @property
    def found(self) -> bool:
        return self.witness is not None


def is_reduction(
    J: IdealData,
    I: IdealData,
    N: ModulePresentation,
    n_max: int,
    degree_cap=DEFAULT_DEGREE_CAP,
) -> ReductionCertificate:
    """Smallest n <= n_max with I^{n+1}N = J I^n N, as a certificate."""
    ring = I.ring
    F1 = GradedFreeModule(ring, (0,))
    if I.generators:
        gbI = submodule_gb([(g,) for g in I.generators], F1, cap=degree_cap)
        for g in J.generators:
            if not submodule_contains(gbI, (g,)):
                raise ReductionPreconditionError(
                    "candidate ideal is not contained in I"
                )
    elif J.generators:
        raise ReductionPreconditionError("candidate ideal is not contained in I")
    F = N.cover
    psi = [c for c in N.relations.columns() if not vec_is_zero(c)]
    for n in range(n_max + 1):
        lhs = _scaled_basis_columns(F, _power_products(I, n + 1)) + psi
        jin = []
        for yj in J.generators:
            for p in _power_products(I, n):
                jin.append(yj * p)
        rhs = _scaled_basis_columns(F, jin) + psi
        if submodule_equal(lhs, rhs, F, cap=degree_cap):
            return ReductionCertificate(J, n, n_max)
    return ReductionCertificate(J, None, n_max)


def d_of(J: IdealData) -> int:
    """Largest minimal-generator degree; 0 for the unit and zero ideals."""
    if J.improper or J.is_zero:
        return 0
    return J.d1()


@dataclass
class RhoBound:
    """Certified upper bound for rho_N(I); never an exact claim."""

    value: int
    witness: IdealData
    certificate: ReductionCertificate
    truncated: bool

    label = "upper bound"


SUBSET_ENUM_LIMIT = 8


def rho_upper(
    I: IdealData,
    N: ModulePresentation,
    candidates=(),
    n_max: int = 3,
    degree_cap=DEFAULT_DEGREE_CAP,
) -> RhoBound:
    """min d(J) over candidate ideals certified as N-reductions of I.

    Default candidates are all subsets of the minimal generators of I
    (skipped, with the truncated flag set, when I has more than
    SUBSET_ENUM_LIMIT generators); I itself is always included and always
    succeeds at n = 0.
    """
    ring = I.ring
    pool = []
    truncated = False
    b = len(I.generators)
    if b <= SUBSET_ENUM_LIMIT:
        for size in range(b + 1):
            for pick in combinations(range(b), size):
                pool.append(IdealData(ring, [I.generators[t] for t in pick]))
    else:
        truncated = True
    pool.extend(candidates)
    pool.append(I)
    pool.sort(key=lambda J: (d_of(J), len(J.generators)))
    best = None
    for J in pool:
        if best is not None and d_of(J) >= best.value:
            break
        cert = is_reduction(J, I, N, n_max, degree_cap)
        if cert.found:
            best = RhoBound(d_of(J), J, cert, truncated)
    if best is None:
        # I is always a reduction of itself with witness 0
        cert = ReductionCertificate(I, 0, n_max)
        best = RhoBound(d_of(I), I, cert, truncated)
    return best
