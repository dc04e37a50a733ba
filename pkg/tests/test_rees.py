from __future__ import annotations

import pytest

from helpers import (
    cyclic_quotient,
    hypersurface_setup,
    reduced_hypersurface_setup,
)
from cmreg.errors import ReductionPreconditionError
from cmreg.fields import GF32003
from cmreg.freemod import NEG_INF, free_presentation
from cmreg.rees import (
    IdealData,
    d_of,
    is_reduction,
    power_module,
    quotient_module,
    rho_upper,
    unit_ideal,
)
from cmreg.regularity import regularity
from cmreg.rings import PolyRing, QuotientRing


def _setup66():
    return reduced_hypersurface_setup()


def test_power_module_gold():
    # I = (x), N = (x) over K[X,Y]/(XY): I^n N = (x^{n+1}) = K[x](-n-1),
    # so reg I^n N = n + 1
    A, M, N, I = _setup66()
    for n in range(5):
        assert regularity(power_module(I, n, N)) == n + 1
    # I^0 N is N itself
    assert power_module(I, 0, N) is N


def test_quotient_module_gold():
    # N / I^n N = Kx + ... + Kx^n has reg n for n >= 1, and is zero at n = 0
    A, M, N, I = _setup66()
    assert regularity(quotient_module(N, I, 0)) == NEG_INF
    for n in range(1, 5):
        assert regularity(quotient_module(N, I, n)) == n


def test_unit_ideal_powers_fix_everything():
    A, M, N, I = hypersurface_setup()
    assert I.improper
    for n in range(3):
        assert power_module(I, n, N) is N
    # N / A^n N = 0 for every n
    for n in range(3):
        assert regularity(quotient_module(N, I, n)) == NEG_INF


def test_is_reduction_and_certificate():
    A, M, N, I = _setup66()
    # I is a reduction of itself with witness 0
    cert = is_reduction(I, I, N, n_max=2)
    assert cert.found and cert.witness == 0
    # the zero ideal is not a reduction of (x) on N = (x)
    zero = IdealData(A, [])
    cert = is_reduction(zero, I, N, n_max=3)
    assert not cert.found
    # a candidate not inside I is rejected outright
    J = IdealData(A, [A.poly("x2")])
    with pytest.raises(ReductionPreconditionError):
        is_reduction(J, I, N, n_max=2)


def test_rho_upper_values():
    # the unit ideal is improper, I^n N = N for all n, and it is its own
    # best reduction with d = 0
    A, M, N, I = hypersurface_setup()
    bound = rho_upper(I, N)
    assert bound.value == 0
    # principal ideal (x) on N = (x): rho upper bound is d((x)) = 1
    A, M, N, I = _setup66()
    bound = rho_upper(I, N, n_max=3)
    assert bound.value == 1
    assert bound.certificate.found
    assert not bound.truncated
    assert bound.label == "upper bound"


def test_rho_upper_principal_higher_degree():
    # I = (x^2) over K[X]: the only reductions are (x^2) and itself, d = 2
    Q = PolyRing(1, GF32003)
    N = free_presentation(Q, (0,))
    I = IdealData(Q, [Q.poly("x1^2")])
    bound = rho_upper(I, N, n_max=2)
    assert bound.value == 2
    assert d_of(bound.witness) == 2


def test_d_of_conventions():
    Q = PolyRing(2, GF32003)
    assert d_of(unit_ideal(Q)) == 0
    assert d_of(IdealData(Q, [])) == 0
    assert d_of(IdealData(Q, [Q.poly("x1^2"), Q.poly("x2")])) == 2


def test_power_quotient_exact_sequence_regularity():
    # 0 -> I^n N -> N -> N/I^n N -> 0 sanity via the regularity bounds
    A, M, N, I = _setup66()
    rn = regularity(N)
    for n in range(1, 4):
        rp = regularity(power_module(I, n, N))
        rq = regularity(quotient_module(N, I, n))
        assert rn <= max(rp, rq)
        assert rq <= max(rp - 1, rn)
