from __future__ import annotations

import random

from helpers import cyclic_quotient, random_presentation
from cmreg.fields import GF32003, QQ
from cmreg.regularity import betti_oracle, present_over_Q
from cmreg.resolution import betti_table, resolve_over_Q
from cmreg.rings import PolyRing, QuotientRing

Q2 = PolyRing(2, GF32003)


def _resolution_betti(M):
    return betti_table(resolve_over_Q(present_over_Q(M)))


def test_oracle_on_koszul_complexes():
    for d in (1, 2, 3):
        Q = PolyRing(d, GF32003)
        K = cyclic_quotient(Q, [f"x{i + 1}" for i in range(d)])
        assert betti_oracle(K) == _resolution_betti(K)


def test_oracle_on_seeded_random_modules(seed):
    # Koszul-homology ranks against the minimal resolution, entry by entry
    rng = random.Random(seed)
    for trial in range(30):
        M = random_presentation(rng, Q2)
        assert betti_oracle(M) == _resolution_betti(M)


def test_oracle_over_quotient_ring(seed):
    rng = random.Random(seed + 7)
    A = QuotientRing(Q2, [Q2.poly("x1*x2")])
    for trial in range(8):
        M = random_presentation(rng, A)
        assert betti_oracle(M) == _resolution_betti(M)


def test_oracle_char_zero():
    Q = PolyRing(2, QQ)
    M = cyclic_quotient(Q, ["x1^2", "x1*x2"])
    assert betti_oracle(M) == _resolution_betti(M)


def test_oracle_partial_window_flag():
    M = cyclic_quotient(Q2, ["x1^3"])
    full = betti_oracle(M)
    assert not full.partial
    small = betti_oracle(M, deg_cap=1)
    assert small.partial
    # entries below the cap agree with the full table
    for (i, j), b in small.entries.items():
        assert full.entries.get((i, j)) == b
