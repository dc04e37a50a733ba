"""
Ideal powers, reductions, and the stabilization degree
======================================================

For an ideal I and module N the package builds the submodules I^n N and
the quotients N / I^n N as honest graded presentations.  The growth rate
of reg(I^n N) in n is controlled by an invariant rho_N(I): the smallest
d(J) over ideals J that are N-reductions of I (I^{n+1} N = J I^n N for
large n).  rho_upper certifies an upper bound for it by exhibiting a
reduction witness; it never claims exactness.
"""

from cmreg.fields import GF32003
from cmreg.freemod import cyclic_presentation
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

# The running example: A = K[x,y]/(xy), N = (A/(y))(-1), I = (x).
Q = PolyRing(2, GF32003)
A = QuotientRing(Q, [Q.poly("x1*x2")])
N = cyclic_presentation(A, [A.poly("x2")]).shift(-1)
I = IdealData(A, [A.poly("x1")])

# -- powers and quotients ------------------------------------------------

# reg(I^n N) climbs by exactly d(I) = 1 per power here; the quotients
# stabilize one lower.  n = 0 is the degenerate row: I^0 N = N and
# N/N = 0, printed as -inf.
print("n   reg I^n N   reg N/I^n N")
for n in range(5):
    rp = regularity(power_module(I, n, N))
    rq = regularity(quotient_module(N, I, n))
    print(f"{n}   {rp!s:>9}   {rq!s:>11}")
assert power_module(I, 0, N) is N

# -- reduction certificates ----------------------------------------------

# is_reduction(J, I, N, n_max) searches for the stabilization exponent
# and returns a certificate carrying the witness n; J must sit inside I
# or the precondition check raises.
cert = is_reduction(I, I, N, n_max=3)
print()
print("I is a reduction of itself:", cert.found, " witness n =", cert.witness)

# The zero ideal never stabilizes against I on this N; the certificate
# records the failure as inconclusive rather than a disproof.
cert0 = is_reduction(IdealData(A, []), I, N, n_max=3)
print(f"0 is a reduction of I: {cert0.found}  (searched up to n = {cert0.n_max})")

# -- certified upper bounds for rho --------------------------------------

# rho_upper tries all subsets of the generators of I (plus any explicit
# candidates), keeps the certified reductions, and reports the smallest
# generator degree d(J) among them.
bound = rho_upper(I, N, n_max=3)
print()
print("rho upper bound:", bound.value, f"({bound.label})")
print("witness ideal generators:", [str(p) for p in bound.witness.generators])
print("certificate: found =", bound.certificate.found,
      " stable from n =", bound.certificate.witness)
print("d(witness) =", d_of(bound.witness))

# For the unit ideal every power module is N itself, so the bound is 0.
print()
print("rho upper bound for I = A:", rho_upper(unit_ideal(A), N).value)
