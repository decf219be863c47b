"""
Polarization and the radical
============================

Non-squarefree monomial ideals are handled by polarizing them.  If the
polarization satisfies (S_ell^j) then so does the radical.
"""
from serre_sr import complex_of_ideal, parse_ideal, polarize, radical, slj_definition
from serre_sr.monomial import format_ideal
from serre_sr.verify import check_radical_transfer

ideal = parse_ideal("vars: a b c\na^2*b\nb*c^2\n")
print(format_ideal(ideal))

pol = polarize(ideal)
print("polarized:")
print(format_ideal(pol))

rad = radical(ideal)
print("radical:")
print(format_ideal(rad))

# Both squarefree ideals have a Stanley-Reisner complex.
for name, sq in (("polarization", pol), ("radical", rad)):
    delta = complex_of_ideal(sq)
    print(name, "(S_2^0):", slj_definition(delta, 2, 0, 2).status())

# check_radical_transfer bundles the comparison.
for ell, j in ((2, 0), (2, 1), (3, 0)):
    print(ell, j, check_radical_transfer(ideal, ell, j, 2))
