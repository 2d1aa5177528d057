"""The PBW elements B_{n delta + alpha_0}, B_{n delta + alpha_1}, B_{n delta} in Delta_q.

Each is computed from its recursion and from its closed form in Chebyshev
polynomials of C, and the two are compared.
"""

import time

from qonsager import automorphisms as aut
from qonsager.pbw import (
    DELTA_METHODS, check_center_membership, check_fix_property, pbw_delta, pbw_real,
)
from qonsager.render import to_latex, to_text

for n in range(4):
    rec = pbw_real("alpha0", n).value
    closed = pbw_real("alpha0", n, "closed").value
    print(f"B_{{{n}d+a0}} = {to_text(rec)}")
    assert rec == closed

print()
via_map = aut.T1_INV(aut.identity().image("A"))
print("B_{d+a1} as t1^-1(A):", to_text(via_map))
print("matches the recursion:", via_map == pbw_real("alpha1", 1).value)
print("t0 t1 fixes B_d:", check_fix_property())

print()
start = time.perf_counter()
for n in range(1, 11):
    vals = {m: pbw_delta(n, m).value for m in DELTA_METHODS}
    agree = len(set(vals.values())) == 1
    print(f"n={n:2d}  terms={len(vals['closed']):3d}  methods agree={agree}  "
          f"only C and centrals={check_center_membership(n)}")
print(f"({time.perf_counter() - start:.2f}s)")

# Grouped by Chebyshev polynomials, B_{3 delta} matches the tabulated shape.
print()
print(to_latex(pbw_delta(3).value, chebyshev=True))
