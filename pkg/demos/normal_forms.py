"""Reducing products in Delta_q to the two linear bases.

Run with ``python demos/normal_forms.py``.
"""

from qonsager.algebra import A, B, C, OMEGA
from qonsager.expr import parse_element
from qonsager.normalform import from_main_basis, is_zero, normalize_pre, to_main_basis
from qonsager.render import to_latex, to_text

# The three exchange rules, read off by normalizing a descending pair.
for pair in ("B*A", "C*A", "C*B"):
    print(f"{pair:>4} = {to_text(normalize_pre(parse_element(pair)))}")

# In the pre basis A^i B^j C^k never loses its ABC content...
u = A * B * C
print("\nABC in the pre basis:  ", to_text(normalize_pre(u)))
# ...while the main basis trades it for Omega.
print("ABC in the main basis: ", to_text(to_main_basis(u)))

# Omega is central; expanding it gives back the Casimir polynomial.
print("\nOmega expanded:", to_text(from_main_basis(OMEGA)))

# A longer word, and a check that both routes agree.
w = parse_element("C B A C B A")
m = to_main_basis(w)
print(f"\nCBACBA has {len(normalize_pre(w))} pre-basis terms and {len(m)} main-basis terms")
print("round trip ok:", to_main_basis(from_main_basis(m)) == m)

# The q-Dolan/Grady relation holds in Delta_q.
rel = parse_element("A^3 B - [3]_q A^2 B A + [3]_q A B A^2 - B A^3 - (q^2 - q^-2)^2 (B A - A B)")
print("q-Dolan/Grady relation vanishes:", is_zero(rel))

print("\nLaTeX for BA:", to_latex(to_main_basis(B * A)))
