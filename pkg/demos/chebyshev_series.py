"""Chebyshev polynomials U_n (monic convention) and their generating functions."""

from qonsager.chebyshev import (
    SERIES_IDS, check_series_identity, series_sides, substitute_z, u_closed_sum, u_poly, u_via_z,
)

for n in range(10):
    print(f"U_{n} = {u_poly(n)}")

# three descriptions of the same polynomial
n = 7
print("\nrecurrence == binomial sum:", u_poly(n) == u_closed_sum(n))
print("x -> z + 1/z gives", substitute_z(u_poly(n)), "==", u_via_z(n) == substitute_z(u_poly(n)))

# sum_n U_n t^n times (1 - t x + t^2) is 1 up to the truncation order
s, den, num = series_sides("gf", 6)
prod = s * den
print("\n(sum U_n t^n)(1 - tx + t^2), coefficients through t^6:")
for e in sorted(prod.coeffs):
    print(f"  t^{e}: {prod.coeffs[e]}")

print()
for which in SERIES_IDS:
    print(f"{which:>10}: {check_series_identity(which, 20)}")
