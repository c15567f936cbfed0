"""Bessel products as the r=2, s=0 corner of the confluent identity.

For non-integer nu and integer m,

    (-1)^m J_{-nu}(x) J_{nu+m}(x) - J_nu(x) J_{-nu-m}(x)

times x^|m| is a polynomial in t = x^2 of degree < |m|/2 (a generalized
Wronskian).  The exact layer certifies the underlying formal identity in
rational arithmetic; the numeric layer samples the Bessel form in floating
point and checks the polynomial structure through divided differences.
"""

from fractions import Fraction as Q

from hypident import bessel_demo, bessel_j

for nu, m in [(Q(1, 3), 1), (Q(1, 4), 3), (Q(2, 5), 0)]:
    report = bessel_demo(nu, m)
    print(f"nu = {nu}, m = {m}:")
    print(f"  polynomial degree bound in t = x^2: {report.degree_bound}")
    print(f"  worst relative divided-difference residual: {report.max_residual:.3e}")
    print(f"  exact layer support: [{report.exact.beta.support_low}, "
          f"{report.exact.beta.support_high}], table {report.exact.beta.beta_map() or '{}'}")
    print(f"  passed: {report.passed}")
    print()

x = 1.7
nu = 1.0 / 3.0
print(f"sanity: J_nu({x}) for nu = 1/3 from the truncated series: {bessel_j(nu, x):.12f}")
combo = bessel_j(-nu, x) * bessel_j(nu + 1, x) * (-1) - bessel_j(nu, x) * bessel_j(-nu - 1, x)
print(f"x * [(-1) J_-nu J_nu+1 - J_nu J_-nu-1] at x = {x}: {x * combo:.12f}")
print("(the same constant at every x is what the m = 1 demonstration certifies)")
