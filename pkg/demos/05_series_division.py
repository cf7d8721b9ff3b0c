"""
Dividing a power series by w - alpha
====================================

The geometric series at alpha = 1/2, then a random series.
"""
import numpy as np

from hyperzero import Octonion, TruncatedSeries, reconstruction_error, series_divide_linear, tail_bound_check

f = TruncatedSeries.geometric(64)
g, r = series_divide_linear(f, 0.5)
print("r =", r)
print("first quotient coefficients:", g.coeffs[:6, 0])
print("max |b_n - 2| =", np.abs(g.coeffs[:, 0] - 2).max())
print("reconstruction error:", reconstruction_error(f, 0.5, g, r, 63))
for b in tail_bound_check(f, 0.5, 0.5, rho=[0.6, 0.9]):
    print(f"rho={b.rho}: max ratio {b.max_ratio:.3g}, violations {b.violations}")

# a random series with radius 2 and an octonionic alpha inside it
rng = np.random.default_rng(5)
coeffs = rng.uniform(-1, 1, (41, 8)) * (0.5 ** np.arange(41))[:, None]
f = TruncatedSeries(coeffs, radius=2.0)
alpha = Octonion([0.4, 0.3, -0.2, 0.1, 0.5, 0.0, -0.3, 0.2])
g, r = series_divide_linear(f, alpha)
print("|r - f(alpha)| =", (r - f.partial_sum(alpha)).norm())
print("reconstruction error:", reconstruction_error(f, alpha, g, r, 39))
