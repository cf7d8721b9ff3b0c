"""
Octonion arithmetic
===================

Products, conjugates, norms, and where associativity breaks.
"""
import numpy as np

from hyperzero import Octonion, associator, inverse
from hyperzero.octonion import omul, onorm_sq

i, j, k = (Octonion.basis(n) for n in "ijk")

# the basis is 1, i, j, ij, k, ik, jk, ijk
print("i*j =", i * j)
print("j*i =", j * i)

# three generators that do not sit in a common quaternion algebra
print("(ij)k =", (i * j) * k)
print("i(jk) =", i * (j * k))
print("associator [i, j, k] =", associator(i, j, k))

# any two elements still associate (alternativity)
x = Octonion([0.3, -1.2, 0.5, 0.0, 2.0, 0.1, -0.7, 0.4])
y = Octonion([1.0, 0.0, -0.5, 0.8, 0.0, 0.3, 0.2, -1.1])
print("|(xx)y - x(xy)| =", ((x * x) * y - x * (x * y)).norm())

# the norm is multiplicative; check it on a batch of random samples
rng = np.random.default_rng(0)
a, b = rng.uniform(-1, 1, (2, 10_000, 8))
ratio = np.sqrt(onorm_sq(omul(a, b)) / (onorm_sq(a) * onorm_sq(b)))
print("norm ratio range over 10^4 pairs:", ratio.min(), ratio.max())

# x^-1 = conj(x) / |x|^2
print("x * x^-1 =", x * inverse(x))
