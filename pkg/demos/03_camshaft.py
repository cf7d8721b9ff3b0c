"""
Zeros move under products
=========================

A zero of f stays on its sphere in f*g but usually shifts along it.
"""
import numpy as np

from hyperzero import OctPoly, Octonion, linear, parse_poly, predict, remainder_at, star_mul, zero_set
from hyperzero.camshaft import verify_products
from hyperzero.generators import random_poly
from hyperzero.textio import format_octonion, format_poly

i, j, k, ij = (Octonion.basis(n) for n in ("i", "j", "k", "ij"))

# even a constant factor moves the zero
f = parse_poly("w*i - j")
g = OctPoly.constant(k)
fg = star_mul(f, g)
print("f =", format_poly(f), " zero", format_octonion(zero_set(f)[0].point))
print("f*k =", format_poly(fg), " zero", format_octonion(zero_set(fg)[0].point))

# the prediction comes from the two remainders alone
(rec,) = zero_set(f)
pred = predict(rec.cls, rec, None, remainder_at(f, rec.cls), remainder_at(g, rec.cls))
print(pred.case_tag, "predicts", format_octonion(pred.predicted.point))

# two isolated zeros on one sphere can merge into the whole sphere
alpha = 0.5 + 0.8 * i
a = 1.5 * j  # a anticommutes with i, so a alpha a^-1 = conj(alpha)
f = OctPoly([-(alpha * a), a])
(rec,) = zero_set(star_mul(f, linear(alpha)))
print("f*(w - alpha):", rec.kind, "multiplicity", rec.multiplicity)

# random differential check of the predictions
rep = verify_products(100, 3, seed=1)
print(f"{rep.passes}/{rep.trials} random products agree; cases {dict(sorted(rep.case_counts.items()))}")
print("worst N(f*g) - N(f)N(g) residual", rep.worst_residual)

# points of the product's zero sphere for a random sample
rng = np.random.default_rng(3)
print("zeros of a random cubic pair product:")
for r in zero_set(star_mul(random_poly(rng, 2), random_poly(rng, 1))):
    print(" ", r.kind, f"t={r.cls.t:+.4f} n={r.cls.n:.4f}", r.multiplicity)
