"""
Counting zeros
==============

Real, isolated and spherical zeros always account for the whole degree.
"""
from collections import Counter

import numpy as np

from hyperzero import factorize, verify_fta
from hyperzero.generators import constructed_poly, random_poly
from hyperzero.textio import format_octonion, parse_poly

f = parse_poly("(w^2 + 1)*(w - 2)*(w - i)")
s = verify_fta(f)
print(f"degree {s.degree}: real {s.r}, isolated {s.i}, spherical {s.s}, total multiplicity {s.total_multiplicity}")

# every polynomial splits into linear factors
fac = factorize(parse_poly("w^2 + w*i + j"))
print("roots of the factors:", [format_octonion(a) for a in fac.roots])
print("reconstruction error:", (fac.expand() - parse_poly("w^2 + w*i + j")).scale())

rng = np.random.default_rng(7)
kinds = Counter()
for n in range(200):
    degree = int(rng.integers(1, 9))
    g = random_poly(rng, degree) if n % 2 else constructed_poly(rng, degree)
    s = verify_fta(g)
    kinds.update({"real": s.r, "isolated": s.i, "spherical": s.s})
print("200 polynomials, zero kinds seen:", dict(kinds))
