"""
Zeros of w^2 + wi + j
=====================

From the normal polynomial to the two isolated zeros.
"""
from hyperzero import ConjugacyClass, normal, parse_poly, remainder_at, verify_fta, zero_set
from hyperzero.roots import class_spectrum
from hyperzero.textio import format_octonion, format_poly, format_real_poly

f = parse_poly("w^2 + w*i + j")
print("f =", format_poly(f))

# N(f) = f * conj(f) has real coefficients; its roots pick out the classes
N = normal(f)
print("N(f) =", format_real_poly(N))
for c, m in class_spectrum(N):
    print(f"  class t={c.t:+.3f} n={c.n:.3f}, multiplicity {m}")

# on each class, f reduces to a linear remainder w a + b
for c in (ConjugacyClass(1, 1), ConjugacyClass(-1, 1)):
    rem = remainder_at(f, c)
    print(f"remainder on (t={c.t:g}, n={c.n:g}):", format_poly(rem.as_poly()))

# a non-zero slope a means one isolated zero, at -b a^-1
for rec in zero_set(f):
    print(rec.kind, format_octonion(rec.point), "multiplicity", rec.multiplicity)
    print("  |f(point)| =", f(rec.point).norm())

print(verify_fta(f).to_json())
