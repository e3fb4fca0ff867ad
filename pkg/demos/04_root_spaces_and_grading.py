"""Root spaces over the 2-sphere and the grading of the bracket.

Over a manifold with r commuting grading operators, each root alpha of the
base algebra fans out into root spaces labelled (alpha, n) with n the
vector of eigenvalues.  On the 2-sphere (r = 1, eigenvalue m) the space
g_(alpha, m) collects every l >= |m| within the cutoff, so unlike the
circle case the root spaces grow with the cutoff.
"""

from fractions import Fraction

from gkmalg import build_algebra, grading_check

alg = build_algebra("su2", "s2", cutoff=3, charges=[1])
plus, minus = (Fraction(1),), (Fraction(-1),)
zero = (Fraction(0),)

print("root-space dimensions at cutoff 3 (expect cutoff+1-|m| for alpha != 0):")
print("   m | dim g_(+a,m) | dim g_(0,m)")
for m in range(-3, 4):
    d_plus = len(alg.root_space(plus, (Fraction(m),)))
    d_zero = len(alg.root_space(zero, (Fraction(m),)))
    print(f"  {m:+d} | {d_plus:^12} | {d_zero:^11}")

print()
print("one basis element of g_(+a, m=1):")
elem = alg.root_space(plus, (Fraction(1),))[0]
for gen, coeff in sorted(elem.coeffs.items(), key=lambda kv: repr(kv[0])):
    print(f"  ({coeff}) {gen}")

print()
print("bracket of opposite root-space elements lands in the Cartan directions")
print("and carries the central term exactly when alpha+beta = 0 and m+n = 0:")
e_plus = alg.root_space(plus, (Fraction(1),))[0]
e_minus = alg.root_space(minus, (Fraction(-1),))[0]
result = alg.bracket(e_plus, e_minus)
for gen, coeff in sorted(result.coeffs.items(), key=lambda kv: repr(kv[0])):
    print(f"  ({coeff}) {gen}")

print()
check = grading_check(alg)
print(f"exhaustive grading check over {check.details['bracket_pairs']} bracket pairs: "
      f"{'PASS' if check.passed else 'FAIL'} in {check.wall_time:.2f}s")
assert check.passed
