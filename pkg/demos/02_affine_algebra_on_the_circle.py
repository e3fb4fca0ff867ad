"""The circle specialisation reproduces the classical affine algebra.

Building over T^1 with an su(2) base gives the textbook centrally extended
loop algebra: [T_{a,m}, T_{b,n}] = i eps_ab^c T_{c,m+n} + 2 k m delta_ab
delta_{m+n,0}, with the grading operator D acting as the mode number.
"""

from fractions import Fraction

from gkmalg import build_algebra

alg = build_algebra("su2", "t1", cutoff=4, charges=[Fraction(1)])
print(f"generators within cutoff 4: {len(alg.generators())}  (3*9 T + D + k)")

print()
print("=== sample brackets ===")


def show(p, q):
    result = alg.bracket_generators(p, q)
    pieces = [f"({c}) {g}" for g, c in sorted(result.coeffs.items(), key=lambda kv: repr(kv[0]))]
    print(f"[{p}, {q}] = " + (" + ".join(pieces) if pieces else "0"))


show(("T", 1, (2,)), ("T", 2, (3,)))   # i T_{3,5}
show(("T", 1, (2,)), ("T", 1, (-2,)))  # pure central term 2*2 k_1
show(("T", 2, (1,)), ("T", 2, (1,)))   # vanishes: same generator
show(("D", 1), ("T", 1, (3,)))         # grading: 3 T_{1,3}
show(("k", 1), ("T", 1, (3,)))         # central

print()
print("=== the invariant form ===")
x = alg.generator(("T", 1, (2,)))
y = alg.generator(("T", 1, (-2,)))
print(f"<T_(1,2), T_(1,-2)> = {alg.killing(x, y)}   (g_11 = 2, eta pairs m with -m)")
print(f"<D, k> = {alg.killing(alg.generator(('D', 1)), alg.generator(('k', 1)))}")
print(f"<D, T> = {alg.killing(alg.generator(('D', 1)), x)}")

print()
print("=== root spaces: one generator per mode number ===")
plus = (Fraction(1),)
for n in range(-3, 4):
    dim = len(alg.root_space(plus, (Fraction(n),)))
    print(f"dim g_(alpha, n={n:+d}) = {dim}")
