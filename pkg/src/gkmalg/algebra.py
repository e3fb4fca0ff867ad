"""Assembly of the centrally extended current algebra over a compact manifold.

Generators:

* ``("T", a, I)``  - base generator a carried by mode I,
* ``("D", j)``     - the j-th commuting Hermitean grading operator,
* ``("k", j)``     - the central element paired with D_j.

Nonzero generator brackets::

    [T_aI, T_bJ] = i f_ab^c c_IJ^K T_cK  +  g_ab eta_IJ sum_j I(j) k_j
    [D_j,  T_aI] = I(j) T_aI

with I(j) the eigenvalue of D_j on mode I.  The factor i is carried
explicitly in the complex coefficients; f stays real.  Central elements are
kept as formal generators so the cocycle identity is checkable on its own;
evaluating them against the fixed rational charges is a separate fold.

The invariant bilinear form pairs <T_aI, T_bJ> = g_ab eta_IJ and
<D_i, k_j> = delta_ij, all other pairings zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .liealg import (
    CartanWeylData,
    FiniteAlgebra,
    RootVec,
    Vector,
    cartan_weyl,
    make_algebra,
)
from .modes import Eigen, Geometry, ModeLabel, ModeSystem, make_mode_system, parse_manifold
from .scalars import CSURD_ZERO, ComplexSurd

GenId = tuple  # ("T", a, mode) | ("D", j) | ("k", j)


class GKMElement:
    """Sparse element: generator id -> complex surd coefficient."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "GKMAlgebra", coeffs: dict[GenId, ComplexSurd] | None = None):
        self.algebra = algebra
        self.coeffs = {g: c for g, c in (coeffs or {}).items() if not c.is_zero}

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "GKMElement") -> "GKMElement":
        self._check_peer(other)
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            acc = out.get(g)
            total = c if acc is None else acc + c
            if total.is_zero:
                out.pop(g, None)
            else:
                out[g] = total
        return GKMElement(self.algebra, out)

    def __neg__(self) -> "GKMElement":
        return GKMElement(self.algebra, {g: -c for g, c in self.coeffs.items()})

    def __sub__(self, other: "GKMElement") -> "GKMElement":
        return self + (-other)

    def scale(self, coeff) -> "GKMElement":
        return GKMElement(self.algebra, {g: c * coeff for g, c in self.coeffs.items()})

    def coefficient(self, gen: GenId) -> ComplexSurd:
        return self.coeffs.get(gen, CSURD_ZERO)

    def t_part(self) -> dict[GenId, ComplexSurd]:
        return {g: c for g, c in self.coeffs.items() if g[0] == "T"}

    def central_part(self) -> dict[GenId, ComplexSurd]:
        return {g: c for g, c in self.coeffs.items() if g[0] == "k"}

    def fold_charges(self) -> ComplexSurd:
        """Scalar obtained by replacing each central generator by its charge."""
        charges = self.algebra.charges
        total = CSURD_ZERO
        for g, c in self.coeffs.items():
            if g[0] == "k":
                total = total + c * charges[g[1] - 1]
        return total

    def __eq__(self, other):
        return isinstance(other, GKMElement) and self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "GKMElement(0)"
        bits = [f"({c}) {g}" for g, c in sorted(self.coeffs.items(), key=lambda kv: repr(kv[0]))]
        return "GKMElement(" + " + ".join(bits) + ")"

    def _check_peer(self, other: "GKMElement") -> None:
        if other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")


@dataclass
class GKMAlgebra:
    """A base algebra tensored with a mode system, centrally extended."""

    base: FiniteAlgebra
    modes: ModeSystem
    charges: tuple[Fraction, ...]
    cw: CartanWeylData | None = None
    # <D_i, k_j> pairing; the identity matrix is forced by invariance of the
    # form, kept as data so fault-injection tests can demonstrate why.
    dk_pairing: tuple[tuple[Fraction, ...], ...] = field(default=())
    _pair_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if len(self.charges) != self.modes.r:
            raise ValueError(
                f"expected {self.modes.r} central charges, got {len(self.charges)}"
            )
        if not self.dk_pairing:
            r = self.modes.r
            self.dk_pairing = tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(r)) for i in range(r)
            )

    # -- structure ----------------------------------------------------------

    @property
    def r(self) -> int:
        return self.modes.r

    def generators(self) -> list[GenId]:
        gens: list[GenId] = [
            ("T", a, I)
            for a in range(1, self.base.dim + 1)
            for I in self.modes.modes
        ]
        gens.extend(("D", j) for j in range(1, self.r + 1))
        gens.extend(("k", j) for j in range(1, self.r + 1))
        return gens

    def generator(self, gen: GenId) -> GKMElement:
        return GKMElement(self, {gen: ComplexSurd.rational(1)})

    def element(self, coeffs: Mapping[GenId, ComplexSurd]) -> GKMElement:
        return GKMElement(self, dict(coeffs))

    def zero(self) -> GKMElement:
        return GKMElement(self, {})

    # -- bracket ------------------------------------------------------------

    def _bracket_gens(self, p: GenId, q: GenId) -> dict[GenId, ComplexSurd]:
        kp, kq = p[0], q[0]
        if kp == "k" or kq == "k":
            return {}
        if kp == "D" and kq == "D":
            return {}
        if kp == "D":
            lam = self.modes.eigen(q[2])[p[1] - 1]
            return {q: ComplexSurd.rational(lam)} if lam else {}
        if kq == "D":
            lam = self.modes.eigen(p[2])[q[1] - 1]
            return {p: ComplexSurd.rational(-lam)} if lam else {}

        _, a, I = p
        _, b, J = q
        out: dict[GenId, ComplexSurd] = {}
        frow = self.base.structure(a, b)
        if frow:
            prods = self.modes.product(I, J)
            for c, fabc in frow.items():
                for K, cval in prods.items():
                    coeff = ComplexSurd.imaginary(fabc * cval)
                    gen = ("T", c, K)
                    acc = out.get(gen)
                    total = coeff if acc is None else acc + coeff
                    if total.is_zero:
                        out.pop(gen, None)
                    else:
                        out[gen] = total
        gab = self.base.killing_entry(a, b)
        if not gab.is_zero:
            partner, phase = self.modes.eta(I)
            if partner == J:
                weight = gab * phase
                for j, lam in enumerate(self.modes.eigen(I), start=1):
                    if lam:
                        gen = ("k", j)
                        contrib = ComplexSurd.real(weight * lam)
                        acc = out.get(gen)
                        total = contrib if acc is None else acc + contrib
                        if total.is_zero:
                            out.pop(gen, None)
                        else:
                            out[gen] = total
        return out

    def bracket_generators(self, p: GenId, q: GenId) -> GKMElement:
        """Memoised generator bracket (the verification hot path)."""
        cached = self._pair_cache.get((p, q))
        if cached is None:
            cached = self._bracket_gens(p, q)
            self._pair_cache[(p, q)] = cached
        return GKMElement(self, dict(cached))

    def bracket(self, x: GKMElement, y: GKMElement) -> GKMElement:
        if x.algebra is not self or y.algebra is not self:
            raise ValueError("elements belong to different algebras")
        total: dict[GenId, ComplexSurd] = {}
        for p, cp in x.coeffs.items():
            for q, cq in y.coeffs.items():
                pair = self._pair_cache.get((p, q))
                if pair is None:
                    pair = self._bracket_gens(p, q)
                    self._pair_cache[(p, q)] = pair
                if not pair:
                    continue
                weight = cp * cq
                for gen, coeff in pair.items():
                    acc = total.get(gen)
                    term = weight * coeff
                    out = term if acc is None else acc + term
                    if out.is_zero:
                        total.pop(gen, None)
                    else:
                        total[gen] = out
        return GKMElement(self, total)

    # -- invariant form -----------------------------------------------------

    def killing_generators(self, p: GenId, q: GenId) -> ComplexSurd:
        kp, kq = p[0], q[0]
        if kp == "T" and kq == "T":
            _, a, I = p
            _, b, J = q
            partner, phase = self.modes.eta(I)
            if partner != J:
                return CSURD_ZERO
            return ComplexSurd.real(self.base.killing_entry(a, b) * phase)
        if kp == "D" and kq == "k":
            return ComplexSurd.rational(self.dk_pairing[p[1] - 1][q[1] - 1])
        if kp == "k" and kq == "D":
            return ComplexSurd.rational(self.dk_pairing[q[1] - 1][p[1] - 1])
        return CSURD_ZERO

    def killing(self, x: GKMElement, y: GKMElement) -> ComplexSurd:
        total = CSURD_ZERO
        for p, cp in x.coeffs.items():
            for q, cq in y.coeffs.items():
                pairing = self.killing_generators(p, q)
                if not pairing.is_zero:
                    total = total + cp * cq * pairing
        return total

    # -- root spaces ----------------------------------------------------------

    def _require_cw(self) -> CartanWeylData:
        if self.cw is None:
            raise ValueError("root-space queries need a semisimple base algebra")
        return self.cw

    def vector_element(self, vec: Vector, I: ModeLabel) -> GKMElement:
        coeffs = {
            ("T", a, I): comp
            for a, comp in enumerate(vec, start=1)
            if not comp.is_zero
        }
        return GKMElement(self, coeffs)

    def root_space(self, alpha: RootVec, n: Eigen) -> list[GKMElement]:
        """Basis of the (alpha, n) root space within the cutoff.

        alpha is a root for the rotated generators E_(alpha I), or the zero
        vector for the Cartan directions H^i_I; n picks the modes with that
        eigenvalue vector.
        """
        cw = self._require_cw()
        n = tuple(Fraction(v) for v in n)
        if len(n) != self.r:
            raise ValueError(f"eigenvalue vector must have length {self.r}")
        alpha = tuple(Fraction(v) for v in alpha)
        selected = [I for I in self.modes.modes if self.modes.eigen(I) == n]
        if all(v == 0 for v in alpha):
            return [self.vector_element(h, I) for I in selected for h in cw.cartan]
        vec = cw.root_vectors.get(alpha)
        if vec is None:
            raise ValueError(f"{alpha} is not a root of {self.base.name}")
        return [self.vector_element(vec, I) for I in selected]

    def root_space_labels(self) -> list[tuple[RootVec, Eigen]]:
        """All (alpha | 0, n) labels with nonempty spaces within the cutoff."""
        cw = self._require_cw()
        eigenvalues = sorted({self.modes.eigen(I) for I in self.modes.modes})
        zero = tuple(Fraction(0) for _ in cw.roots[0])
        labels: list[tuple[RootVec, Eigen]] = []
        for alpha in (*cw.roots, zero):
            for n in eigenvalues:
                labels.append((alpha, n))
        return labels


def build_algebra(
    base: str | FiniteAlgebra,
    manifold: str | Geometry,
    cutoff: int,
    charges: Iterable,
) -> GKMAlgebra:
    """Construct and validate the full algebra for the given parameters."""
    base_alg = make_algebra(base) if isinstance(base, str) else base
    geometry = parse_manifold(manifold) if isinstance(manifold, str) else manifold
    modes = make_mode_system(geometry, cutoff)
    charge_vec = tuple(Fraction(c) for c in charges)
    cw = None if base_alg.is_abelian else cartan_weyl(base_alg)
    return GKMAlgebra(base=base_alg, modes=modes, charges=charge_vec, cw=cw)
