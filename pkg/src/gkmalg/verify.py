"""Verification suites: every asserted algebraic property, exactly or vs oracle.

Each check returns a :class:`CheckResult`; failures carry a witness with
the offending generator ids / mode labels and the nonzero value.  Checks
read the materialised tables of the algebra under test (not the generating
rules), so a tampered dump is diagnosed here rather than at parse time.

Triple-based checks run exhaustively up to a budget and switch to seeded
random sampling above it; the report records which regime ran, and a fixed
seed reproduces a sampled run exactly.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from time import perf_counter

from .algebra import GKMAlgebra, GKMElement, GenId, build_algebra
from .liealg import coefficients_in_span, jacobi_check_finite, killing_form
from .modes import ModeSystem, TorusGeometry
from .quadrature import (
    make_grid,
    numeric_cocycle_pairing,
    numeric_conjugation_pairing,
    numeric_eigencheck,
    numeric_product_coefficient,
)
from .report import CheckResult, VerificationReport
from .scalars import CSURD_ZERO, SURD_ZERO

DEFAULT_BUDGET = 50_000


def _gen_str(gen: GenId) -> str:
    return repr(gen)


def _regime(total: int, budget: int, seed: int | None):
    if total <= budget:
        return "exhaustive", None
    return "sampled", (seed if seed is not None else 0)


def _sample_combinations(items, k: int, count: int, seed: int):
    rng = random.Random(seed)
    n = len(items)
    total = 1
    for i in range(k):
        total = total * (n - i) // (i + 1)
    count = min(count, total)
    seen = set()
    out = []
    while len(out) < count:
        pick = tuple(sorted(rng.sample(range(n), k)))
        if pick in seen:
            continue
        seen.add(pick)
        out.append(tuple(items[i] for i in pick))
    return out


# -- mode-system axioms ---------------------------------------------------------


def commutativity_check(ms: ModeSystem) -> CheckResult:
    start = perf_counter()
    for I, J in itertools.combinations(ms.modes, 2):
        if ms.products[(I, J)] != ms.products[(J, I)]:
            return CheckResult(
                name="product_commutativity",
                passed=False,
                witness={"modes": [list(I), list(J)]},
                wall_time=perf_counter() - start,
            )
    return CheckResult(
        name="product_commutativity",
        passed=True,
        wall_time=perf_counter() - start,
        details={"pairs": len(ms.modes) * (len(ms.modes) - 1) // 2},
    )


def _expand(ms: ModeSystem, table: dict, other) -> dict:
    """sum_L c_L * (rho_L rho_other) as a merged coefficient map."""
    out: dict = {}
    for L, cl in table.items():
        for M, cm in ms.product(L, other).items():
            acc = out.get(M, SURD_ZERO) + cl * cm
            if acc.is_zero:
                out.pop(M, None)
            else:
                out[M] = acc
    return out


def associativity_check(
    ms: ModeSystem, budget: int = DEFAULT_BUDGET, seed: int | None = None
) -> CheckResult:
    """(rho_I rho_J) rho_K must equal rho_I (rho_J rho_K), exactly.

    Products of in-cutoff modes extend beyond the cutoff; the intermediate
    sums stay finite on every supported manifold, so the comparison is exact.
    """
    start = perf_counter()
    triples = list(itertools.combinations_with_replacement(ms.modes, 3))
    regime, used_seed = _regime(len(triples), budget, seed)
    if regime == "sampled":
        rng = random.Random(used_seed)
        triples = rng.sample(triples, budget)
    checked = 0
    for I, J, K in triples:
        left = _expand(ms, ms.product(I, J), K)
        mid = _expand(ms, ms.product(J, K), I)
        if left != mid:
            return CheckResult(
                name="product_associativity",
                passed=False,
                regime=regime,
                seed=used_seed,
                witness={"modes": [list(I), list(J), list(K)]},
                wall_time=perf_counter() - start,
                details={"triples": checked},
            )
        right = _expand(ms, ms.product(I, K), J)
        if left != right:
            return CheckResult(
                name="product_associativity",
                passed=False,
                regime=regime,
                seed=used_seed,
                witness={"modes": [list(I), list(K), list(J)]},
                wall_time=perf_counter() - start,
                details={"triples": checked},
            )
        checked += 1
    return CheckResult(
        name="product_associativity",
        passed=True,
        regime=regime,
        seed=used_seed,
        wall_time=perf_counter() - start,
        details={"triples": checked},
    )


def eigen_additivity_check(ms: ModeSystem) -> CheckResult:
    start = perf_counter()
    entries = 0
    for (I, J), table in ms.products.items():
        target = tuple(a + b for a, b in zip(ms.eigen(I), ms.eigen(J)))
        for K, c in table.items():
            entries += 1
            if c.is_zero:
                continue
            if ms.eigen(K) != target:
                return CheckResult(
                    name="eigen_additivity",
                    passed=False,
                    witness={
                        "modes": [list(I), list(J), list(K)],
                        "eigen_K": [str(v) for v in ms.eigen(K)],
                        "expected": [str(v) for v in target],
                    },
                    wall_time=perf_counter() - start,
                )
    return CheckResult(
        name="eigen_additivity",
        passed=True,
        wall_time=perf_counter() - start,
        details={"entries": entries},
    )


def unit_check(ms: ModeSystem) -> CheckResult:
    start = perf_counter()
    unit = ms.unit
    one = SURD_ZERO + 1
    for I in ms.modes:
        expected = {I: one}
        if ms.products[(unit, I)] != expected or ms.products[(I, unit)] != expected:
            return CheckResult(
                name="unit_mode",
                passed=False,
                witness={"mode": list(I)},
                wall_time=perf_counter() - start,
            )
    return CheckResult(
        name="unit_mode",
        passed=True,
        wall_time=perf_counter() - start,
        details={"modes": len(ms.modes)},
    )


def eta_involution_check(ms: ModeSystem) -> CheckResult:
    start = perf_counter()
    for I in ms.modes:
        J, phase1 = ms.eta(I)
        back, phase2 = ms.eta(J)
        if back != I or phase1 * phase2 != 1:
            return CheckResult(
                name="eta_involution",
                passed=False,
                witness={"mode": list(I), "partner": list(J), "phases": [phase1, phase2]},
                wall_time=perf_counter() - start,
            )
    return CheckResult(
        name="eta_involution",
        passed=True,
        wall_time=perf_counter() - start,
        details={"modes": len(ms.modes)},
    )


def mode_axiom_checks(
    ms: ModeSystem,
    budget: int = DEFAULT_BUDGET,
    seed: int | None = None,
    include_hermiticity: bool = True,
) -> list[CheckResult]:
    out = [
        commutativity_check(ms),
        associativity_check(ms, budget=budget, seed=seed),
        eigen_additivity_check(ms),
        unit_check(ms),
        eta_involution_check(ms),
    ]
    if include_hermiticity:
        out.extend(ms.hermiticity_check(j) for j in range(1, ms.r + 1))
    return out


# -- algebra-level checks ---------------------------------------------------------


def jacobi_check_gkm(
    alg: GKMAlgebra,
    sample: str | int = "all",
    seed: int | None = None,
) -> CheckResult:
    """[[x,y],z] + [[y,z],x] + [[z,x],y] = 0 over generator triples.

    Distinct unordered triples span the full identity by trilinearity and
    antisymmetry.  Central terms ride along, so this simultaneously verifies
    the 2-cocycle identity.
    """
    start = perf_counter()
    gens = alg.generators()
    if sample == "all":
        regime, used_seed = "exhaustive", None
        triples = itertools.combinations(gens, 3)
        total = None
    else:
        regime, used_seed = "sampled", (seed if seed is not None else 0)
        triples = _sample_combinations(gens, 3, int(sample), used_seed)
        total = int(sample)
    checked = 0
    for x, y, z in triples:
        ex, ey, ez = alg.generator(x), alg.generator(y), alg.generator(z)
        acc = alg.bracket(alg.bracket(ex, ey), ez)
        acc = acc + alg.bracket(alg.bracket(ey, ez), ex)
        acc = acc + alg.bracket(alg.bracket(ez, ex), ey)
        checked += 1
        if not acc.is_zero:
            gen, coeff = next(iter(acc.coeffs.items()))
            return CheckResult(
                name="jacobi_gkm",
                passed=False,
                regime=regime,
                seed=used_seed,
                witness={
                    "generators": [_gen_str(x), _gen_str(y), _gen_str(z)],
                    "component": _gen_str(gen),
                    "value": str(coeff),
                },
                wall_time=perf_counter() - start,
                details={"triples": checked},
            )
    return CheckResult(
        name="jacobi_gkm",
        passed=True,
        regime=regime,
        seed=used_seed,
        wall_time=perf_counter() - start,
        details={"triples": checked if total is None else total},
    )


def antisymmetry_check(alg: GKMAlgebra) -> CheckResult:
    start = perf_counter()
    gens = alg.generators()
    for x, y in itertools.combinations_with_replacement(gens, 2):
        forward = alg.bracket_generators(x, y)
        backward = alg.bracket_generators(y, x)
        if not (forward + backward).is_zero:
            return CheckResult(
                name="bracket_antisymmetry",
                passed=False,
                witness={"generators": [_gen_str(x), _gen_str(y)]},
                wall_time=perf_counter() - start,
            )
    return CheckResult(
        name="bracket_antisymmetry",
        passed=True,
        wall_time=perf_counter() - start,
        details={"pairs": len(gens) * (len(gens) + 1) // 2},
    )


def cocycle_antisymmetry_check(alg: GKMAlgebra) -> CheckResult:
    """omega_j(x, y) + omega_j(y, x) = 0 for all mode pairs and all j."""
    start = perf_counter()
    ms = alg.modes
    checked = 0
    for I in ms.modes:
        J, phase_forward = ms.eta(I)
        back, phase_back = ms.eta(J)
        for j in range(1, ms.r + 1):
            forward = ms.eigen(I)[j - 1] * phase_forward
            backward = ms.eigen(J)[j - 1] * phase_back if back == I else None
            checked += 1
            if backward is None or forward + backward != 0:
                return CheckResult(
                    name="cocycle_antisymmetry",
                    passed=False,
                    witness={
                        "operator": j,
                        "modes": [list(I), list(J)],
                        "omega_IJ": str(forward),
                        "omega_JI": "undefined" if backward is None else str(backward),
                    },
                    wall_time=perf_counter() - start,
                )
    return CheckResult(
        name="cocycle_antisymmetry",
        passed=True,
        wall_time=perf_counter() - start,
        details={"pairs": checked},
    )


def invariance_check(
    alg: GKMAlgebra,
    sample: str | int = "all",
    seed: int | None = None,
) -> CheckResult:
    """<[x,y],z> + <y,[x,z]> = 0 over generator triples (x ordered, y<=z)."""
    start = perf_counter()
    gens = alg.generators()
    pairs = list(itertools.combinations_with_replacement(range(len(gens)), 2))
    if sample == "all":
        regime, used_seed = "exhaustive", None
        work = ((x, gens[i], gens[j]) for x in gens for i, j in pairs)
    else:
        regime, used_seed = "sampled", (seed if seed is not None else 0)
        rng = random.Random(used_seed)
        work = (
            (rng.choice(gens), *rng.sample(gens, 2))
            for _ in range(int(sample))
        )
    checked = 0
    for x, y, z in work:
        ex, ey, ez = alg.generator(x), alg.generator(y), alg.generator(z)
        total = alg.killing(alg.bracket(ex, ey), ez) + alg.killing(ey, alg.bracket(ex, ez))
        checked += 1
        if not total.is_zero:
            return CheckResult(
                name="invariance",
                passed=False,
                regime=regime,
                seed=used_seed,
                witness={
                    "generators": [_gen_str(x), _gen_str(y), _gen_str(z)],
                    "value": str(total),
                },
                wall_time=perf_counter() - start,
                details={"triples": checked},
            )
    return CheckResult(
        name="invariance",
        passed=True,
        regime=regime,
        seed=used_seed,
        wall_time=perf_counter() - start,
        details={"triples": checked},
    )


def killing_consistency_check(alg: GKMAlgebra) -> CheckResult:
    """Stored base metric must equal the trace form of the stored f, exactly.

    A uniformly rescaled f still satisfies Jacobi and even leaves a scalar
    metric invariant, so this f-vs-g consistency check is what pins the
    normalisation a dump claims.
    """
    start = perf_counter()
    base = alg.base
    recomputed = killing_form(base.f, base.dim)
    for a in range(base.dim):
        for b in range(base.dim):
            if recomputed[a][b] != base.g[a][b]:
                return CheckResult(
                    name="killing_consistency",
                    passed=False,
                    witness={
                        "indices": [a + 1, b + 1],
                        "stored": str(base.g[a][b]),
                        "recomputed": str(recomputed[a][b]),
                    },
                    wall_time=perf_counter() - start,
                )
    return CheckResult(
        name="killing_consistency",
        passed=True,
        wall_time=perf_counter() - start,
        details={"dim": base.dim},
    )


def killing_table_check(alg: GKMAlgebra) -> CheckResult:
    """The generator pairing table itself: <T,T> = g eta, <D,k> = delta, else 0."""
    start = perf_counter()
    ms = alg.modes
    checked = 0
    for a in range(1, alg.base.dim + 1):
        for b in range(1, alg.base.dim + 1):
            gab = alg.base.killing_entry(a, b)
            for I in ms.modes:
                partner, phase = ms.eta(I)
                for J in ms.modes:
                    expected = gab * phase if J == partner else SURD_ZERO
                    got = alg.killing_generators(("T", a, I), ("T", b, J))
                    checked += 1
                    if not got.im.is_zero or got.re != expected:
                        return CheckResult(
                            name="killing_table",
                            passed=False,
                            witness={
                                "pair": [_gen_str(("T", a, I)), _gen_str(("T", b, J))],
                                "value": str(got),
                                "expected": str(expected),
                            },
                            wall_time=perf_counter() - start,
                        )
    r = alg.r
    sample_t = ("T", 1, ms.modes[0])
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            want = Fraction(1 if i == j else 0)
            pairs = [
                (("D", i), ("k", j), want),
                (("k", i), ("D", j), Fraction(1 if i == j else 0)),
                (("D", i), ("D", j), Fraction(0)),
                (("k", i), ("k", j), Fraction(0)),
                (("D", i), sample_t, Fraction(0)),
                (("k", i), sample_t, Fraction(0)),
            ]
            for p, q, expected in pairs:
                got = alg.killing_generators(p, q)
                checked += 1
                if not got.im.is_zero or got.re != expected:
                    return CheckResult(
                        name="killing_table",
                        passed=False,
                        witness={
                            "pair": [_gen_str(p), _gen_str(q)],
                            "value": str(got),
                            "expected": str(expected),
                        },
                        wall_time=perf_counter() - start,
                    )
    return CheckResult(
        name="killing_table",
        passed=True,
        wall_time=perf_counter() - start,
        details={"pairs": checked},
    )


def grading_check(alg: GKMAlgebra) -> CheckResult:
    """[g_(a,m), g_(b,n)] must land in g_(a+b, m+n); central terms only at 0.

    For each bracket of root-space basis elements: every surviving mode
    must carry eigenvalue m+n, the base part must sit inside the expected
    root line (or the Cartan span at a+b = 0, or vanish when a+b is not a
    root), and the central part must vanish unless a+b = 0 and m+n = 0.
    """
    start = perf_counter()
    if alg.cw is None:
        return CheckResult(
            name="grading",
            passed=True,
            regime="skipped",
            wall_time=perf_counter() - start,
            details={"note": "abelian base: no root grading to check"},
        )
    cw = alg.cw
    zero_root = tuple(Fraction(0) for _ in cw.roots[0])
    labels = [lab for lab in alg.root_space_labels() if alg.root_space(*lab)]
    root_set = set(cw.roots)
    checked = 0
    for (alpha, m), (beta, n) in itertools.combinations_with_replacement(labels, 2):
        target_root = tuple(x + y for x, y in zip(alpha, beta))
        target_eigen = tuple(x + y for x, y in zip(m, n))
        for u in alg.root_space(alpha, m):
            for v in alg.root_space(beta, n):
                w = alg.bracket(u, v)
                checked += 1
                witness = _grading_violation(
                    alg, w, target_root, target_eigen, root_set, zero_root
                )
                if witness is not None:
                    witness.update(
                        {
                            "alpha": [str(x) for x in alpha],
                            "m": [str(x) for x in m],
                            "beta": [str(x) for x in beta],
                            "n": [str(x) for x in n],
                        }
                    )
                    return CheckResult(
                        name="grading",
                        passed=False,
                        witness=witness,
                        wall_time=perf_counter() - start,
                        details={"bracket_pairs": checked},
                    )
    return CheckResult(
        name="grading",
        passed=True,
        wall_time=perf_counter() - start,
        details={"bracket_pairs": checked, "labels": len(labels)},
    )


def _grading_violation(alg, w: GKMElement, target_root, target_eigen, root_set, zero_root):
    central_allowed = target_root == zero_root and all(v == 0 for v in target_eigen)
    for gen, coeff in w.central_part().items():
        if not central_allowed and not coeff.is_zero:
            return {"component": _gen_str(gen), "value": str(coeff), "kind": "central"}
    t_by_mode: dict = {}
    for gen, coeff in w.t_part().items():
        _, a, K = gen
        vec = t_by_mode.setdefault(K, [None] * alg.base.dim)
        vec[a - 1] = coeff
    for K, entries in t_by_mode.items():
        vec = tuple(c if c is not None else CSURD_ZERO for c in entries)
        if all(c.is_zero for c in vec):
            continue
        if alg.modes.eigen(K) != target_eigen:
            return {"mode": list(K), "kind": "eigenvalue drift"}
        if target_root in root_set:
            basis = [alg.cw.root_vectors[target_root]]
        elif target_root == zero_root:
            basis = list(alg.cw.cartan)
        else:
            return {"mode": list(K), "kind": "bracket outside the root system"}
        if coefficients_in_span(vec, basis) is None:
            return {"mode": list(K), "kind": "base part outside expected root line"}
    return None


def torus_hierarchy_check(
    n: int,
    cutoff: int,
    base: str = "su2",
    embed_suffix: tuple[int, ...] = (0,),
) -> CheckResult:
    """The m -> (m, 0) copy of the (n-1)-torus algebra inside the n-torus one.

    Checks closure of the embedded span and exact equality of structure
    constants under the label map.  A nonzero suffix is the designed
    negative: eigenvalue additivity then drifts out of the image.
    """
    start = perf_counter()
    if n < 2:
        raise ValueError("hierarchy check needs a torus of dimension >= 2")
    big = build_algebra(base, TorusGeometry(n), cutoff, charges=(Fraction(1),) * n)
    small = build_algebra(
        base, TorusGeometry(n - 1), cutoff, charges=(Fraction(1),) * (n - 1)
    )

    def up(gen: GenId) -> GenId:
        if gen[0] == "T":
            return ("T", gen[1], gen[2] + embed_suffix)
        return gen

    def down_element(elem: GKMElement):
        mapped = {}
        for gen, coeff in elem.coeffs.items():
            if gen[0] == "T":
                mode = gen[2]
                if mode[n - 1 :] != embed_suffix:
                    return None, gen
                mapped[("T", gen[1], mode[: n - 1])] = coeff
            elif gen[1] <= n - 1:
                mapped[gen] = coeff
            elif not coeff.is_zero:
                return None, gen
        return mapped, None

    gens = small.generators()
    checked = 0
    for p, q in itertools.combinations_with_replacement(gens, 2):
        expected = small.bracket_generators(p, q)
        got = big.bracket_generators(up(p), up(q))
        mapped, escape = down_element(got)
        checked += 1
        if mapped is None:
            return CheckResult(
                name=f"torus_hierarchy_{n}to{n - 1}",
                passed=False,
                witness={
                    "generators": [_gen_str(p), _gen_str(q)],
                    "escaping_component": _gen_str(escape),
                },
                wall_time=perf_counter() - start,
                details={"pairs": checked},
            )
        if mapped != expected.coeffs:
            return CheckResult(
                name=f"torus_hierarchy_{n}to{n - 1}",
                passed=False,
                witness={
                    "generators": [_gen_str(p), _gen_str(q)],
                    "kind": "structure constants differ under the embedding",
                },
                wall_time=perf_counter() - start,
                details={"pairs": checked},
            )
    return CheckResult(
        name=f"torus_hierarchy_{n}to{n - 1}",
        passed=True,
        wall_time=perf_counter() - start,
        details={"pairs": checked},
    )


# -- oracle agreement ---------------------------------------------------------


def _oracle_band(ms: ModeSystem) -> int:
    worst = max((ms.geometry.degree(I) for I in ms.modes), default=1)
    return max(1, 2 * worst)


def oracle_agreement_check(
    alg: GKMAlgebra | ModeSystem,
    samples: int = 500,
    seed: int = 0,
    tol: float = 1e-10,
) -> CheckResult:
    """Exact tables vs quadrature: products, eta, eigenvalues, cocycles.

    Enumerates every stored quantity, shuffles with the seed, and compares
    up to ``samples`` of them; if the table is smaller than the budget the
    coverage is total (regime stays "exhaustive").
    """
    start = perf_counter()
    ms = alg.modes if isinstance(alg, GKMAlgebra) else alg
    grid = make_grid(ms.geometry, _oracle_band(ms))
    quantities: list[tuple] = []
    for (I, J), table in ms.products.items():
        for K, c in table.items():
            quantities.append(("product", (I, J, K), float(c)))
    for I in ms.modes:
        J, phase = ms.eta(I)
        quantities.append(("eta", (I, J), float(phase)))
        for j in range(1, ms.r + 1):
            quantities.append(("eigen", (j, I), float(ms.eigen(I)[j - 1])))
            quantities.append(("cocycle", (j, I, J), float(ms.cocycle_pairing(j, I, J))))
    regime, used_seed = _regime(len(quantities), samples, seed)
    rng = random.Random(seed)
    rng.shuffle(quantities)
    if regime == "sampled":
        quantities = quantities[:samples]
    worst = 0.0
    for kind, args, exact in quantities:
        if kind == "product":
            numeric = numeric_product_coefficient(grid, *args)
        elif kind == "eta":
            numeric = numeric_conjugation_pairing(grid, *args)
        elif kind == "eigen":
            numeric = numeric_eigencheck(grid, *args)
        else:
            numeric = numeric_cocycle_pairing(grid, *args)
        delta = abs(numeric - exact)
        worst = max(worst, delta)
        if delta > tol:
            return CheckResult(
                name="oracle_agreement",
                passed=False,
                regime=regime,
                seed=used_seed,
                witness={
                    "quantity": kind,
                    "labels": repr(args),
                    "exact": exact,
                    "numeric": [numeric.real, numeric.imag]
                    if isinstance(numeric, complex)
                    else numeric,
                    "delta": delta,
                },
                wall_time=perf_counter() - start,
                details={"band": grid.band},
            )
    return CheckResult(
        name="oracle_agreement",
        passed=True,
        regime=regime,
        seed=used_seed,
        wall_time=perf_counter() - start,
        details={"samples": len(quantities), "max_delta": worst, "band": grid.band},
    )


# -- suite driver ---------------------------------------------------------------

SUITES = ("all", "jacobi", "cocycle", "grading", "invariance", "oracle")


def run_suites(
    alg: GKMAlgebra,
    suite: str = "all",
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    oracle_samples: int = 500,
) -> VerificationReport:
    """Run the selected verification suite(s) against one algebra."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    report = VerificationReport()
    gens = len(alg.generators())
    triples = gens * (gens - 1) * (gens - 2) // 6

    def jacobi_sample():
        return "all" if triples <= budget else budget

    if suite in ("all", "jacobi"):
        report.add(jacobi_check_finite(alg.base.f, alg.base.dim, alg.base.name))
        report.add(jacobi_check_gkm(alg, sample=jacobi_sample(), seed=seed))
    if suite in ("all", "cocycle"):
        report.add(cocycle_antisymmetry_check(alg))
        report.extend(alg.modes.hermiticity_check(j) for j in range(1, alg.r + 1))
    if suite in ("all", "grading"):
        report.add(grading_check(alg))
    if suite in ("all", "invariance"):
        report.add(killing_consistency_check(alg))
        report.add(killing_table_check(alg))
        x_pairs = gens * gens * (gens + 1) // 2
        sample = "all" if x_pairs <= budget else budget
        report.add(invariance_check(alg, sample=sample, seed=seed))
    if suite == "all":
        report.add(antisymmetry_check(alg))
        # hermiticity already ran under the cocycle block
        report.extend(
            mode_axiom_checks(alg.modes, budget=budget, seed=seed, include_hermiticity=False)
        )
        geo = alg.modes.geometry
        if isinstance(geo, TorusGeometry) and geo.n >= 2:
            report.add(
                torus_hierarchy_check(geo.n, alg.modes.cutoff, base=alg.base.name)
            )
    if suite in ("all", "oracle"):
        report.add(oracle_agreement_check(alg, samples=oracle_samples, seed=seed))
    return report
