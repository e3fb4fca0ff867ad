import itertools
from fractions import Fraction

import numpy as np
import pytest

from gkmalg.liealg import (
    cartan_weyl,
    coefficients_in_span,
    jacobi_check_finite,
    killing_form,
    make_algebra,
    vec_is_zero,
    vec_scale,
    vec_sub,
)
from gkmalg.scalars import CSURD_ZERO, ComplexSurd, SurdScalar

# defining 3x3 matrices of the standard traceless Hermitean basis, used to
# re-derive the su(3) structure constants independently
_L = np.zeros((9, 3, 3), dtype=complex)
_L[1] = [[0, 1, 0], [1, 0, 0], [0, 0, 0]]
_L[2] = [[0, -1j, 0], [1j, 0, 0], [0, 0, 0]]
_L[3] = [[1, 0, 0], [0, -1, 0], [0, 0, 0]]
_L[4] = [[0, 0, 1], [0, 0, 0], [1, 0, 0]]
_L[5] = [[0, 0, -1j], [0, 0, 0], [1j, 0, 0]]
_L[6] = [[0, 0, 0], [0, 0, 1], [0, 1, 0]]
_L[7] = [[0, 0, 0], [0, 0, -1j], [0, 1j, 0]]
_L[8] = np.diag([1, 1, -2]) / np.sqrt(3)


def _su3_f_numeric(a, b, c):
    # [T_a, T_b] = i f_ab^c T_c with T = lambda/2 and Tr(l_a l_b) = 2 delta
    ta, tb, tc = _L[a] / 2, _L[b] / 2, _L[c] / 2
    comm = ta @ tb - tb @ ta
    return float(np.real_if_close(np.trace(comm @ tc) * 2 / 1j))


def test_su2_structure():
    su2 = make_algebra("su2")
    assert su2.dim == 3
    assert su2.structure(1, 2)[3] == SurdScalar.rational(1)
    assert su2.structure(2, 1)[3] == SurdScalar.rational(-1)
    for a in range(3):
        for b in range(3):
            assert su2.g[a][b] == SurdScalar.rational(2 if a == b else 0)


def test_u1n():
    alg = make_algebra("u1^2")
    assert alg.dim == 2 and alg.is_abelian
    assert all(v.is_zero for row in alg.g for v in row)
    assert make_algebra("u1").dim == 1
    with pytest.raises(ValueError):
        make_algebra("so5")


def test_su3_against_matrix_oracle():
    su3 = make_algebra("su3")
    assert su3.dim == 8
    assert su3.structure(1, 2)[3] == SurdScalar.rational(1)
    assert su3.structure(4, 5)[8] == SurdScalar.sqrt(3, Fraction(1, 2))
    for a in range(1, 9):
        for b in range(1, 9):
            row = su3.structure(a, b)
            for c in range(1, 9):
                exact = float(row.get(c, SurdScalar())) if row else 0.0
                assert exact == pytest.approx(_su3_f_numeric(a, b, c), abs=1e-12)


def test_killing_form_values():
    su3 = make_algebra("su3")
    for a in range(8):
        for b in range(8):
            assert su3.g[a][b] == SurdScalar.rational(3 if a == b else 0)
    assert killing_form({}, 2) == ((SurdScalar(),) * 2,) * 2


def test_killing_ad_invariance():
    # g([x,y],z) + g(y,[x,z]) = 0 on all basis triples
    for name in ("su2", "su3"):
        alg = make_algebra(name)
        dim = alg.dim

        def basis(a):
            vec = [CSURD_ZERO] * dim
            vec[a] = ComplexSurd.rational(1)
            return tuple(vec)

        for a, b, c in itertools.product(range(dim), repeat=3):
            x, y, z = basis(a), basis(b), basis(c)
            total = alg.killing_vectors(alg.bracket_vectors(x, y), z) + alg.killing_vectors(
                y, alg.bracket_vectors(x, z)
            )
            assert total.is_zero, (name, a, b, c)


def test_jacobi_check_passes_and_fails():
    su2 = make_algebra("su2")
    su3 = make_algebra("su3")
    assert jacobi_check_finite(su2.f, 3).passed
    assert jacobi_check_finite(su3.f, 8).passed
    broken = {k: dict(v) for k, v in su2.f.items()}
    broken[(1, 2)] = {3: SurdScalar.rational(2)}
    result = jacobi_check_finite(broken, 3, "broken")
    assert not result.passed
    assert result.witness["indices"][:3] == [1, 2, 3]
    # an antisymmetric but genuinely non-Jacobi tensor must fail the cyclic sum
    su3 = make_algebra("su3")
    tampered = {k: dict(v) for k, v in su3.f.items()}
    tampered[(1, 4)] = {7: SurdScalar.rational(1)}
    tampered[(4, 1)] = {7: SurdScalar.rational(-1)}
    result = jacobi_check_finite(tampered, 8, "tampered")
    assert not result.passed and result.witness.get("kind") != "antisymmetry"


def test_cartan_weyl_su2():
    su2 = make_algebra("su2")
    cw = cartan_weyl(su2)
    assert cw.rank == 1
    assert set(cw.roots) == {(Fraction(1),), (Fraction(-1),)}
    # [H, E_pm] = pm E_pm, exactly
    for root in cw.roots:
        evec = cw.root_vectors[root]
        got = su2.bracket_vectors(cw.cartan[0], evec)
        assert vec_is_zero(vec_sub(got, vec_scale(evec, root[0])))


def test_cartan_weyl_su3():
    su3 = make_algebra("su3")
    cw = cartan_weyl(su3)
    assert cw.rank == 2 and len(cw.roots) == 6
    for root in cw.roots:
        assert tuple(-x for x in root) in cw.roots
        evec = cw.root_vectors[root]
        for i, h in enumerate(cw.cartan):
            got = su3.bracket_vectors(h, evec)
            assert vec_is_zero(vec_sub(got, vec_scale(evec, root[i])))
        neg = cw.root_vectors[tuple(-x for x in root)]
        assert su3.killing_vectors(evec, neg) == ComplexSurd.rational(1)
        assert coefficients_in_span(su3.bracket_vectors(evec, neg), list(cw.cartan)) is not None


def test_cartan_weyl_rejects_abelian():
    with pytest.raises(ValueError):
        cartan_weyl(make_algebra("u1^2"))
