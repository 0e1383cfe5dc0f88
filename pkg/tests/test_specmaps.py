import random
from fractions import Fraction
from math import lcm

import numpy as np
import pytest

from nilgrade import matrices as mx
from nilgrade.fixtures import CORPUS_6DIM, load_algebra, load_holonomy, load_map
from nilgrade.grading import classify, find_positive_weights, grading_from_weights, phi_p, preserved_by
from nilgrade.liealg import LieAlgebra, is_automorphism
from nilgrade.polynomials import Polynomial, poly_gcd
from nilgrade.specmaps import (
    commuting_preservation_check,
    expanding_to_positive_grading,
    is_expanding,
    is_integer_like,
    is_semisimple,
    is_z_charpoly,
    norm_profile,
    schur_all_inside,
    selfcover_to_nonneg_grading,
    semisimple_part,
)


def P(*coeffs):
    return Polynomial(coeffs)


def companion(p):
    n = p.degree
    c = mx.zeros(n, n)
    for i in range(1, n):
        c[i, i - 1] = Fraction(1)
    for i in range(n):
        c[i, n - 1] = -p.coeffs[i]
    return c


def float_expanding_oracle(m, margin=1e-9):
    """numpy root finder; None when a root is too close to the circle."""
    coeffs = [float(c) for c in reversed(mx.charpoly(m).coeffs)]
    roots = np.roots(coeffs)
    mags = np.abs(roots)
    if np.any(np.abs(mags - 1.0) <= margin):
        return None
    return bool(np.all(mags > 1.0))


class TestSchurChain:
    def test_roots_inside(self):
        # (X - 1/2)(X - 1/3)
        assert schur_all_inside(P(Fraction(1, 6), Fraction(-5, 6), 1))

    def test_root_outside(self):
        assert not schur_all_inside(P(Fraction(1, 2), Fraction(-9, 4), 1))

    def test_unit_circle_root_fails(self):
        assert not schur_all_inside(P(-1, 1))  # root exactly 1
        assert not schur_all_inside(P(1, 0, 1))  # roots +-i
        assert not schur_all_inside(P(1, Fraction(-5, 2), 1))  # roots 1/2 and 2

    def test_zero_root_is_inside(self):
        assert schur_all_inside(P(0, 0, 1))  # X^2


class TestIsExpanding:
    def test_diag_2_3(self):
        assert is_expanding(mx.diag([2, 3]))

    def test_companion_golden_like(self):
        # X^2 - 3X + 1 has the root (3 - sqrt 5)/2 < 1
        c = companion(P(1, -3, 1))
        assert float_expanding_oracle(c) is False
        assert not is_expanding(c)

    def test_notcohopf_phi_not_expanding(self):
        phi = load_map("notcohopf", "phi")
        assert not is_expanding(phi)  # eigenvalue 1

    def test_unit_circle_exact(self):
        rot = mx.rmat([[0, -1], [1, 0]])  # eigenvalues +-i
        assert not is_expanding(rot)
        assert not is_expanding(mx.rmat([[1, 1], [0, 1]]))

    def test_rational_spectra(self):
        assert is_expanding(mx.diag([Fraction(3, 2), -2]))
        assert not is_expanding(mx.diag([Fraction(1, 2), 3]))

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            is_expanding(mx.zeros(2, 2))

    def test_agrees_with_float_oracle(self):
        rng = random.Random(424242)
        checked = 0
        while checked < 150:
            n = rng.randint(1, 5)
            m = mx.rmat([[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)])
            if mx.det(m) == 0:
                continue
            oracle = float_expanding_oracle(m)
            if oracle is None:
                continue
            checked += 1
            assert is_expanding(m) == oracle


class TestIntegerLike:
    def test_integer_like_with_fractional_entries(self):
        m = mx.rmat([["5/2", "1/2"], ["1/2", "1/2"]])
        assert is_integer_like(m)
        assert is_z_charpoly(m)

    def test_integral_charpoly_but_det_2(self):
        m = mx.rmat([["1/2", "1/2"], ["-3/2", "5/2"]])
        assert is_z_charpoly(m)
        assert not is_integer_like(m)

    def test_identity(self):
        assert is_integer_like(mx.identity(4))

    def test_rational_charpoly_fails_both(self):
        m = mx.diag([Fraction(1, 2), 2])
        assert not is_z_charpoly(m)
        assert not is_integer_like(m)


class TestSemisimplePart:
    def test_already_semisimple_fixed(self):
        m = mx.diag([2, 3])
        assert mx.mat_eq(semisimple_part(m), m)

    def test_unipotent_becomes_identity(self):
        m = mx.rmat([[1, 1], [0, 1]])
        assert mx.mat_eq(semisimple_part(m), mx.identity(2))

    def test_jordan_block_2(self):
        m = mx.rmat([[2, 1], [0, 2]])
        assert mx.mat_eq(semisimple_part(m), mx.diag([2, 2]))

    def test_properties_on_random_matrices(self):
        rng = random.Random(99)
        hits = 0
        while hits < 15:
            n = rng.randint(2, 4)
            m = mx.rmat([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
            hits += 1
            s = semisimple_part(m)
            assert mx.mat_eq(s @ m, m @ s)
            assert mx.charpoly(s) == mx.charpoly(m)
            mp = mx.minpoly(s)
            assert poly_gcd(mp, mp.derivative()).degree == 0
            # nilpotent difference
            assert mx.is_nilpotent(m - s)

    def test_commutes_with_commutant(self):
        m = mx.rmat([[2, 1, 0], [0, 2, 0], [0, 0, 3]])
        s = semisimple_part(m)
        # anything commuting with m must commute with s (s is a polynomial in m)
        b = mx.rmat([[5, 7, 0], [0, 5, 0], [0, 0, 9]])
        assert mx.mat_eq(b @ m, m @ b)
        assert mx.mat_eq(b @ s, s @ b)


class TestNormProfile:
    def test_heisenberg_diagonal(self):
        h = load_algebra("heisenberg3")
        prof = norm_profile(h, mx.diag([2, 3, 6]))
        assert prof.lcm_degree == 1
        assert [str(v) for v in prof.flattened_values()] == ["2", "3", "6"]

    def test_abelian_irreducible_unit_norm(self):
        a = LieAlgebra(2, {})
        m = companion(P(-1, -1, 1))  # X^2 - X - 1, |p(0)| = 1
        prof = norm_profile(a, m)
        assert len(prof.entries) == 1
        assert prof.entries[0].value == 1
        assert prof.lcm_degree == 2

    def test_mixed_degrees_use_lcm_exponent(self):
        a = LieAlgebra(3, {})
        m = mx.zeros(3, 3)
        m[0, 0] = Fraction(2)
        m[1, 2] = Fraction(-1)
        m[2, 1] = Fraction(1)
        m[2, 2] = Fraction(3)
        # blocks: (X-2) and companion(X^2 - 3X + 1)
        prof = norm_profile(a, m)
        assert prof.lcm_degree == 2
        assert [(e.degree, str(e.value)) for e in prof.entries] == [(2, "1"), (1, "4")]

    def test_requires_semisimple(self):
        a = LieAlgebra(2, {})
        with pytest.raises(ValueError):
            norm_profile(a, mx.rmat([[2, 1], [0, 2]]))

    def test_requires_automorphism(self):
        h = load_algebra("heisenberg3")
        with pytest.raises(ValueError):
            norm_profile(h, mx.diag([2, 2, 2]))

    def test_multiplicativity_on_brackets(self):
        # [V_i, V_j] nonzero lands in the class of value v_i * v_j
        cases = [
            ("heisenberg3", mx.diag([2, 3, 6])),
            ("heisenberg3", mx.diag([2, 2, 4])),
            ("notcohopf", load_map("notcohopf", "phi")),
        ]
        for name, m in cases:
            algebra = load_algebra(name)
            prof = norm_profile(algebra, m)
            entries = list(prof.entries)
            for ei in entries:
                for ej in entries:
                    for a in range(ei.subspace.shape[1]):
                        for b in range(ej.subspace.shape[1]):
                            z = algebra.bracket(ei.subspace[:, a], ej.subspace[:, b])
                            if (z == Fraction(0)).all():
                                continue
                            product_entries = [
                                e.subspace for e in entries if e.value == ei.value * ej.value
                            ]
                            assert product_entries
                            assert mx.col_space_contains(mx.hstack(product_entries), z)


class TestExpandingToPositiveGrading:
    def test_heisenberg_diag224(self):
        h = load_algebra("heisenberg3")
        g = expanding_to_positive_grading(h, mx.diag([2, 2, 4]))
        assert g.weights == (1, 2)
        assert mx.mat_eq(g.components[0][1], mx.rmat([[1, 0], [0, 1], [0, 0]]))
        assert classify(h, g) == "positive"

    def test_round_trip_through_phi_p(self):
        h = load_algebra("heisenberg3")
        base = grading_from_weights(h, (1, 1, 2))
        g = expanding_to_positive_grading(h, phi_p(h, base, 3))
        assert g.weights == base.weights
        assert all(
            mx.mat_eq(a[1], b[1]) for a, b in zip(g.components, base.components)
        )

    def test_abelian_two_classes(self):
        a = LieAlgebra(2, {})
        g = expanding_to_positive_grading(a, companion(P(6, -5, 1)))  # (X-2)(X-3)
        assert len(g.components) == 2
        assert g.weights == (1, 2)

    def test_preserved_by_input(self):
        h = load_algebra("heisenberg3")
        for m in (mx.diag([2, 2, 4]), mx.diag([2, 3, 6])):
            g = expanding_to_positive_grading(h, m)
            assert preserved_by(g, m)

    def test_non_expanding_rejected(self):
        h = load_algebra("heisenberg3")
        with pytest.raises(ValueError):
            expanding_to_positive_grading(h, mx.diag([1, 2, 2]))

    def test_nonsemisimple_expanding_map(self):
        # expanding with a nilpotent part: semisimple part drives the grading
        a = LieAlgebra(2, {})
        m = mx.rmat([[2, 1], [0, 2]])
        g = expanding_to_positive_grading(a, m)
        assert g.weights == (1,)
        assert preserved_by(g, m)

    def test_weight_refinement_on_fixtures(self):
        # extraction from phi_p(G, p) recovers G's basis weight function
        for name in CORPUS_6DIM:
            algebra = load_algebra(name)
            w = find_positive_weights(algebra)
            g = grading_from_weights(algebra, w)
            for p in (2, 3):
                extracted = expanding_to_positive_grading(algebra, phi_p(algebra, g, p))
                assert extracted.weights == g.weights
                for (wa, sa), (wb, sb) in zip(extracted.components, g.components):
                    assert wa == wb and mx.mat_eq(sa, sb)


class TestSelfcoverToNonnegGrading:
    def test_notcohopf_expected_grading(self):
        n = load_algebra("notcohopf")
        g = selfcover_to_nonneg_grading(n, load_map("notcohopf", "phi"))
        assert g.weights == (0, 1, 2, 3)
        assert [s.shape[1] for _, s in g.components] == [1, 3, 2, 1]
        assert classify(n, g) == "nonnegative-nontrivial"

    def test_heisenberg_diag122(self):
        h = load_algebra("heisenberg3")
        g = selfcover_to_nonneg_grading(h, mx.diag([1, 2, 2]))
        assert g.weights == (0, 1)
        assert [s.shape[1] for _, s in g.components] == [1, 2]

    def test_abelian_diag12(self):
        a = LieAlgebra(2, {})
        g = selfcover_to_nonneg_grading(a, mx.diag([1, 2]))
        assert g.weights == (0, 1)

    def test_det_one_rejected(self):
        a = LieAlgebra(2, {})
        with pytest.raises(ValueError):
            selfcover_to_nonneg_grading(a, mx.identity(2))

    def test_non_z_charpoly_rejected(self):
        a = LieAlgebra(2, {})
        with pytest.raises(ValueError):
            selfcover_to_nonneg_grading(a, mx.diag([Fraction(5, 2), 2]))


class TestCommutingPreservation:
    def test_self(self):
        h = load_algebra("heisenberg3")
        m = mx.diag([2, 2, 4])
        g = expanding_to_positive_grading(h, m)
        assert commuting_preservation_check(h, g, m, m)

    def test_rotation_in_eigenplane(self):
        h = load_algebra("heisenberg3")
        m = mx.diag([2, 2, 4])
        g = expanding_to_positive_grading(h, m)
        rot = load_map("heisenberg3", "rotation")
        assert commuting_preservation_check(h, g, m, rot)

    def test_identity_always(self):
        h = load_algebra("heisenberg3")
        m = mx.diag([2, 3, 6])
        g = expanding_to_positive_grading(h, m)
        assert commuting_preservation_check(h, g, m, mx.identity(3))

    def test_noncommuting_rejected(self):
        h = load_algebra("heisenberg3")
        m = mx.diag([2, 3, 6])
        g = expanding_to_positive_grading(h, m)
        swap = load_holonomy("heisenberg3_swap").elements[1]
        with pytest.raises(ValueError):
            commuting_preservation_check(h, g, m, swap)


class TestCompositeCriterion:
    def test_three_conditions_consistent(self):
        # positive weights exist iff an expanding automorphism exists iff
        # phi_p of the found grading is expanding, on every bundled algebra
        for name in CORPUS_6DIM + ("nilp5", "notcohopf"):
            algebra = load_algebra(name)
            w = find_positive_weights(algebra)
            if w is None:
                # basis-aligned scope: the bundled witnesses must not expand
                if name == "notcohopf":
                    assert not is_expanding(load_map("notcohopf", "phi"))
                continue
            g = grading_from_weights(algebra, w)
            m = phi_p(algebra, g, 2)
            assert is_automorphism(algebra, m)
            assert is_expanding(m)
            back = expanding_to_positive_grading(algebra, m)
            assert classify(algebra, back) == "positive"
