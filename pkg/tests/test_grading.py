import itertools
from fractions import Fraction

import pytest

from nilgrade import matrices as mx
from nilgrade.fixtures import ALL_FIXTURES, load_algebra, load_holonomy, load_map
from nilgrade.grading import (
    Grading,
    classify,
    find_nonneg_nontrivial_weights,
    find_positive_weights,
    grading_from_weights,
    phi_p,
    preserved_by,
    verify_grading,
    weight_solution_space,
)
from nilgrade.liealg import LieAlgebra, is_automorphism, is_derivation
from nilgrade.polynomials import from_roots


def heisenberg():
    return load_algebra("heisenberg3")


def span(*cols):
    return mx.rmat([[c[i] for c in cols] for i in range(len(cols[0]))])


# -- exhaustive oracle -------------------------------------------------------


def exhaustive_weights(algebra: LieAlgebra, lo: int, hi: int, nontrivial_nonneg=False):
    """All integer weight vectors in [lo, hi]^n satisfying the constraints."""
    n = algebra.dim
    out = []
    for w in itertools.product(range(lo, hi + 1), repeat=n):
        if nontrivial_nonneg and not any(x >= 1 for x in w):
            continue
        ok = True
        for (i, j), vec in algebra.table.items():
            for k in range(n):
                if vec[k] != 0 and w[i] + w[j] != w[k]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(w)
    return out


class TestVerifyGrading:
    def test_heisenberg_standard(self):
        g = Grading(((1, span([1, 0, 0], [0, 1, 0])), (2, span([0, 0, 1]))))
        assert verify_grading(heisenberg(), g).accepted()

    def test_notcohopf_weights_verify(self):
        n = load_algebra("notcohopf")
        g = grading_from_weights(n, (0, 1, 1, 1, 2, 2, 3))
        assert verify_grading(n, g).accepted()

    def test_misassigned_basis_rejected(self):
        g = Grading(((1, span([1, 0, 0], [0, 0, 1])), (2, span([0, 1, 0]))))
        v = verify_grading(heisenberg(), g)
        assert v.decision == "reject"
        assert v.condition == "not-homogeneous"
        assert v.certificate["pair"] == [1, 2]
        assert v.certificate["bracket"] == ["0", "0", "1"]

    def test_non_basis_aligned_grading_verifies(self):
        # same Heisenberg grading after mixing the generators
        g = Grading(((1, span([1, 1, 0], [1, -1, 0])), (2, span([0, 0, 1]))))
        assert verify_grading(heisenberg(), g).accepted()

    def test_not_direct_sum_rejected(self):
        g = Grading(((1, span([1, 0, 0], [0, 1, 0])), (2, span([1, 1, 0]))))
        v = verify_grading(heisenberg(), g)
        assert v.condition == "not-direct-sum"

    def test_weights_must_increase(self):
        with pytest.raises(ValueError):
            Grading(((2, span([0, 0, 1])), (1, span([1, 0, 0], [0, 1, 0]))))


class TestClassify:
    def test_positive(self):
        g = grading_from_weights(heisenberg(), (1, 1, 2))
        assert classify(heisenberg(), g) == "positive"

    def test_nonnegative_nontrivial(self):
        n = load_algebra("notcohopf")
        g = grading_from_weights(n, (0, 1, 1, 1, 2, 2, 3))
        assert classify(n, g) == "nonnegative-nontrivial"

    def test_trivial(self):
        a = load_algebra("abelian3")
        g = grading_from_weights(a, (0, 0, 0))
        assert classify(a, g) == "trivial"

    def test_other_on_negative_weight(self):
        a = load_algebra("abelian3")
        g = grading_from_weights(a, (-1, 0, 2))
        assert classify(a, g) == "other"

    def test_unverified_raises(self):
        g = Grading(((1, span([1, 0, 0], [0, 0, 1])), (2, span([0, 1, 0]))))
        with pytest.raises(ValueError):
            classify(heisenberg(), g)


class TestWeightSolutionSpace:
    def test_abelian_full(self):
        assert weight_solution_space(load_algebra("abelian3")).shape[1] == 3

    def test_heisenberg_two_dims(self):
        k = weight_solution_space(heisenberg())
        assert k.shape[1] == 2
        for c in range(2):
            w = k[:, c]
            assert w[0] + w[1] == w[2]

    def test_nilp5_zero(self):
        assert weight_solution_space(load_algebra("nilp5")).shape[1] == 0

    def test_diag_weights_are_derivations(self):
        for name in ALL_FIXTURES:
            algebra = load_algebra(name)
            k = weight_solution_space(algebra)
            for c in range(k.shape[1]):
                assert is_derivation(algebra, mx.diag(list(k[:, c])))


class TestWeightSearch:
    def test_heisenberg_canonical(self):
        assert find_positive_weights(heisenberg()) == (1, 1, 2)

    def test_nilp5_none(self):
        n5 = load_algebra("nilp5")
        assert find_positive_weights(n5) is None
        assert find_nonneg_nontrivial_weights(n5) is None

    def test_notcohopf_expected_weights(self):
        n = load_algebra("notcohopf")
        assert find_positive_weights(n) is None
        assert find_nonneg_nontrivial_weights(n) == (0, 1, 1, 1, 2, 2, 3)

    def test_gcd_one(self):
        from math import gcd

        for name in ALL_FIXTURES:
            w = find_positive_weights(load_algebra(name))
            if w:
                assert gcd(*w) == 1 if len(w) > 1 else w[0] == 1

    def test_agrees_with_exhaustive_search(self):
        # feasibility matches brute force over [1, 6]^n (positive) and
        # [0, 6]^n nonzero (non-negative) on every bundled algebra
        for name in ALL_FIXTURES:
            algebra = load_algebra(name)
            pos = find_positive_weights(algebra)
            brute = exhaustive_weights(algebra, 1, 6)
            assert (pos is not None) == bool(brute)
            if pos is not None:
                assert pos in brute  # solver output satisfies the constraints
                assert max(pos) == min(max(w) for w in brute)  # minimal max
            nn = find_nonneg_nontrivial_weights(algebra)
            brute_nn = exhaustive_weights(algebra, 0, 6, nontrivial_nonneg=True)
            assert (nn is not None) == bool(brute_nn)
            if nn is not None:
                assert nn in brute_nn
                assert max(nn) == min(max(w) for w in brute_nn)

    def test_lex_minimality_at_minimal_max(self):
        for name in ("heisenberg3", "sixdim_class3", "notcohopf"):
            algebra = load_algebra(name)
            w = find_positive_weights(algebra) or find_nonneg_nontrivial_weights(algebra)
            lo = 0 if 0 in w else 1
            brute = exhaustive_weights(algebra, lo, max(w), nontrivial_nonneg=(lo == 0))
            same_max = [x for x in brute if max(x) == max(w)]
            assert w == min(same_max)


class TestGradingFromWeights:
    def test_heisenberg_components(self):
        g = grading_from_weights(heisenberg(), (1, 1, 2))
        assert g.weights == (1, 2)
        assert [s.shape[1] for _, s in g.components] == [2, 1]

    def test_notcohopf_four_components(self):
        n = load_algebra("notcohopf")
        g = grading_from_weights(n, (0, 1, 1, 1, 2, 2, 3))
        assert g.weights == (0, 1, 2, 3)
        assert [s.shape[1] for _, s in g.components] == [1, 3, 2, 1]

    def test_abelian_single_component(self):
        a = LieAlgebra(2, {})
        g = grading_from_weights(a, (5, 5))
        assert g.weights == (5,)
        assert g.components[0][1].shape == (2, 2)

    def test_constraint_violation_raises(self):
        with pytest.raises(ValueError):
            grading_from_weights(heisenberg(), (1, 1, 3))

    def test_verify_accepts_result(self):
        for name in ALL_FIXTURES:
            algebra = load_algebra(name)
            w = find_positive_weights(algebra)
            if w is None:
                continue
            g = grading_from_weights(algebra, w)
            assert verify_grading(algebra, g).accepted()


class TestPhiP:
    def test_heisenberg_p2(self):
        g = grading_from_weights(heisenberg(), (1, 1, 2))
        m = phi_p(heisenberg(), g, 2)
        assert mx.mat_eq(m, mx.diag([2, 2, 4]))
        assert mx.det(m) == 16

    def test_notcohopf_p2_det_2_to_10(self):
        n = load_algebra("notcohopf")
        g = grading_from_weights(n, (0, 1, 1, 1, 2, 2, 3))
        m = phi_p(n, g, 2)
        assert mx.mat_eq(m, mx.diag([1, 2, 2, 2, 4, 4, 8]))
        assert mx.det(m) == 2**10
        assert is_automorphism(n, m)

    def test_trivial_grading_gives_identity(self):
        a = load_algebra("abelian3")
        g = grading_from_weights(a, (0, 0, 0))
        m = phi_p(a, g, 3)
        assert mx.mat_eq(m, mx.identity(3))
        assert mx.det(m) == 1

    def test_eigenvalues_and_determinant(self):
        for name in ("heisenberg5", "filiform5", "sixdim_class4"):
            algebra = load_algebra(name)
            w = find_positive_weights(algebra)
            g = grading_from_weights(algebra, w)
            for p in (2, 3):
                m = phi_p(algebra, g, p)
                expected = from_roots(sorted(Fraction(p) ** x for x in w))
                assert mx.charpoly(m) == expected
                assert mx.det(m) == Fraction(p) ** sum(w)

    def test_non_prime_rejected(self):
        g = grading_from_weights(heisenberg(), (1, 1, 2))
        with pytest.raises(ValueError):
            phi_p(heisenberg(), g, 6)

    def test_non_basis_aligned_grading(self):
        g = Grading(((1, span([1, 1, 0], [1, -1, 0])), (2, span([0, 0, 1]))))
        m = phi_p(heisenberg(), g, 2)
        assert mx.mat_eq(m, mx.diag([2, 2, 4]))  # same subspaces, same map
        assert is_automorphism(heisenberg(), m)


class TestPreservedBy:
    def test_identity_preserves(self):
        g = grading_from_weights(heisenberg(), (1, 1, 2))
        assert preserved_by(g, mx.identity(3))

    def test_phi_preserves_notcohopf_grading(self):
        n = load_algebra("notcohopf")
        g = grading_from_weights(n, (0, 1, 1, 1, 2, 2, 3))
        assert preserved_by(g, load_map("notcohopf", "phi"))

    def test_component_swap_detected(self):
        g = grading_from_weights(heisenberg(), (1, 1, 2))
        swap13 = mx.rmat([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
        assert not preserved_by(g, swap13)

    def test_singular_rejected(self):
        g = grading_from_weights(heisenberg(), (1, 1, 2))
        with pytest.raises(ValueError):
            preserved_by(g, mx.zeros(3, 3))


class TestCommutation:
    def test_phi_p_commutes_with_preserving_maps(self):
        # identity, phi_q for other primes, and the holonomy fixtures
        h = heisenberg()
        g = grading_from_weights(h, (1, 1, 2))
        maps = [mx.identity(3), phi_p(h, g, 3), phi_p(h, g, 5)]
        for group_name in ("heisenberg3_sign", "heisenberg3_swap"):
            maps.extend(load_holonomy(group_name).elements)
        m2 = phi_p(h, g, 2)
        for psi in maps:
            if preserved_by(g, psi):
                assert mx.mat_eq(m2 @ psi, psi @ m2)
