"""
Tests for the Sergeev algebra B_k, its presentation and the Clifford module X_k.
"""

import pytest

from spinduality.exceptions import (
    IndexRangeError,
    SizeMismatchError,
    WeightMismatchError,
)
from spinduality.services import sergeev_algebra as sa
from spinduality.services.exactfield import IMAG, FieldElem
from spinduality.services.partitions import Partition, odd_partitions

P = Partition.of


@pytest.mark.unit
class TestPermutations:
    """Test cases for the one-line permutation helpers."""

    def test_transposition(self):
        """Test s_i in one-line notation and its range check."""
        assert sa.transposition(1, 3) == (2, 1, 3)
        with pytest.raises(IndexRangeError):
            sa.transposition(3, 3)

    def test_compose_and_inverse(self):
        """Test (w o v)(j) = w(v(j)) and w o w^-1 = 1."""
        w, v = (2, 3, 1), (2, 1, 3)
        assert sa.compose(w, v) == (3, 2, 1)
        for u in sa.all_perms(4):
            assert sa.compose(u, sa.perm_inverse(u)) == sa.identity_perm(4)

    def test_reduced_word(self):
        """Test that reduced words multiply back to w and have length l(w)."""
        assert sa.reduced_word((3, 2, 1)) == (1, 2, 1)
        assert sa.reduced_word(sa.identity_perm(3)) == ()
        for w in sa.all_perms(4):
            word = sa.reduced_word(w)
            rebuilt = sa.identity_perm(4)
            for j in word:
                rebuilt = sa.compose(rebuilt, sa.transposition(j, 4))
            assert rebuilt == w
            assert len(word) == sa.perm_length(w)

    def test_subsets_order(self):
        """Test subsets by cardinality, then lexicographically."""
        assert sa.subsets(2) == [(), (1,), (2,), (1, 2)]
        assert len(sa.subsets(5)) == 32


@pytest.mark.unit
@pytest.mark.algebra
class TestBkElem:
    """Test cases for the normal form and multiplication."""

    def test_clifford_relations(self):
        """Test xi_j^2 = 1 and xi_2 xi_1 = -xi_{1,2}."""
        x1, x2 = sa.xi(1, 2), sa.xi(2, 2)
        one = sa.BkElem.unit(2)
        assert x1 * x1 == one
        assert x2 * x1 == sa.BkElem.basis(2, (1, 2), coeff=-1)
        assert x1 * x2 == -(x2 * x1)

    def test_reordering_sign(self):
        """Test sigma_1 xi_1 xi_2 sigma_1 = xi_2 xi_1 = -xi_{1,2}."""
        s1 = sa.sigma(1, 2)
        xi12 = sa.BkElem.basis(2, (1, 2))
        assert s1 * xi12 * s1 == sa.BkElem.basis(2, (1, 2), coeff=-1)

    def test_permutation_conjugates_xi(self):
        """Test sigma_w xi_j sigma_w^-1 = xi_w(j)."""
        k = 3
        for w in sa.all_perms(k):
            s_w = sa.BkElem.basis(k, (), w)
            s_inv = sa.BkElem.basis(k, (), sa.perm_inverse(w))
            for j in range(1, k + 1):
                assert s_w * sa.xi(j, k) * s_inv == sa.xi(w[j - 1], k)

    def test_validation(self):
        """Test subset, permutation and size checks."""
        with pytest.raises(IndexRangeError):
            sa.BkElem.basis(2, (3,))
        with pytest.raises(IndexRangeError):
            sa.BkElem.basis(2, (), (1, 1))
        with pytest.raises(SizeMismatchError):
            sa.xi(1, 2) * sa.xi(1, 3)

    def test_degree(self):
        """Test the Z2-degree of homogeneous and mixed elements."""
        assert sa.xi(1, 3).degree == 1
        assert sa.sigma(1, 3).degree == 0
        assert (sa.xi(1, 3) + sa.BkElem.unit(3)).degree is None
        assert sa.BkElem(3).degree == 0

    def test_str(self):
        """Test the printed normal form."""
        assert str(sa.xi(1, 2)) == "(1) * xi{1} * s(1 2)"
        assert str(sa.BkElem(2)) == "0"

    def test_zeta(self):
        """Test zeta_i = sqrt(-1) xi_2i-1 xi_2i is an even involution."""
        z = sa.zeta(1, 2)
        assert z.coefficient((1, 2)) == IMAG
        assert z * z == sa.BkElem.unit(2)
        assert z.degree == 0
        with pytest.raises(IndexRangeError):
            sa.zeta(2, 3)

    def test_gamma_elements(self):
        """Test gamma_j^2 = -1 and the cycle-type products."""
        assert sa.theta_gamma(1, 2) ** 2 == -sa.BkElem.unit(2)
        assert sa.gamma_mu(P(1, 1), 2) == sa.BkElem.unit(2)
        assert sa.gamma_mu(P(2, 1), 3) == sa.theta_gamma(1, 3)
        with pytest.raises(WeightMismatchError):
            sa.gamma_mu(P(2), 3)
        with pytest.raises(IndexRangeError):
            sa.theta_gamma(2, 2)

    def test_sigma_class(self):
        """Test sigma^(lam, mu) on the smallest cases."""
        assert sa.sigma_class(P(1), Partition(()), 1) == sa.BkElem.unit(1)
        assert sa.sigma_class(Partition(()), P(1), 1) == sa.xi(1, 1)
        assert sa.sigma_class(P(2), Partition(()), 2) == sa.sigma(1, 2)
        with pytest.raises(WeightMismatchError):
            sa.sigma_class(P(1), P(1), 3)

    def test_clifford_element(self):
        """Test elements of C_k given by coordinates."""
        c = sa.clifford_element(2, {(1,): 1, (1, 2): 2})
        assert c.is_clifford
        assert c.clifford_coords() == {(1,): FieldElem(1), (1, 2): FieldElem(2)}
        assert not sa.sigma(1, 2).is_clifford

    def test_subalgebra_dim(self):
        """Test closure dimensions of small generator sets."""
        assert sa.subalgebra_dim([]) == 1
        assert sa.subalgebra_dim([sa.xi(1, 2), sa.xi(2, 2)]) == 4
        assert sa.subalgebra_dim([sa.xi(1, 2), sa.sigma(1, 2)]) == 8


@pytest.mark.unit
@pytest.mark.algebra
class TestPresentation:
    """Test cases for the relation and isomorphism checks."""

    def test_degenerate_k1(self):
        """Test that k = 1 only checks the tau relations."""
        names = [c.name for c in sa.check_presentation(1)]
        assert names == ["tau^2=1", "tau1=xi1", "tau1^2=1"]

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_relations_hold(self, k):
        """Test every relation of the presentation."""
        checks = sa.check_presentation(k)
        assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]

    def test_k2_contains_quartic_relation(self):
        """Test that k = 2 reports (tau*sigma1)^4=-1."""
        checks = {c.name: c for c in sa.check_presentation(2)}
        assert checks["(tau*sigma1)^4=-1"].passed

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_theta_isomorphism(self, k):
        """Test dim theta(C_k x A_k) = 2^k k!."""
        assert sa.theta_isomorphism_check(k).passed

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_gamma_subalgebra(self, k):
        """Test that the gamma images span a k!-dimensional algebra."""
        assert sa.gamma_subalgebra_check(k).passed

    def test_fault_injection_detected(self, monkeypatch):
        """Test that a wrong reordering sign breaks the relations."""
        monkeypatch.setattr(sa, "_clifford_sign", lambda subset, j: 1)
        checks = sa.check_presentation(2)
        assert not all(c.passed for c in checks)


@pytest.mark.unit
@pytest.mark.algebra
class TestCliffordModule:
    """Test cases for X_k and the trace formula."""

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_dimension(self, k):
        """Test dim X_k = 2^ceil(k/2) with equal even and odd parts."""
        module = sa.xk_build(k)
        assert module.dim == 2 ** ((k + 1) // 2)
        even, odd = module.graded_dim
        assert even == odd

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_module_checks(self, k, rng):
        """Test relations, eigenprojections, z_k and random traces."""
        checks = sa.check_clifford_module(k, rng, 20)
        assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]
        names = {c.name for c in checks}
        assert ("zk^2=-1" in names) == (k % 2 == 1)

    def test_unit_trace(self):
        """Test that the unit acts with trace dim X_k."""
        for k in (2, 3):
            assert sa.xk_char(k, sa.BkElem.unit(k)) == sa.xk_build(k).dim

    def test_non_clifford_rejected(self):
        """Test that xk_char() only takes Clifford elements."""
        with pytest.raises(ValueError):
            sa.xk_char(2, sa.sigma(1, 2))

    @pytest.mark.parametrize("k", range(1, 6))
    def test_xi_product(self, k):
        """Test the coefficient formula for every odd mu."""
        module = sa.xk_build(k)
        for mu in odd_partitions(k):
            assert sa.xi_product_coeff(mu, module) == sa.xi_product_expected(mu)
        assert all(c.passed for c in sa.xi_product_checks(k, module))

    def test_xi_product_expected_values(self):
        """Test 2^floor((k+1)/2) (-1)^((k-l)/2) on small cases."""
        assert sa.xi_product_expected(P(1)) == 2
        assert sa.xi_product_expected(P(3)) == -4
        assert sa.xi_product_expected(P(1, 1, 1)) == 4


@pytest.mark.unit
@pytest.mark.algebra
class TestAlgebraLaws:
    """Test cases for the randomized associativity and degree checks."""

    @pytest.mark.parametrize("k", [2, 3])
    def test_laws(self, k, rng):
        """Test associativity and degree additivity on random elements."""
        checks = sa.check_algebra_laws(k, rng, 20)
        assert [c.name for c in checks] == [
            "bk-associativity",
            "bk-degree-additivity",
        ]
        assert all(c.passed for c in checks)

    def test_random_homogeneous_degree(self, rng):
        """Test that random homogeneous elements have the requested degree."""
        for degree in (0, 1):
            assert sa.random_homogeneous(3, rng, degree).degree == degree
