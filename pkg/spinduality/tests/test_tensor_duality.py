"""
Tests for the q(n) and B_k actions on tensor space and the duality checks.
"""

import pytest

from spinduality.exceptions import IndexRangeError, SizeMismatchError
from spinduality.services import sergeev_algebra as sa
from spinduality.services import tensor_duality as td
from spinduality.services.exactfield import IMAG, FieldElem
from spinduality.services.partitions import Partition
from spinduality.services.superlinear import (
    EndoMatrix,
    supercentralizer,
    trace_on,
)

P = Partition.of


def _failed(checks):
    return [(c.name, c.eps, c.detail) for c in checks if not c.passed]


@pytest.mark.unit
@pytest.mark.duality
class TestTensorSpace:
    """Test cases for the basis, grading and generator matrices."""

    def test_basis_and_grading(self, space_1_2):
        """Test digit order, parity and the graded dimension."""
        assert space_1_2.dim == 4
        assert space_1_2.digits == [(0, 0), (0, 1), (1, 0), (1, 1)]
        assert space_1_2.index((1, 0)) == 2
        assert space_1_2.grading == [0, 1, 1, 0]
        assert space_1_2.graded_dim == (2, 2)

    def test_invalid_sizes(self):
        """Test that n and k must be positive."""
        with pytest.raises(IndexRangeError):
            td.TensorSpace(0, 1)
        with pytest.raises(IndexRangeError):
            td.TensorSpace(1, 0)

    def test_theta_even_unit(self, space_1_1, space_1_2):
        """Test Theta(A11) = k * identity for n = 1."""
        assert space_1_1.theta_gens()[0] == EndoMatrix.identity(2)
        assert space_1_2.theta_gens()[0] == EndoMatrix.identity(4).scale(2)

    def test_theta_labels(self, space_2_2):
        """Test generator order: even A_ij first, then odd B_ij."""
        gens = space_2_2.theta_gens()
        assert [g.label for g in gens][:2] == ["Theta(A11)", "Theta(A12)"]
        assert gens[4].label == "Theta(B11)"
        assert [g.degree for g in gens] == [0] * 4 + [1] * 4

    def test_psi_tau(self, space_1_1):
        """Test P in the first slot."""
        tau = space_1_1.psi_tau()
        assert tau.entry(1, 0) == IMAG
        assert tau.entry(0, 1) == -IMAG
        assert tau @ tau == EndoMatrix.identity(2)

    def test_psi_sigma(self, space_1_2):
        """Test the signed slot swap."""
        s1 = space_1_2.psi_sigma(1)
        assert s1.entry(3, 3) == -1
        assert s1.entry(2, 1) == 1
        assert s1.entry(0, 0) == 1
        with pytest.raises(IndexRangeError):
            space_1_2.psi_sigma(2)

    def test_quartic_relation(self, space_1_2):
        """Test (Psi(tau) Psi(sigma1))^4 = -1."""
        tau, (s1,) = space_1_2.psi_gens()
        step = tau @ s1
        assert step @ step @ step @ step == -EndoMatrix.identity(4)

    def test_act_bk(self, space_1_2):
        """Test the unit, a relation and gamma_1^2 = -1 through Psi."""
        identity = EndoMatrix.identity(4)
        assert space_1_2.act_bk(sa.BkElem.unit(2)) == identity
        assert space_1_2.act_bk(sa.xi(1, 2)) == space_1_2.psi_tau()
        assert space_1_2.act_bk(sa.theta_gamma(1, 2) ** 2) == -identity

    def test_act_bk_size_mismatch(self, space_1_2):
        """Test that B_k only acts on the k-fold tensor power."""
        with pytest.raises(SizeMismatchError):
            space_1_2.act_bk(sa.BkElem.unit(3))

    def test_diag(self):
        """Test diagonal traces on small spaces."""
        assert td.diag_action([3], 2).trace() == 36
        assert td.diag_action([3, 4], 1).trace() == 14
        with pytest.raises(SizeMismatchError):
            td.tensor_space(2, 1).diag([1])

    def test_prime_points(self):
        """Test consecutive primes as evaluation points."""
        assert td.prime_points(2, 3) == [[2, 3], [5, 7], [11, 13]]
        assert td.prime_points(1, 2) == [[2], [3]]


@pytest.mark.unit
@pytest.mark.duality
class TestEigenspaces:
    """Test cases for the zeta eigenspaces W^eps."""

    def test_odd_k_without_zeta(self, space_1_1):
        """Test that k = 1 has the single eigenspace W."""
        spaces = space_1_1.eigenspaces()
        assert list(spaces) == [()]
        assert spaces[()].dim == 2

    @pytest.mark.parametrize("n, k, expected", [(1, 2, 2), (2, 2, 8), (1, 3, 4)])
    def test_dims(self, n, k, expected):
        """Test dim W^eps = dim W / 2^floor(k/2)."""
        spaces = td.zeta_eigenspaces(n, k)
        assert len(spaces) == 2 ** (k // 2)
        assert all(s.dim == expected for s in spaces.values())
        assert all(s.is_graded for s in spaces.values())

    def test_eigenvalues(self, space_1_2):
        """Test that zeta_1 acts by (-1)^eps on W^eps."""
        zeta = space_1_2.zeta(1)
        for (bit,), w_eps in space_1_2.eigenspaces().items():
            sign = -1 if bit else 1
            for row in w_eps.rows:
                image = zeta.apply(row)
                assert image == {j: v * sign for j, v in row.items()}


@pytest.mark.unit
@pytest.mark.duality
class TestSupercentralizers:
    """Test cases for the duality on W itself."""

    def test_k1_n1(self, space_1_1):
        """Test both supercentralizers on C^(1|1)."""
        thetas = space_1_1.theta_gens()
        assert supercentralizer(thetas, space_1_1.grading).dim == 2
        tau, _ = space_1_1.psi_gens()
        assert supercentralizer([tau], space_1_1.grading).dim == 2

    def test_k2_n1(self, space_1_2):
        """Test that End_q(1)(W) is all of B_2 and End_B2(W) is q(1)'s image."""
        tau, sigmas = space_1_2.psi_gens()
        assert supercentralizer(space_1_2.theta_gens(), space_1_2.grading).dim == 8
        assert supercentralizer([tau, *sigmas], space_1_2.grading).dim == 2

    @pytest.mark.parametrize("n, k", [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2)])
    def test_verify_duality(self, n, k):
        """Test every duality check on small spaces."""
        checks = td.verify_duality(n, k)
        assert checks
        assert not _failed(checks)

    def test_verify_duality_names(self):
        """Test the odd-k variant of the eigenspace checks."""
        names = {c.name for c in td.verify_duality(1, 3)}
        assert "eps-odd-unit" in names
        assert "eps-supercentralizer(theta)=C1*closure(gamma)" in names
        assert "eps-supercentralizer(theta)=closure(gamma)" not in names

    @pytest.mark.slow
    def test_verify_duality_2_3(self):
        """Test the largest default pair."""
        assert not _failed(td.verify_duality(2, 3))


@pytest.mark.unit
@pytest.mark.duality
class TestCharacters:
    """Test cases for the trace identities and multiplicities."""

    def test_trace_of_identity_class(self, space_2_2):
        """Test tr(gamma^(1,1) diag(2, 3)) on W^(0) = 2 * 25."""
        gamma = space_2_2.act_bk(sa.gamma_mu(P(1, 1), 2))
        w_eps = space_2_2.eigenspaces()[(0,)]
        assert trace_on(w_eps, gamma @ space_2_2.diag([2, 3])) == 50

    @pytest.mark.slow
    def test_trace_of_three_cycle(self):
        """Test tr(gamma^(3) diag(1, 1)) on W^(0) for n = 2, k = 3."""
        space = td.tensor_space(2, 3)
        gamma = space.act_bk(sa.gamma_mu(P(3), 3))
        w_eps = space.eigenspaces()[(0,)]
        assert trace_on(w_eps, gamma @ space.diag([1, 1])) == 4

    @pytest.mark.parametrize(
        "nu, n, expected",
        [(P(2), 1, 2), (P(3), 2, 12), (P(2, 1), 2, 4), (P(2, 1), 1, 0)],
    )
    def test_dim_u(self, nu, n, expected):
        """Test the predicted dimensions of the q(n) irreducibles."""
        assert td.dim_u(nu, n) == expected

    def test_dim_u_accounts_for_w(self):
        """Test that the q(2) dimensions for k = 3 add up to dim W."""
        total = td.dim_u(P(3), 2) * 2 + td.dim_u(P(2, 1), 2) * 2
        assert total == FieldElem(32)

    @pytest.mark.parametrize("n, k", [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3)])
    def test_schur_identity(self, n, k):
        """Test traces against p_mu and the Q-function expansion."""
        checks = td.schur_identity_check(n, k, td.prime_points(n, 2))
        assert not _failed(checks)
        names = {c.name for c in checks}
        if k == 2:
            assert "class-vanishing(2)" in names

    @pytest.mark.parametrize("n, k", [(1, 1), (1, 2), (2, 2), (1, 3)])
    def test_sergeev_characters(self, n, k):
        """Test traces over W of the sigma^(lam, mu) classes."""
        checks = td.sergeev_character_check(n, k, td.prime_points(n, 2))
        assert not _failed(checks)
        assert checks[-1].name == "sergeev-vanishing"

    @pytest.mark.parametrize("n, k", [(1, 1), (1, 2), (2, 2), (1, 3)])
    def test_multiplicity_accounting(self, n, k):
        """Test the predicted multiplicities of each W^eps and of W."""
        assert not _failed(td.multiplicity_accounting(n, k))

    @pytest.mark.parametrize("n, k", [(1, 2), (2, 2), (1, 3)])
    def test_property_checks(self, n, k, rng):
        """Test homomorphism, commutation and eigenspace properties."""
        point = td.prime_points(n, 1)[0]
        checks = td.property_checks(n, k, rng, 10, point)
        assert not _failed(checks)
        assert {c.name for c in checks} >= {
            "act-bk-homomorphism",
            "diag-commutes",
            "zeta-involutions",
            "eigenspace-intertwining",
            "odd-trace-zero",
        }
