"""
Tensor space duality between q(n) and the Sergeev algebra.

W is the k-fold super tensor power of V = C^(n|n). Basis vectors of W are
digit tuples (b_1, ..., b_k) with b_j in 0..2n-1, the first slot most
significant; b_j >= n marks an odd factor. q(n) acts through Theta (a signed
sum over slots), B_k through Psi (P in the first slot, signed slot swaps),
and GL(n) diagonally. The checks below verify the mutual supercentralizer
property on W and on the simultaneous eigenspaces W^eps of the zeta_i, and
the character identities that follow from them.
"""

import itertools
import logging
import random
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import prime

from spinduality.exceptions import (
    IndexRangeError,
    NotInvariantError,
    SizeMismatchError,
)
from spinduality.schemas.report_schemas import CheckResult, make_check
from spinduality.services import linalg, qfunctions, sergeev_algebra
from spinduality.services.exactfield import IMAG, FieldElem
from spinduality.services.partitions import (
    Partition,
    dp_minus,
    enumerate_partitions,
    odd_partitions,
    stats,
    strict_partitions,
)
from spinduality.services.sergeev_algebra import BkElem, Perm
from spinduality.services.superlinear import (
    EndoMatrix,
    Subspace,
    closure_dim_within,
    restrict,
    supercentralizer,
    supertrace_on,
    trace_on,
)

logger = logging.getLogger(__name__)

Eps = Tuple[int, ...]


class TensorSpace:
    """W = V^(tensor k) for V = C^(n|n), with memoized Psi images"""

    def __init__(self, n: int, k: int):
        if n < 1 or k < 1:
            raise IndexRangeError(f"tensor space needs n, k >= 1, got n={n} k={k}")
        self.n = n
        self.k = k
        self.base = 2 * n
        self.dim = self.base**k
        self.digits: List[Tuple[int, ...]] = list(
            itertools.product(range(self.base), repeat=k)
        )
        self.grading: List[int] = [
            sum(1 for b in digits if b >= n) % 2 for digits in self.digits
        ]
        self._psi_taus: Dict[int, EndoMatrix] = {}
        self._psi_perms: Dict[Perm, EndoMatrix] = {}
        self._psi_xis: Dict[Tuple[int, ...], EndoMatrix] = {}
        self._eigenspaces: Optional[Dict[Eps, Subspace]] = None

    def index(self, digits: Sequence[int]) -> int:
        value = 0
        for b in digits:
            value = value * self.base + b
        return value

    def parity(self, b: int) -> int:
        return 1 if b >= self.n else 0

    @property
    def graded_dim(self) -> Tuple[int, int]:
        odd = sum(self.grading)
        return (self.dim - odd, odd)

    def vector_grading(self, j: int) -> int:
        return self.grading[j]

    # Theta

    def theta(
        self, entries: Dict[Tuple[int, int], FieldElem], alpha: int, label: str = ""
    ) -> EndoMatrix:
        """Theta(X) = sum_j (-1)^(alpha (beta_1 + ... + beta_j-1)) X in slot j."""
        by_column: Dict[int, List[Tuple[int, FieldElem]]] = {}
        for (r, c), value in entries.items():
            by_column.setdefault(c, []).append((r, value))
        rows: Dict[int, Dict[int, FieldElem]] = {}
        for a, digits in enumerate(self.digits):
            prefix = 0
            for slot, b in enumerate(digits):
                sign = -1 if alpha and prefix % 2 else 1
                for r, value in by_column.get(b, ()):
                    image = digits[:slot] + (r,) + digits[slot + 1 :]
                    target = rows.setdefault(self.index(image), {})
                    term = value if sign > 0 else -value
                    current = target.get(a)
                    target[a] = term if current is None else current + term
                prefix += self.parity(b)
        cleaned = {i: {j: v for j, v in row.items() if v} for i, row in rows.items()}
        return EndoMatrix(self.dim, cleaned, alpha, label)

    def theta_gens(self) -> List[EndoMatrix]:
        """Theta(A_ij) (even) and Theta(B_ij) (odd) for 1 <= i, j <= n."""
        n = self.n
        one = FieldElem.one()
        gens = []
        for i in range(n):
            for j in range(n):
                entries = {(i, j): one, (n + i, n + j): one}
                gens.append(self.theta(entries, 0, f"Theta(A{i + 1}{j + 1})"))
        for i in range(n):
            for j in range(n):
                entries = {(i, n + j): one, (n + i, j): one}
                gens.append(self.theta(entries, 1, f"Theta(B{i + 1}{j + 1})"))
        return gens

    # Psi

    def psi_tau(self) -> EndoMatrix:
        """P in the first slot: e_j -> i e_n+j and e_n+j -> -i e_j."""
        n = self.n
        rows: Dict[int, Dict[int, FieldElem]] = {}
        for a, digits in enumerate(self.digits):
            b = digits[0]
            if b < n:
                image, value = b + n, IMAG
            else:
                image, value = b - n, -IMAG
            rows.setdefault(self.index((image,) + digits[1:]), {})[a] = value
        return EndoMatrix(self.dim, rows, 1, "Psi(tau)")

    def psi_sigma(self, i: int) -> EndoMatrix:
        """Swap slots i and i+1 with sign (-1)^(beta_i beta_i+1)."""
        if not 1 <= i < self.k:
            raise IndexRangeError(f"sigma_{i} needs 1 <= i < {self.k}")
        rows: Dict[int, Dict[int, FieldElem]] = {}
        for a, digits in enumerate(self.digits):
            swapped = list(digits)
            swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
            odd = self.parity(digits[i - 1]) and self.parity(digits[i])
            value = FieldElem.rational(-1 if odd else 1)
            rows.setdefault(self.index(swapped), {})[a] = value
        return EndoMatrix(self.dim, rows, 0, f"Psi(sigma{i})")

    def psi_gens(self) -> Tuple[EndoMatrix, List[EndoMatrix]]:
        return self.psi_tau(), [self.psi_sigma(i) for i in range(1, self.k)]

    def psi_tau_i(self, i: int) -> EndoMatrix:
        """Psi(tau_i) = Psi(sigma_i-1) Psi(tau_i-1) Psi(sigma_i-1)."""
        if not 1 <= i <= self.k:
            raise IndexRangeError(f"tau_{i} needs 1 <= i <= {self.k}")
        if i not in self._psi_taus:
            if i == 1:
                matrix = self.psi_tau()
            else:
                s = self.psi_sigma(i - 1)
                matrix = s @ self.psi_tau_i(i - 1) @ s
            matrix.label = f"Psi(tau{i})"
            self._psi_taus[i] = matrix
        return self._psi_taus[i]

    def psi_perm(self, w: Perm) -> EndoMatrix:
        """Psi(sigma_w) along the lexicographically smallest reduced word."""
        if w not in self._psi_perms:
            matrix = EndoMatrix.identity(self.dim)
            for j in sergeev_algebra.reduced_word(w):
                matrix = matrix @ self.psi_sigma(j)
            self._psi_perms[w] = matrix
        return self._psi_perms[w]

    def psi_xi(self, subset: Tuple[int, ...]) -> EndoMatrix:
        if subset not in self._psi_xis:
            matrix = EndoMatrix.identity(self.dim)
            for i in subset:
                matrix = matrix @ self.psi_tau_i(i)
            self._psi_xis[subset] = matrix
        return self._psi_xis[subset]

    def act_bk(self, x: BkElem) -> EndoMatrix:
        """Psi extended linearly along the normal form xi_I sigma_w."""
        if x.k != self.k:
            raise SizeMismatchError(f"B_{x.k} does not act on a {self.k}-fold tensor")
        total = EndoMatrix(self.dim, {}, x.degree)
        for (subset, w), coeff in x.terms.items():
            total = total + (self.psi_xi(subset) @ self.psi_perm(w)).scale(coeff)
        total.degree = x.degree
        return total

    # Diagonal action and eigenspaces

    def diag(self, x: Sequence) -> EndoMatrix:
        if len(x) != self.n:
            raise SizeMismatchError(f"point of length {len(x)}, expected {self.n}")
        point = [FieldElem.coerce(v) for v in x]
        rows = {}
        for a, digits in enumerate(self.digits):
            value = FieldElem.one()
            for b in digits:
                value = value * point[b % self.n]
            if value:
                rows[a] = {a: value}
        return EndoMatrix(self.dim, rows, 0, "diag")

    def zeta(self, i: int) -> EndoMatrix:
        matrix = self.act_bk(sergeev_algebra.zeta(i, self.k))
        matrix.label = f"Psi(zeta{i})"
        return matrix

    def eigenspaces(self) -> Dict[Eps, Subspace]:
        """W^eps = intersection of ker(Psi(zeta_i) - (-1)^eps_i), solved per parity."""
        if self._eigenspaces is not None:
            return self._eigenspaces
        r = self.k // 2
        if r == 0:
            self._eigenspaces = {(): Subspace.whole(self.dim, self.vector_grading)}
            return self._eigenspaces
        zetas = [self.zeta(i) for i in range(1, r + 1)]
        blocks = [
            [a for a in range(self.dim) if self.grading[a] == parity]
            for parity in (0, 1)
        ]
        result: Dict[Eps, Subspace] = {}
        for eps in itertools.product((0, 1), repeat=r):
            space = Subspace(self.dim, self.vector_grading)
            for block in blocks:
                column_of = {a: j for j, a in enumerate(block)}
                equations = {}
                for z, bit in zip(zetas, eps):
                    eigenvalue = FieldElem.rational(-1 if bit else 1)
                    for a in block:
                        row = {column_of[c]: v for c, v in z.rows.get(a, {}).items()}
                        j = column_of[a]
                        row[j] = row.get(j, FieldElem.zero()) - eigenvalue
                        row = {col: v for col, v in row.items() if v}
                        if row:
                            equations[len(equations)] = row
                basis, free = linalg.nullspace(equations, len(block))
                for vector, pivot in zip(basis, free):
                    space.builder.adopt(
                        block[pivot], {block[j]: v for j, v in vector.items()}
                    )
            result[eps] = space
        logger.info(
            f"W for n={self.n} k={self.k}: {len(result)} eigenspaces of dims "
            f"{sorted({s.dim for s in result.values()})}"
        )
        self._eigenspaces = result
        return result


@lru_cache(maxsize=8)
def tensor_space(n: int, k: int) -> TensorSpace:
    return TensorSpace(n, k)


def theta_gens(n: int, k: int) -> List[EndoMatrix]:
    return tensor_space(n, k).theta_gens()


def psi_gens(n: int, k: int) -> Tuple[EndoMatrix, List[EndoMatrix]]:
    return tensor_space(n, k).psi_gens()


def act_bk(x: BkElem, n: int) -> EndoMatrix:
    return tensor_space(n, x.k).act_bk(x)


def diag_action(x: Sequence, k: int) -> EndoMatrix:
    return tensor_space(len(x), k).diag(x)


def zeta_eigenspaces(n: int, k: int) -> Dict[Eps, Subspace]:
    return tensor_space(n, k).eigenspaces()


def prime_points(n: int, count: int) -> List[List[int]]:
    """count points of length n with consecutive primes as coordinates."""
    return [[int(prime(i * n + j + 1)) for j in range(n)] for i in range(count)]


# Verification


def _restricted_grading(s: Subspace) -> List[int]:
    return [degree or 0 for degree in s.degrees]


def _dim_within(gens: Sequence[EndoMatrix], within: Subspace, size: int) -> int:
    try:
        return closure_dim_within(gens, within, size)
    except NotInvariantError as e:
        logger.warning(f"closure skipped: {e}")
        return -1


def _all_supercommute(left: Sequence[EndoMatrix], right: Sequence[EndoMatrix]):
    return all(g.supercommutes(h) for g in left for h in right)


def verify_duality(n: int, k: int) -> List[CheckResult]:
    """Mutual supercentralizers on W, and on each W^eps with the gamma images."""
    space = tensor_space(n, k)
    size = space.dim
    thetas = space.theta_gens()
    tau, sigmas = space.psi_gens()
    psis = [tau, *sigmas]
    checks = [
        make_check(
            "theta-degrees",
            k,
            all(g.actual_degree(space.grading) == g.degree for g in thetas),
            n=n,
        ),
        make_check(
            "psi-degrees",
            k,
            all(g.actual_degree(space.grading) == g.degree for g in psis),
            n=n,
        ),
        make_check("theta-psi-supercommute", k, _all_supercommute(thetas, psis), n=n),
    ]

    s_theta = supercentralizer(thetas, space.grading)
    psi_dim = _dim_within(psis, s_theta, size)
    checks.append(
        make_check(
            "supercentralizer(theta)=closure(psi)",
            k,
            psi_dim == s_theta.dim,
            f"dim={s_theta.dim} closure={psi_dim}",
            n=n,
        )
    )
    s_psi = supercentralizer(psis, space.grading)
    theta_dim = _dim_within(thetas, s_psi, size)
    checks.append(
        make_check(
            "supercentralizer(psi)=closure(theta)",
            k,
            theta_dim == s_psi.dim,
            f"dim={s_psi.dim} closure={theta_dim}",
            n=n,
        )
    )

    gammas = [space.act_bk(sergeev_algebra.theta_gamma(j, k)) for j in range(1, k)]
    for eps, w_eps in space.eigenspaces().items():
        checks.extend(
            _verify_on_eigenspace(n, k, eps, w_eps, thetas, gammas, space, theta_dim)
        )
    return checks


def _verify_on_eigenspace(
    n: int,
    k: int,
    eps: Eps,
    w_eps: Subspace,
    thetas: List[EndoMatrix],
    gammas: List[EndoMatrix],
    space: TensorSpace,
    theta_dim: int,
) -> List[CheckResult]:
    grading = _restricted_grading(w_eps)
    size = w_eps.dim
    theta_r = [restrict(g, w_eps) for g in thetas]
    gamma_r = [restrict(g, w_eps) for g in gammas]
    checks = [
        make_check(
            "eps-supercommute", k, _all_supercommute(theta_r, gamma_r), n=n, eps=eps
        )
    ]
    s_theta = supercentralizer(theta_r, grading)
    s_gamma = supercentralizer(gamma_r, grading)
    if k % 2 == 0:
        gamma_dim = _dim_within(gamma_r, s_theta, size)
        checks.append(
            make_check(
                "eps-supercentralizer(theta)=closure(gamma)",
                k,
                gamma_dim == s_theta.dim,
                f"dim={s_theta.dim} closure={gamma_dim}",
                n=n,
                eps=eps,
            )
        )
        restricted_theta_dim = _dim_within(theta_r, s_gamma, size)
        checks.append(
            make_check(
                "eps-supercentralizer(gamma)=closure(theta)",
                k,
                restricted_theta_dim == s_gamma.dim,
                f"dim={s_gamma.dim} closure={restricted_theta_dim}",
                n=n,
                eps=eps,
            )
        )
    else:
        unit = restrict(space.psi_tau_i(k), w_eps)
        identity = EndoMatrix.identity(size)
        odd_unit = (
            unit.actual_degree(grading) == 1
            and unit @ unit == identity
            and _all_supercommute([unit], gamma_r + theta_r)
        )
        checks.append(make_check("eps-odd-unit", k, odd_unit, n=n, eps=eps))
        gamma_dim = _dim_within(gamma_r, s_theta, size)
        doubled_gamma = _dim_within(gamma_r + [unit], s_theta, size)
        checks.append(
            make_check(
                "eps-supercentralizer(theta)=C1*closure(gamma)",
                k,
                s_theta.dim == doubled_gamma == 2 * gamma_dim,
                f"dim={s_theta.dim} closure={doubled_gamma} half={gamma_dim}",
                n=n,
                eps=eps,
            )
        )
        restricted_theta_dim = _dim_within(theta_r, s_gamma, size)
        doubled_theta = _dim_within(theta_r + [unit], s_gamma, size)
        checks.append(
            make_check(
                "eps-supercentralizer(gamma)=C1*closure(theta)",
                k,
                s_gamma.dim == doubled_theta == 2 * restricted_theta_dim,
                f"dim={s_gamma.dim} closure={doubled_theta} "
                f"half={restricted_theta_dim}",
                n=n,
                eps=eps,
            )
        )
    checks.append(
        make_check(
            "eps-restriction-injective",
            k,
            restricted_theta_dim == theta_dim,
            f"restricted={restricted_theta_dim} full={theta_dim}",
            n=n,
            eps=eps,
        )
    )
    return checks


def _odd_scale(k: int) -> FieldElem:
    return FieldElem.sqrt2() if k % 2 else FieldElem.one()


def schur_identity_check(
    n: int, k: int, points: Sequence[Sequence[int]]
) -> List[CheckResult]:
    """
    Traces of gamma^mu o diag(x) on each W^eps against p_mu and against Q_nu.

    Non-odd cycle types must give zero; supertraces flip with the parity of
    eps for even k and vanish for odd k.
    """
    space = tensor_space(n, k)
    diags = [space.diag(x) for x in points]
    phi = qfunctions.phi_table(k)
    eigenspaces = space.eigenspaces()
    base_eps = tuple(0 for _ in range(k // 2))
    checks = []
    for mu in enumerate_partitions(k):
        gamma = space.act_bk(sergeev_algebra.gamma_mu(mu, k))
        operators = [gamma @ d for d in diags]
        if not mu.is_odd:
            for eps, w_eps in eigenspaces.items():
                vanishing = all(not trace_on(w_eps, op) for op in operators)
                checks.append(
                    make_check(f"class-vanishing{mu}", k, vanishing, n=n, eps=eps)
                )
            continue
        power = FieldElem.sqrt2_power(mu.length + k % 2)
        expected = [power * qfunctions.power_sum_at(mu, x) for x in points]
        expansion = qfunctions.character_expansion(phi, mu)
        predicted = [
            _odd_scale(k) * qfunctions.evaluate(expansion, x) for x in points
        ]
        base_super = [supertrace_on(eigenspaces[base_eps], op) for op in operators]
        for eps, w_eps in eigenspaces.items():
            traces = [trace_on(w_eps, op) for op in operators]
            checks.append(
                make_check(
                    f"schur-trace{mu}",
                    k,
                    traces == expected,
                    f"points={len(points)} first={traces[0] if traces else None}",
                    n=n,
                    eps=eps,
                )
            )
            checks.append(
                make_check(
                    f"schur-expansion{mu}", k, traces == predicted, n=n, eps=eps
                )
            )
            supers = [supertrace_on(w_eps, op) for op in operators]
            if k % 2:
                shifted = all(not value for value in supers)
            else:
                sign = -1 if sum(eps) % 2 else 1
                shifted = supers == [value * sign for value in base_super]
            checks.append(
                make_check(f"supertrace-shift{mu}", k, shifted, n=n, eps=eps)
            )
    return checks


def sergeev_character_check(
    n: int, k: int, points: Sequence[Sequence[int]]
) -> List[CheckResult]:
    """Traces over W of sigma^(lam, mu) o diag(x) against 2^l p_mu and psi."""
    space = tensor_space(n, k)
    diags = [space.diag(x) for x in points]
    psi = qfunctions.psi_table(k)
    checks = []
    for mu in odd_partitions(k):
        element = space.act_bk(sergeev_algebra.sigma_class(mu, Partition(()), k))
        traces = [(element @ d).trace() for d in diags]
        scale = FieldElem.rational(2**mu.length)
        expected = [scale * qfunctions.power_sum_at(mu, x) for x in points]
        expansion = qfunctions.character_expansion(psi, mu)
        predicted = [qfunctions.evaluate(expansion, x) for x in points]
        checks.append(make_check(f"sergeev-trace{mu}", k, traces == expected, n=n))
        checks.append(
            make_check(f"sergeev-expansion{mu}", k, traces == predicted, n=n)
        )
    classes = 0
    failures = []
    for size in range(k + 1):
        for lam in enumerate_partitions(size):
            for mu in enumerate_partitions(k - size):
                if lam.is_odd and not mu.parts:
                    continue
                classes += 1
                element = space.act_bk(sergeev_algebra.sigma_class(lam, mu, k))
                if any((element @ d).trace() for d in diags):
                    failures.append(f"{lam}{mu}")
    checks.append(
        make_check(
            "sergeev-vanishing",
            k,
            not failures,
            f"classes={classes} failures={','.join(failures) or 'none'}",
            n=n,
        )
    )
    return checks


def dim_u(nu: Partition, n: int) -> FieldElem:
    """(sqrt 2)^(d - l) Q_nu(1, ..., 1)."""
    nu_stats = stats(nu, nu.weight)
    value = qfunctions.evaluate(qfunctions.schur_q(nu), [1] * n)
    return FieldElem.sqrt2_power(nu_stats.d - nu_stats.length) * value


def multiplicity_accounting(n: int, k: int) -> List[CheckResult]:
    """Character accounting of W^eps and of W against predicted dim U_nu."""
    space = tensor_space(n, k)
    phi = qfunctions.phi_table(k)
    psi = qfunctions.psi_table(k)
    half = FieldElem.rational(1, 2)
    minus = set(dp_minus(k))
    dims = {nu: dim_u(nu, n) for nu in strict_partitions(k)}
    checks = []
    for nu, value in dims.items():
        checks.append(
            make_check(
                f"dimU-occurrence{nu}",
                k,
                (not value) == (nu.length > n),
                f"dimU={value}",
                n=n,
            )
        )
    eigenspaces = space.eigenspaces()
    for mu in odd_partitions(k):
        gamma = space.act_bk(sergeev_algebra.gamma_mu(mu, k))
        predicted = FieldElem.zero()
        for nu, value in dims.items():
            weight = half if k % 2 == 0 and nu in minus else FieldElem.one()
            predicted = predicted + weight * value * phi.value(nu, mu)
        for eps, w_eps in eigenspaces.items():
            trace = trace_on(w_eps, gamma)
            checks.append(
                make_check(
                    f"multiplicity{mu}",
                    k,
                    trace == predicted,
                    f"trace={trace} predicted={predicted}",
                    n=n,
                    eps=eps,
                )
            )
        element = space.act_bk(sergeev_algebra.sigma_class(mu, Partition(()), k))
        predicted_w = FieldElem.zero()
        for nu, value in dims.items():
            weight = half if nu.length % 2 else FieldElem.one()
            predicted_w = predicted_w + weight * value * psi.value(nu, mu)
        trace_w = element.trace()
        checks.append(
            make_check(
                f"sergeev-multiplicity{mu}",
                k,
                trace_w == predicted_w,
                f"trace={trace_w} predicted={predicted_w}",
                n=n,
            )
        )
    return checks


def property_checks(
    n: int, k: int, rng: random.Random, pairs: int, point: Sequence[int]
) -> List[CheckResult]:
    """Homomorphism, commutation and eigenspace properties of the actions."""
    space = tensor_space(n, k)
    thetas = space.theta_gens()
    tau, sigmas = space.psi_gens()
    gammas = [space.act_bk(sergeev_algebra.theta_gamma(j, k)) for j in range(1, k)]
    checks = []

    homomorphism_failures = 0
    degree_failures = 0
    for _ in range(pairs):
        x = sergeev_algebra.random_basis_element(k, rng)
        y = sergeev_algebra.random_basis_element(k, rng)
        image = space.act_bk(x)
        if space.act_bk(sergeev_algebra.bk_mul(x, y)) != image @ space.act_bk(y):
            homomorphism_failures += 1
        if image.actual_degree(space.grading) != x.degree:
            degree_failures += 1
    checks.append(
        make_check(
            "act-bk-homomorphism",
            k,
            homomorphism_failures == 0,
            f"pairs={pairs} failures={homomorphism_failures}",
            n=n,
        )
    )
    checks.append(make_check("act-bk-degree", k, degree_failures == 0, n=n))

    d = space.diag(point)
    commutes = all(d @ g == g @ d for g in [tau, *sigmas, *gammas])
    checks.append(make_check("diag-commutes", k, commutes, n=n))

    identity = EndoMatrix.identity(space.dim)
    zetas = [space.zeta(i) for i in range(1, k // 2 + 1)]
    involutions = all(z @ z == identity for z in zetas) and all(
        a @ b == b @ a for a, b in itertools.combinations(zetas, 2)
    )
    checks.append(make_check("zeta-involutions", k, involutions, n=n))
    zeta_commutes = all(z @ g == g @ z for z in zetas for g in thetas + gammas)
    checks.append(make_check("zeta-commutes", k, zeta_commutes, n=n))

    eigenspaces = space.eigenspaces()
    expected_dim = space.dim // 2 ** (k // 2)
    dims = [s.dim for s in eigenspaces.values()]
    checks.append(
        make_check("eigenspace-sum", k, sum(dims) == space.dim, f"dims={dims}", n=n)
    )
    checks.append(
        make_check(
            "eigenspace-dims",
            k,
            all(value == expected_dim for value in dims),
            f"expected={expected_dim}",
            n=n,
        )
    )
    checks.append(
        make_check(
            "eigenspace-graded",
            k,
            all(s.is_graded for s in eigenspaces.values()),
            n=n,
        )
    )
    intertwining = True
    for eps, w_eps in eigenspaces.items():
        for j in range(1, k // 2 + 1):
            target = list(eps)
            target[j - 1] ^= 1
            shift = space.psi_tau_i(2 * j - 1)
            image_space = eigenspaces[tuple(target)]
            intertwining &= all(
                image_space.contains(shift.apply(row)) for row in w_eps.rows
            )
    checks.append(make_check("eigenspace-intertwining", k, intertwining, n=n))

    odd = thetas[n * n]
    for eps, w_eps in eigenspaces.items():
        value = trace_on(w_eps, odd)
        checks.append(
            make_check("odd-trace-zero", k, not value, f"trace={value}", n=n, eps=eps)
        )
    return checks
