"""
Sergeev algebra B_k, Clifford algebra C_k and the spin algebra A_k.

B_k is modelled in the normal form sum c * xi_I * sigma_w, I a subset of
{1..k} and w a permutation of {1..k} in one-line notation (w[j-1] = w(j)).
Products follow sigma_w xi_j sigma_w^-1 = xi_w(j), the Clifford relations
xi_i^2 = 1 and xi_i xi_j = -xi_j xi_i, and sigma_w sigma_v = sigma_(w o v).
C_k is the span of the elements with trivial permutation, and A_k is only
ever seen through its image under gamma_j -> (xi_j - xi_j+1) sigma_j / sqrt 2.

The module also builds the simple Clifford module X_k = C_k e and checks the
defining presentations inside the model.
"""

import bisect
import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from spinduality.exceptions import (
    IndexRangeError,
    SizeMismatchError,
    WeightMismatchError,
)
from spinduality.schemas.report_schemas import CheckResult, make_check
from spinduality.services import linalg
from spinduality.services.exactfield import IMAG, FieldElem
from spinduality.services.partitions import (
    Partition,
    block_offsets,
    odd_partitions,
    require_odd,
)

logger = logging.getLogger(__name__)

Subset = Tuple[int, ...]
Perm = Tuple[int, ...]
Term = Tuple[Subset, Perm]


# Permutations


def identity_perm(k: int) -> Perm:
    return tuple(range(1, k + 1))


def transposition(i: int, k: int) -> Perm:
    """s_i = (i, i+1)."""
    if not 1 <= i < k:
        raise IndexRangeError(f"s_{i} needs 1 <= i < {k}")
    w = list(range(1, k + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose(w: Perm, v: Perm) -> Perm:
    """(w o v)(j) = w(v(j))."""
    return tuple(w[j - 1] for j in v)


def perm_inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for j, image in enumerate(w, start=1):
        inv[image - 1] = j
    return tuple(inv)


def perm_length(w: Perm) -> int:
    return sum(1 for a, b in itertools.combinations(w, 2) if a > b)


def reduced_word(w: Perm) -> Tuple[int, ...]:
    """Lexicographically smallest reduced word: w = s_j1 o s_j2 o ..."""
    word = []
    current = tuple(w)
    while True:
        inv = perm_inverse(current)
        descent = next(
            (j for j in range(1, len(current)) if inv[j - 1] > inv[j]), None
        )
        if descent is None:
            return tuple(word)
        word.append(descent)
        current = compose(transposition(descent, len(current)), current)


def all_perms(k: int) -> List[Perm]:
    return [tuple(p) for p in itertools.permutations(range(1, k + 1))]


def subsets(k: int) -> List[Subset]:
    """All subsets of {1..k} by (cardinality, lexicographic)."""
    return [
        combo
        for size in range(k + 1)
        for combo in itertools.combinations(range(1, k + 1), size)
    ]


# Elements


def _clifford_sign(subset: Sequence[int], j: int) -> int:
    """Sign from moving xi_j left past the factors of xi_subset larger than j."""
    return -1 if sum(1 for i in subset if i > j) % 2 else 1


def _xi_times(subset: Subset, letters: Sequence[int]) -> Tuple[int, Subset]:
    """xi_subset * xi_l1 * xi_l2 * ... = sign * xi_result."""
    current = list(subset)
    sign = 1
    for j in letters:
        sign *= _clifford_sign(current, j)
        position = bisect.bisect_left(current, j)
        if position < len(current) and current[position] == j:
            del current[position]
        else:
            current.insert(position, j)
    return sign, tuple(current)


def _format_subset(subset: Subset) -> str:
    return "xi{" + ",".join(str(i) for i in subset) + "}"


class BkElem:
    """An element of B_k as a map (I, w) -> coefficient, zeros dropped"""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Optional[Mapping[Term, object]] = None):
        self.k = k
        self.terms: Dict[Term, FieldElem] = {}
        for key, value in (terms or {}).items():
            value = FieldElem.coerce(value)
            if value:
                self.terms[key] = value

    @classmethod
    def unit(cls, k: int) -> "BkElem":
        return cls(k, {((), identity_perm(k)): FieldElem.one()})

    @classmethod
    def basis(
        cls, k: int, subset: Sequence[int] = (), perm: Optional[Perm] = None, coeff=1
    ) -> "BkElem":
        subset = tuple(sorted(subset))
        if any(not 1 <= i <= k for i in subset) or len(set(subset)) != len(subset):
            raise IndexRangeError(f"{subset} is not a subset of 1..{k}")
        perm = identity_perm(k) if perm is None else tuple(perm)
        if sorted(perm) != list(range(1, k + 1)):
            raise IndexRangeError(f"{perm} is not a permutation of 1..{k}")
        return cls(k, {(subset, perm): coeff})

    def _check(self, other: "BkElem") -> None:
        if self.k != other.k:
            raise SizeMismatchError(f"B_{self.k} and B_{other.k} do not mix")

    def __add__(self, other: "BkElem") -> "BkElem":
        self._check(other)
        terms = dict(self.terms)
        for key, value in other.terms.items():
            terms[key] = terms[key] + value if key in terms else value
        return BkElem(self.k, terms)

    def __neg__(self) -> "BkElem":
        return BkElem(self.k, {key: -value for key, value in self.terms.items()})

    def __sub__(self, other: "BkElem") -> "BkElem":
        return self + (-other)

    def scale(self, c) -> "BkElem":
        c = FieldElem.coerce(c)
        return BkElem(self.k, {key: c * value for key, value in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, BkElem):
            return bk_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent: int) -> "BkElem":
        result = BkElem.unit(self.k)
        for _ in range(exponent):
            result = bk_mul(result, self)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, BkElem):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, subset: Sequence[int] = (), perm: Optional[Perm] = None):
        perm = identity_perm(self.k) if perm is None else tuple(perm)
        return self.terms.get((tuple(subset), perm), FieldElem.zero())

    @property
    def degree(self) -> Optional[int]:
        """Z2-degree |I| mod 2, or None when the element is not homogeneous."""
        degrees = {len(subset) % 2 for subset, _ in self.terms}
        if len(degrees) > 1:
            return None
        return degrees.pop() if degrees else 0

    @property
    def is_clifford(self) -> bool:
        identity = identity_perm(self.k)
        return all(perm == identity for _, perm in self.terms)

    def clifford_coords(self) -> Dict[Subset, FieldElem]:
        return {subset: value for (subset, _), value in self.terms.items()}

    def sorted_terms(self) -> List[Tuple[Term, FieldElem]]:
        return sorted(
            self.terms.items(),
            key=lambda item: (len(item[0][0]), item[0][0], item[0][1]),
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (subset, perm), value in self.sorted_terms():
            word = "s(" + " ".join(str(p) for p in perm) + ")"
            pieces.append(f"({value}) * {_format_subset(subset)} * {word}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"BkElem(k={self.k}: {self})"


CkElem = BkElem


def bk_mul(x: BkElem, y: BkElem) -> BkElem:
    """(xi_I s_w)(xi_J s_v) = xi_I xi_w(j1) xi_w(j2) ... s_(w o v), j1 < j2 < ..."""
    if x.k != y.k:
        raise SizeMismatchError(f"cannot multiply B_{x.k} by B_{y.k}")
    terms: Dict[Term, FieldElem] = {}
    for (subset_i, w), a in x.terms.items():
        for (subset_j, v), b in y.terms.items():
            sign, subset = _xi_times(subset_i, [w[j - 1] for j in subset_j])
            key = (subset, compose(w, v))
            value = a * b if sign > 0 else -(a * b)
            current = terms.get(key)
            terms[key] = value if current is None else current + value
    return BkElem(x.k, terms)


def product(factors: Sequence[BkElem], k: int) -> BkElem:
    result = BkElem.unit(k)
    for factor in factors:
        result = bk_mul(result, factor)
    return result


def xi(j: int, k: int) -> CkElem:
    return BkElem.basis(k, (j,))


def sigma(i: int, k: int) -> BkElem:
    return BkElem.basis(k, (), transposition(i, k))


@dataclass
class Generators:
    """tau, sigma_1..sigma_k-1 and tau_1..tau_k of B_k"""

    tau: BkElem
    sigmas: List[BkElem]
    taus: List[BkElem]


def bk_generators(k: int) -> Generators:
    """tau_j = sigma_j-1 ... sigma_1 tau sigma_1 ... sigma_j-1, built by conjugation."""
    if k < 1:
        raise IndexRangeError(f"B_k needs k >= 1, got {k}")
    tau = xi(1, k)
    sigmas = [sigma(i, k) for i in range(1, k)]
    taus = [tau]
    for s in sigmas:
        taus.append(bk_mul(bk_mul(s, taus[-1]), s))
    return Generators(tau, sigmas, taus)


def theta_gamma(j: int, k: int) -> BkElem:
    """Image of gamma_j: (xi_j - xi_j+1) sigma_j / sqrt 2."""
    if not 1 <= j < k:
        raise IndexRangeError(f"gamma_{j} needs 1 <= j < {k}")
    s_j = transposition(j, k)
    half = FieldElem.sqrt2_power(-1)
    return BkElem(k, {((j,), s_j): half, ((j + 1,), s_j): -half})


def gamma_word(word: Sequence[int], k: int) -> BkElem:
    return product([theta_gamma(j, k) for j in word], k)


def gamma_mu(mu: Partition, k: int) -> BkElem:
    """gamma^mu = (gamma_1 ... gamma_mu1-1)(gamma_mu1+1 ... gamma_mu1+mu2-1) ..."""
    if mu.weight != k:
        raise WeightMismatchError(f"{mu} is not a partition of {k}")
    word: List[int] = []
    for offset, part in zip(block_offsets(mu.parts), mu.parts):
        word.extend(range(offset + 1, offset + part))
    return gamma_word(word, k)


def sigma_class(lam: Partition, mu: Partition, k: int) -> BkElem:
    """sigma^(lam, mu) = x_1 x_2 ... y_1 y_2 ..., each y_i ending in a tau."""
    if lam.weight + mu.weight != k:
        raise WeightMismatchError(
            f"|{lam}| + |{mu}| = {lam.weight + mu.weight}, expected {k}"
        )
    taus = bk_generators(k).taus if k else []
    factors: List[BkElem] = []
    for offset, part in zip(block_offsets(lam.parts), lam.parts):
        factors.extend(sigma(i, k) for i in range(offset + 1, offset + part))
    base = lam.weight
    for offset, part in zip(block_offsets(mu.parts), mu.parts):
        start = base + offset
        factors.extend(sigma(i, k) for i in range(start + 1, start + part))
        factors.append(taus[start + part - 1])
    return product(factors, k)


def zeta(i: int, k: int) -> CkElem:
    """zeta_i = sqrt(-1) xi_2i-1 xi_2i."""
    if not 1 <= i <= k // 2:
        raise IndexRangeError(f"zeta_{i} needs 1 <= i <= {k // 2}")
    return BkElem(k, {((2 * i - 1, 2 * i), identity_perm(k)): IMAG})


def clifford_element(k: int, coords: Mapping[Subset, object]) -> CkElem:
    identity = identity_perm(k)
    return BkElem(k, {(tuple(sorted(s)), identity): c for s, c in coords.items()})


# Spans


def subalgebra_dim(generators: Sequence[BkElem]) -> int:
    """Dimension of the unital subalgebra generated, by span closure."""
    if not generators:
        return 1
    k = generators[0].k
    builder = linalg.SpanBuilder()
    pending = [BkElem.unit(k)]
    builder.add_labelled(pending[0].terms)
    while pending:
        element = pending.pop()
        for generator in generators:
            candidate = bk_mul(element, generator)
            row = builder.add_labelled(candidate.terms)
            if row is not None:
                pending.append(candidate)
    logger.debug(f"subalgebra of B_{k} on {len(generators)} generators: {builder.dim}")
    return builder.dim


def theta_isomorphism_check(k: int) -> CheckResult:
    """
    The products xi_I * gamma_w are independent, so dim = 2^k k!.

    Every gamma_w along a reduced word only involves sigma_w, so the rank
    test splits into one 2^k-vector block per permutation.
    """
    expected = 2**k * len(all_perms(k))
    total = 0
    clifford = [BkElem.basis(k, subset) for subset in subsets(k)]
    for w in all_perms(k):
        image = gamma_word(reduced_word(w), k)
        if any(perm != w for _, perm in image.terms):
            return make_check("theta-isomorphism", k, False, f"gamma_w off s_w at {w}")
        total += linalg.rank(bk_mul(c, image).terms for c in clifford)
    logger.info(f"theta image for k={k}: dim {total}")
    return make_check(
        "theta-isomorphism", k, total == expected, f"dim={total} expected={expected}"
    )


def gamma_subalgebra_check(k: int) -> CheckResult:
    """The gamma images generate a copy of A_k, of dimension k!."""
    dim = subalgebra_dim([theta_gamma(j, k) for j in range(1, k)])
    expected = len(all_perms(k))
    return make_check(
        "gamma-subalgebra-dim", k, dim == expected, f"dim={dim} expected={expected}"
    )


# Presentations


def _relation(name: str, k: int, lhs: BkElem, rhs: BkElem) -> CheckResult:
    return make_check(name, k, lhs == rhs)


def check_presentation(k: int) -> List[CheckResult]:
    """Relations of tau, sigma_i, tau_i and the gamma images inside B_k."""
    gens = bk_generators(k)
    one = BkElem.unit(k)
    minus_one = -one
    tau, sigmas, taus = gens.tau, gens.sigmas, gens.taus
    checks = [_relation("tau^2=1", k, tau * tau, one)]
    for i, s in enumerate(sigmas, start=1):
        checks.append(_relation(f"sigma{i}^2=1", k, s * s, one))
        if i < k - 1:
            checks.append(
                _relation(f"(sigma{i}*sigma{i + 1})^3=1", k, (s * sigmas[i]) ** 3, one)
            )
        for j in range(i + 2, k):
            checks.append(
                _relation(f"(sigma{i}*sigma{j})^2=1", k, (s * sigmas[j - 1]) ** 2, one)
            )
        if i >= 2:
            checks.append(_relation(f"(tau*sigma{i})^2=1", k, (tau * s) ** 2, one))
    if sigmas:
        checks.append(
            _relation("(tau*sigma1)^4=-1", k, (tau * sigmas[0]) ** 4, minus_one)
        )
    for i, t in enumerate(taus, start=1):
        checks.append(_relation(f"tau{i}=xi{i}", k, t, xi(i, k)))
        checks.append(_relation(f"tau{i}^2=1", k, t * t, one))
        for j in range(i + 1, k + 1):
            checks.append(
                _relation(
                    f"tau{i}*tau{j}=-tau{j}*tau{i}",
                    k,
                    t * taus[j - 1],
                    -(taus[j - 1] * t),
                )
            )
    gammas = [theta_gamma(j, k) for j in range(1, k)]
    for i, g in enumerate(gammas, start=1):
        checks.append(_relation(f"gamma{i}^2=-1", k, g * g, minus_one))
        if i < k - 1:
            checks.append(
                _relation(
                    f"(gamma{i}*gamma{i + 1})^3=-1", k, (g * gammas[i]) ** 3, minus_one
                )
            )
        for j in range(i + 2, k):
            checks.append(
                _relation(
                    f"(gamma{i}*gamma{j})^2=-1", k, (g * gammas[j - 1]) ** 2, minus_one
                )
            )
        for j, t in enumerate(taus, start=1):
            checks.append(
                _relation(f"tau{j}*gamma{i}=-gamma{i}*tau{j}", k, t * g, -(g * t))
            )
    logger.info(f"presentation of B_{k}: {len(checks)} relations checked")
    return checks


# Clifford module


@dataclass
class XkModule:
    """The simple C_k-module X_k = C_k e with basis xi^eps (and xi^eps xi_k)"""

    k: int
    r: int
    basis: List[CkElem]
    degrees: List[int]
    xi_action: List[linalg.SparseMatrix]
    z: Optional[linalg.SparseMatrix] = None
    _traces: Dict[Subset, FieldElem] = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def graded_dim(self) -> Tuple[int, int]:
        odd = sum(self.degrees)
        return (self.dim - odd, odd)

    def coordinates(self, element: CkElem) -> List[FieldElem]:
        solution = linalg.solve_in_span(
            [b.clifford_coords() for b in self.basis], element.clifford_coords()
        )
        if solution is None:
            raise ValueError(f"{element} does not lie in X_{self.k}")
        return solution

    def matrix_of(self, action) -> linalg.SparseMatrix:
        """Matrix of a linear map on X_k given on basis elements."""
        columns = {}
        for j, b in enumerate(self.basis):
            coords = self.coordinates(action(b))
            columns[j] = {i: c for i, c in enumerate(coords) if c}
        return linalg.transpose(columns)

    def subset_matrix(self, subset: Subset) -> linalg.SparseMatrix:
        matrix = _identity(self.dim)
        for i in subset:
            matrix = linalg.matmul(matrix, self.xi_action[i - 1])
        return matrix

    def subset_trace(self, subset: Subset) -> FieldElem:
        if subset not in self._traces:
            self._traces[subset] = _trace(self.subset_matrix(subset))
        return self._traces[subset]


def _identity(size: int) -> linalg.SparseMatrix:
    return {i: {i: FieldElem.one()} for i in range(size)}


def _trace(matrix: linalg.SparseMatrix) -> FieldElem:
    total = FieldElem.zero()
    for i, row in matrix.items():
        if i in row:
            total = total + row[i]
    return total


def idempotent_factor(i: int, k: int) -> CkElem:
    """e_i = (1 + sqrt(-1) xi_2i-1 xi_2i) / sqrt 2."""
    half = FieldElem.sqrt2_power(-1)
    return clifford_element(k, {(): half, (2 * i - 1, 2 * i): IMAG * half})


def xk_build(k: int) -> XkModule:
    if k < 1:
        raise IndexRangeError(f"X_k needs k >= 1, got {k}")
    r = k // 2
    factors = [idempotent_factor(i, k) for i in range(1, r + 1)]
    basis: List[CkElem] = []
    degrees: List[int] = []
    tails = [()] if k % 2 == 0 else [(), (k,)]
    for tail in tails:
        for eps in itertools.product((0, 1), repeat=r):
            parts = []
            for i, bit in enumerate(eps, start=1):
                if bit:
                    parts.append(xi(2 * i - 1, k))
                parts.append(factors[i - 1])
            parts.extend(xi(j, k) for j in tail)
            basis.append(product(parts, k))
            degrees.append((sum(eps) + len(tail)) % 2)
    module = XkModule(k, r, basis, degrees, [])
    module.xi_action = [
        module.matrix_of(lambda b, j=j: bk_mul(xi(j, k), b)) for j in range(1, k + 1)
    ]
    if k % 2:
        xi_k = xi(k, k)
        module.z = module.matrix_of(
            lambda b: _signed(bk_mul(b, xi_k), b.degree or 0)
        )
    logger.debug(f"built X_{k} of dimension {module.dim}")
    return module


def _signed(element: BkElem, degree: int) -> BkElem:
    return -element if degree else element


def xk_char(k: int, c: CkElem, module: Optional[XkModule] = None) -> FieldElem:
    """Trace of the left action of c on X_k."""
    module = module or xk_build(k)
    if not c.is_clifford:
        raise ValueError("xk_char() takes a Clifford element")
    total = FieldElem.zero()
    for subset, coeff in c.clifford_coords().items():
        total = total + coeff * module.subset_trace(subset)
    return total


def prop_trace(k: int, c: CkElem) -> FieldElem:
    """Closed form 2^floor((k+1)/2) * (coefficient of the empty word)."""
    return FieldElem.rational(2 ** ((k + 1) // 2)) * c.coefficient(())


def xi_product(mu: Partition) -> CkElem:
    """Xi: the block-embedded product of the (xi_j - xi_j+1) over the cycles of mu."""
    k = mu.weight
    factors = []
    for offset, part in zip(block_offsets(mu.parts), mu.parts):
        for j in range(offset + 1, offset + part):
            factors.append(xi(j, k) - xi(j + 1, k))
    return product(factors, k)


def xi_product_coeff(mu: Partition, module: Optional[XkModule] = None) -> FieldElem:
    require_odd(mu)
    k = mu.weight
    return xk_char(k, xi_product(mu), module)


def xi_product_expected(mu: Partition) -> FieldElem:
    k, length = mu.weight, mu.length
    sign = 1 if ((k - length) // 2) % 2 == 0 else -1
    return FieldElem.rational(sign * 2 ** ((k + 1) // 2))


def _matrices_equal(a: linalg.SparseMatrix, b: linalg.SparseMatrix) -> bool:
    clean_a = {i: row for i, row in a.items() if row}
    clean_b = {i: row for i, row in b.items() if row}
    return clean_a == clean_b


def _negate(a: linalg.SparseMatrix) -> linalg.SparseMatrix:
    return {i: {j: -v for j, v in row.items()} for i, row in a.items()}


def random_clifford(k: int, rng: random.Random, span: int = 3) -> CkElem:
    coords = {}
    for subset in subsets(k):
        if rng.random() < 0.5:
            coords[subset] = FieldElem(
                rng.randint(-span, span),
                rng.randint(-span, span),
                0,
                rng.randint(-1, 1),
            )
    return clifford_element(k, coords)


def check_clifford_module(
    k: int, rng: random.Random, samples: int, module: Optional[XkModule] = None
) -> List[CheckResult]:
    """Dimension, relations, idempotents, z_k and the trace formula on X_k."""
    module = module or xk_build(k)
    checks = []
    expected_dim = 2 ** ((k + 1) // 2)
    checks.append(
        make_check(
            "xk-dim",
            k,
            module.dim == expected_dim,
            f"dim={module.dim} expected={expected_dim}",
        )
    )
    even, odd = module.graded_dim
    checks.append(make_check("xk-graded-dim", k, even == odd, f"({even},{odd})"))
    one = _identity(module.dim)
    relations_ok = True
    for i in range(k):
        a = module.xi_action[i]
        relations_ok &= _matrices_equal(linalg.matmul(a, a), one)
        for j in range(i + 1, k):
            b = module.xi_action[j]
            relations_ok &= _matrices_equal(
                linalg.matmul(a, b), _negate(linalg.matmul(b, a))
            )
    checks.append(make_check("xk-clifford-relations", k, relations_ok))
    projections_ok = True
    for i in range(1, module.r + 1):
        e_i = idempotent_factor(i, k)
        projections_ok &= bk_mul(zeta(i, k), e_i) == e_i
    checks.append(make_check("xk-eigenprojections", k, projections_ok))
    if module.z is not None:
        z = module.z
        checks.append(
            make_check("zk^2=-1", k, _matrices_equal(linalg.matmul(z, z), _negate(one)))
        )
        supercommutes = all(
            _matrices_equal(linalg.matmul(z, a), _negate(linalg.matmul(a, z)))
            for a in module.xi_action
        )
        checks.append(make_check("zk-supercommutes", k, supercommutes))
    mismatches = 0
    for _ in range(samples):
        c = random_clifford(k, rng)
        if xk_char(k, c, module) != prop_trace(k, c):
            mismatches += 1
    checks.append(
        make_check(
            "xk-trace-formula",
            k,
            mismatches == 0,
            f"samples={samples} mismatches={mismatches}",
        )
    )
    return checks


def xi_product_checks(k: int, module: Optional[XkModule] = None) -> List[CheckResult]:
    module = module or xk_build(k)
    checks = []
    for mu in odd_partitions(k):
        value = xi_product_coeff(mu, module)
        expected = xi_product_expected(mu)
        checks.append(
            make_check(
                f"xi-product{mu}",
                k,
                value == expected,
                f"value={value} expected={expected}",
            )
        )
    return checks


# Randomized algebra laws


def random_basis_element(k: int, rng: random.Random) -> BkElem:
    subset = tuple(sorted(rng.sample(range(1, k + 1), rng.randint(0, k))))
    perm = tuple(rng.sample(range(1, k + 1), k))
    return BkElem(k, {(subset, perm): rng.choice((1, -1, 2))})


def random_homogeneous(k: int, rng: random.Random, degree: int, terms: int = 3):
    candidates = [s for s in subsets(k) if len(s) % 2 == degree]
    coords = {}
    for _ in range(terms):
        perm = tuple(rng.sample(range(1, k + 1), k))
        coords[(rng.choice(candidates), perm)] = rng.randint(1, 5)
    return BkElem(k, coords)


def check_algebra_laws(k: int, rng: random.Random, triples: int) -> List[CheckResult]:
    """Associativity on random basis triples and additivity of degrees."""
    failures = 0
    for _ in range(triples):
        x, y, z = (random_basis_element(k, rng) for _ in range(3))
        if bk_mul(bk_mul(x, y), z) != bk_mul(x, bk_mul(y, z)):
            failures += 1
    degree_failures = 0
    for _ in range(triples):
        a, b = rng.randint(0, 1), rng.randint(0, 1)
        x, y = random_homogeneous(k, rng, a), random_homogeneous(k, rng, b)
        xy = bk_mul(x, y)
        if xy and xy.degree != (a + b) % 2:
            degree_failures += 1
    return [
        make_check("bk-associativity", k, failures == 0, f"triples={triples}"),
        make_check("bk-degree-additivity", k, degree_failures == 0, f"pairs={triples}"),
    ]
