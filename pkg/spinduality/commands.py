"""
Sub-command implementations.

Each command turns a validated RunConfig into either rendered output
(chartable) or a VerificationReport. Checks are gathered in stages so
that --fail-fast can stop after the first stage that reports a failure.
"""

import logging
import random
from typing import Callable, Iterable, List, Tuple

from spinduality.config import Settings
from spinduality.exceptions import (
    NonHomogeneousError,
    NotInvariantError,
    ResourceLimitError,
    SingularMatrixError,
)
from spinduality.schemas.report_schemas import (
    CheckResult,
    CommandName,
    OutputFormat,
    RunConfig,
    VerificationReport,
    make_check,
)
from spinduality.services import qfunctions, sergeev_algebra, tensor_duality
from spinduality.services.partitions import (
    euler_identity_holds,
    odd_partitions,
    strict_partitions,
)
from spinduality.services.table_cache import TableCache

logger = logging.getLogger(__name__)

Stage = Tuple[str, Callable[[], Iterable[CheckResult]]]


def check_resources(n: int, k: int, settings: Settings, force: bool) -> None:
    """Refuse tensor spaces larger than settings.max_tensor_dim unless forced."""
    size = (2 * n) ** k
    if size > settings.max_tensor_dim and not force:
        raise ResourceLimitError(
            f"dim W = (2*{n})^{k} = {size} exceeds max_tensor_dim="
            f"{settings.max_tensor_dim}; pass --force to run anyway"
        )


def run_stages(
    command: CommandName, seed: int, stages: List[Stage], fail_fast: bool
) -> VerificationReport:
    report = VerificationReport(command=command, seed=seed)
    for name, stage in stages:
        try:
            checks = list(stage())
        except (NotInvariantError, NonHomogeneousError, SingularMatrixError) as e:
            logger.error(f"stage {name} aborted: {e}")
            checks = [make_check("stage-error", 0, False, f"{name}: {e}")]
        report.extend(checks)
        failed = sum(1 for check in checks if not check.passed)
        logger.info(f"stage {name}: {len(checks)} checks, {failed} failed")
        if failed and fail_fast:
            logger.warning(f"stopping after stage {name} (fail-fast)")
            break
    return report


def run_chartable(config: RunConfig) -> str:
    """Render the phi or psi table for config.k, through the cache."""
    cache = TableCache(config.cache_dir)
    table = cache.get_or_compute(config.k, config.kind, force=config.force)
    if config.output_format is OutputFormat.RECORDS:
        return "\n".join(table.records())
    return table.to_grid()


def run_presentation(config: RunConfig) -> VerificationReport:
    k = config.k
    stages: List[Stage] = [
        ("relations", lambda: sergeev_algebra.check_presentation(k)),
    ]
    if k >= 2:
        stages.append(
            (
                "isomorphism",
                lambda: [
                    sergeev_algebra.theta_isomorphism_check(k),
                    sergeev_algebra.gamma_subalgebra_check(k),
                ],
            )
        )
    return run_stages(CommandName.PRESENTATION, config.seed, stages, config.fail_fast)


def duality_stages(
    n: int, k: int, points: int, rng: random.Random, settings: Settings
) -> List[Stage]:
    coordinates = tensor_duality.prime_points(n, points)
    return [
        (f"duality n={n} k={k}", lambda: tensor_duality.verify_duality(n, k)),
        (
            f"schur identity n={n} k={k}",
            lambda: tensor_duality.schur_identity_check(n, k, coordinates),
        ),
        (
            f"multiplicities n={n} k={k}",
            lambda: tensor_duality.multiplicity_accounting(n, k),
        ),
        (
            f"sergeev characters n={n} k={k}",
            lambda: tensor_duality.sergeev_character_check(n, k, coordinates),
        ),
        (
            f"properties n={n} k={k}",
            lambda: tensor_duality.property_checks(
                n, k, rng, settings.homomorphism_pairs, coordinates[0]
            ),
        ),
    ]


def run_duality(config: RunConfig, settings: Settings) -> VerificationReport:
    check_resources(config.n, config.k, settings, config.force)
    rng = random.Random(config.seed)
    stages = duality_stages(config.n, config.k, config.points, rng, settings)
    return run_stages(CommandName.DUALITY, config.seed, stages, config.fail_fast)


def _upto(limit: int, kmax: int, start: int = 1) -> range:
    return range(start, min(limit, kmax) + 1)


def run_verify_all(config: RunConfig, settings: Settings) -> VerificationReport:
    """The acceptance sweep, k ranges capped by config.k and n by config.n."""
    kmax = config.k
    nmax = config.n
    rng = random.Random(config.seed)
    pairs = [(n, k) for n, k in settings.duality_pairs if n <= nmax and k <= kmax]
    for n, k in pairs:
        check_resources(n, k, settings, config.force)

    def partition_checks():
        ks = _upto(settings.partition_kmax, kmax)
        checks = [
            make_check(
                "strict-odd-equinumerous",
                k,
                len(strict_partitions(k)) == len(odd_partitions(k)),
                f"count={len(strict_partitions(k))}",
            )
            for k in ks
        ]
        if ks:
            checks.append(
                make_check("euler-identity", ks[-1], euler_identity_holds(ks[-1]))
            )
        return checks

    def table_stage():
        checks = [c for c in qfunctions.golden_checks() if c.k <= kmax]
        for k in _upto(settings.table_kmax, kmax):
            checks.extend(qfunctions.table_checks(k))
        for k in _upto(settings.bridge_kmax, kmax, start=2):
            checks.append(qfunctions.bridge_check(k))
        return checks

    def algebra_stage():
        checks = []
        for k in _upto(settings.presentation_kmax, kmax, start=2):
            checks.extend(sergeev_algebra.check_presentation(k))
        for k in _upto(settings.isomorphism_kmax, kmax, start=2):
            checks.append(sergeev_algebra.theta_isomorphism_check(k))
            checks.append(sergeev_algebra.gamma_subalgebra_check(k))
            checks.extend(
                sergeev_algebra.check_algebra_laws(
                    k, rng, settings.associativity_triples
                )
            )
        return checks

    def clifford_stage():
        checks = []
        for k in _upto(max(settings.clifford_kmax, settings.xi_kmax), kmax):
            module = sergeev_algebra.xk_build(k)
            if k <= settings.clifford_kmax:
                checks.extend(
                    sergeev_algebra.check_clifford_module(
                        k, rng, settings.clifford_samples, module
                    )
                )
            if k <= settings.xi_kmax:
                checks.extend(sergeev_algebra.xi_product_checks(k, module))
        return checks

    stages: List[Stage] = [
        ("partitions", partition_checks),
        ("tables", table_stage),
        ("algebra", algebra_stage),
        ("clifford", clifford_stage),
    ]
    for n, k in pairs:
        stages.extend(duality_stages(n, k, config.points, rng, settings))
    return run_stages(CommandName.VERIFY_ALL, config.seed, stages, config.fail_fast)
