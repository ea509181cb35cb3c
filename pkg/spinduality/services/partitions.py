"""
Partitions and their sign statistics.

Enumerates P_k, the strict partitions DP_k (split into DP_k^+ and DP_k^-)
and the odd partitions OP_k in reverse lexicographic order, and computes the
length, the sign (-1)^(k - l), epsilon and d statistics.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional, Sequence, Tuple

from spinduality.exceptions import InvalidPartitionError, WeightMismatchError

logger = logging.getLogger(__name__)


class PartitionFamily(str, Enum):
    """Partition families that can be enumerated"""

    ALL = "all"
    STRICT = "strict"
    ODD = "odd"


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers"""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(not isinstance(p, int) or p <= 0 for p in parts):
            raise InvalidPartitionError(f"parts must be positive integers: {parts}")
        if any(parts[j] < parts[j + 1] for j in range(len(parts) - 1)):
            raise InvalidPartitionError(f"parts must be weakly decreasing: {parts}")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the printed form "(3,1)"; "()" is the empty partition."""
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise InvalidPartitionError(f"not a partition: {text!r}")
        inner = body[1:-1].strip()
        if not inner:
            return cls(())
        try:
            parts = tuple(int(piece) for piece in inner.split(","))
        except ValueError as e:
            raise InvalidPartitionError(f"not a partition: {text!r}") from e
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def is_strict(self) -> bool:
        return all(self.parts[j] > self.parts[j + 1] for j in range(self.length - 1))

    @property
    def is_odd(self) -> bool:
        return all(p % 2 == 1 for p in self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


class PartitionStats(NamedTuple):
    """Statistics of a partition of k"""

    length: int
    sign: int
    epsilon: Optional[int]
    d: int
    strict: bool


def _descending(k: int, largest: int, family: PartitionFamily) -> Iterator[tuple]:
    if k == 0:
        yield ()
        return
    for part in range(min(k, largest), 0, -1):
        if family is PartitionFamily.ODD and part % 2 == 0:
            continue
        cap = part - 1 if family is PartitionFamily.STRICT else part
        for rest in _descending(k - part, cap, family):
            yield (part,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(
    k: int, family: PartitionFamily = PartitionFamily.ALL
) -> Tuple[Partition, ...]:
    """
    All partitions of k in the given family, reverse lexicographic order.

    enumerate_partitions(0, ...) is the single empty partition.
    """
    if k < 0:
        raise InvalidPartitionError(f"k must be non-negative, got {k}")
    family = PartitionFamily(family)
    result = tuple(Partition(parts) for parts in _descending(k, k, family))
    logger.debug(f"enumerated {len(result)} {family.value} partitions of {k}")
    return result


def strict_partitions(k: int) -> Tuple[Partition, ...]:
    return enumerate_partitions(k, PartitionFamily.STRICT)


def odd_partitions(k: int) -> Tuple[Partition, ...]:
    return enumerate_partitions(k, PartitionFamily.ODD)


def stats(nu: Partition, k: int) -> PartitionStats:
    """
    Return (l, sign, epsilon, d) for a partition of k.

    epsilon is None when nu is not strict; the sign is reported for every
    cycle type.
    """
    if nu.weight != k:
        raise WeightMismatchError(f"{nu} has weight {nu.weight}, expected {k}")
    length = nu.length
    sign = 1 if (k - length) % 2 == 0 else -1
    strict = nu.is_strict
    epsilon = (0 if sign == 1 else 1) if strict else None
    return PartitionStats(length, sign, epsilon, length % 2, strict)


def dp_plus(k: int) -> Tuple[Partition, ...]:
    return tuple(nu for nu in strict_partitions(k) if (k - nu.length) % 2 == 0)


def dp_minus(k: int) -> Tuple[Partition, ...]:
    return tuple(nu for nu in strict_partitions(k) if (k - nu.length) % 2 == 1)


def require_strict(nu: Partition) -> None:
    if not nu.is_strict:
        raise InvalidPartitionError(f"{nu} is not a strict partition")


def require_odd(mu: Partition) -> None:
    if not mu.is_odd:
        raise InvalidPartitionError(f"{mu} is not an odd partition")


def block_offsets(parts: Sequence[int]) -> Tuple[int, ...]:
    """Partial sums 0, p_1, p_1 + p_2, ... used to place cycle blocks."""
    offsets = [0]
    for part in parts:
        offsets.append(offsets[-1] + part)
    return tuple(offsets)


def euler_identity_holds(kmax: int) -> bool:
    """|DP_k| == |OP_k| and DP_k = DP_k^+ + DP_k^- for all k <= kmax."""
    for k in range(kmax + 1):
        strict = strict_partitions(k)
        if len(strict) != len(odd_partitions(k)):
            return False
        if set(dp_plus(k)) | set(dp_minus(k)) != set(strict):
            return False
        if len(dp_plus(k)) + len(dp_minus(k)) != len(strict):
            return False
    return True
