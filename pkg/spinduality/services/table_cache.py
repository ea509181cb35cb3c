"""
Plain-text cache of character tables.

One UTF-8 file per (k, kind) named <kind>_k<k>.txt, holding one
"k;kind;nu;mu;value" record per entry with rows and columns in canonical
order. Loading re-validates every record against the expected shape.
"""

import logging
from pathlib import Path
from typing import Dict, Tuple, Union

from spinduality.exceptions import CacheFormatError, InvalidPartitionError
from spinduality.schemas.report_schemas import TableKind
from spinduality.services.exactfield import FieldElem
from spinduality.services.partitions import (
    Partition,
    odd_partitions,
    strict_partitions,
)
from spinduality.services.qfunctions import CharTable, char_table

logger = logging.getLogger(__name__)


class TableCache:
    """Reads and writes character tables under a cache directory"""

    def __init__(self, cache_dir: Union[str, Path]):
        self.cache_dir = Path(cache_dir)

    def path_for(self, k: int, kind: TableKind) -> Path:
        return self.cache_dir / f"{TableKind(kind).value}_k{k}.txt"

    def save(self, table: CharTable) -> Path:
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        path = self.path_for(table.k, table.kind)
        path.write_text("\n".join(table.records()) + "\n", encoding="utf-8")
        logger.debug(f"wrote {path}")
        return path

    def load(self, k: int, kind: TableKind) -> CharTable:
        """Parse a cached table; CacheFormatError on any malformed or missing record."""
        kind = TableKind(kind)
        path = self.path_for(k, kind)
        rows = strict_partitions(k)
        cols = odd_partitions(k)
        values: Dict[Tuple[Partition, Partition], FieldElem] = {}
        text = path.read_text(encoding="utf-8")
        for number, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            fields = line.split(";")
            if len(fields) != 5:
                raise CacheFormatError(f"{path}:{number}: expected 5 fields")
            k_text, kind_text, nu_text, mu_text, value_text = fields
            if k_text != str(k) or kind_text != kind.value:
                raise CacheFormatError(
                    f"{path}:{number}: record for k={k_text} kind={kind_text}"
                )
            try:
                nu = Partition.parse(nu_text)
                mu = Partition.parse(mu_text)
                value = FieldElem.parse(value_text)
            except (InvalidPartitionError, ValueError) as e:
                raise CacheFormatError(f"{path}:{number}: {e}") from e
            if nu not in rows or mu not in cols:
                raise CacheFormatError(f"{path}:{number}: no entry ({nu}, {mu})")
            if (nu, mu) in values:
                raise CacheFormatError(f"{path}:{number}: duplicate ({nu}, {mu})")
            values[(nu, mu)] = value
        if len(values) != len(rows) * len(cols):
            raise CacheFormatError(
                f"{path}: {len(values)} of {len(rows) * len(cols)} entries present"
            )
        entries = tuple(tuple(values[(nu, mu)] for mu in cols) for nu in rows)
        return CharTable(k, kind, rows, cols, entries)

    def get_or_compute(
        self, k: int, kind: TableKind, force: bool = False
    ) -> CharTable:
        """Cached table when present and valid, otherwise compute and store it."""
        kind = TableKind(kind)
        path = self.path_for(k, kind)
        if path.exists() and not force:
            try:
                table = self.load(k, kind)
                logger.info(f"cache hit for {kind.value} k={k}")
                return table
            except CacheFormatError as e:
                logger.warning(f"discarding cached table: {e}")
        logger.info(f"cache miss for {kind.value} k={k}")
        table = char_table(k, kind)
        self.save(table)
        return table
