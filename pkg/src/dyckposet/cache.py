"""On-disk cache of avoidance counts: one CSV file per pattern.

Each file has the header ``pattern,n,count,engine``; counts are decimal
strings. Writes go to a temporary file that is then renamed into place.
"""

from __future__ import annotations

import csv
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

HEADER = ["pattern", "n", "count", "engine"]
ENGINES = ("brute", "formula")


class CacheConflictError(ValueError):
    pass


@dataclass(frozen=True)
class CacheRecord:
    pattern: str
    n: int
    count: int
    engine: str

    def __post_init__(self):
        if set(self.pattern) - {"U", "D"}:
            raise ValueError(f"pattern must be canonical U/D text: {self.pattern!r}")
        if self.n < 0 or self.count < 0:
            raise ValueError(f"n and count must be nonnegative: {self}")
        if self.engine not in ENGINES:
            raise ValueError(f"unknown engine {self.engine!r}")

    def as_row(self) -> list[str]:
        return [self.pattern, str(self.n), str(self.count), self.engine]

    @classmethod
    def from_row(cls, row: dict[str, str]) -> CacheRecord:
        return cls(row["pattern"], int(row["n"]), int(row["count"]), row["engine"])


class ResultCache:
    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)

    def path_for(self, pattern: str) -> Path:
        return self.directory / f"{pattern or 'EMPTY'}.csv"

    def load(self, pattern: str) -> dict[int, CacheRecord]:
        path = self.path_for(pattern)
        if not path.exists():
            return {}
        with path.open(newline="") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames != HEADER:
                raise ValueError(f"{path}: bad header {reader.fieldnames}")
            records = {}
            for row in reader:
                rec = CacheRecord.from_row(row)
                if rec.pattern != pattern:
                    raise ValueError(f"{path}: record for {rec.pattern!r} in file for {pattern!r}")
                records[rec.n] = rec
        return records

    def get(self, pattern: str, n: int) -> CacheRecord | None:
        return self.load(pattern).get(n)

    def put(self, record: CacheRecord) -> CacheRecord:
        """Store ``record`` and return what the cache holds for its key.

        A brute count replaces an equal formula count; unequal counts raise.
        """
        records = self.load(record.pattern)
        old = records.get(record.n)
        if old is not None:
            if old.count != record.count:
                raise CacheConflictError(
                    f"{record.pattern} n={record.n}: cached {old.engine} count {old.count} "
                    f"!= new {record.engine} count {record.count}"
                )
            if old.engine == "brute" or record.engine == old.engine:
                return old
        records[record.n] = record
        self._write(record.pattern, records)
        return record

    def _write(self, pattern: str, records: dict[int, CacheRecord]) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        target = self.path_for(pattern)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".csv")
        try:
            with os.fdopen(fd, "w", newline="") as fh:
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow(HEADER)
                for n in sorted(records):
                    writer.writerow(records[n].as_row())
            os.replace(tmp, target)
        except BaseException:
            os.unlink(tmp)
            raise
