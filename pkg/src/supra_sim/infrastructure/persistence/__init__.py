"""Result and snapshot persistence."""

from .csv_writer import (
    SERIES_COLUMNS,
    SWEEP_COLUMNS,
    CsvSeriesWriter,
    read_csv,
    write_result_csv,
    write_series_csv,
)
from .snapshot import SnapshotHeader, dump_slice_csv, read_snapshot, write_snapshot

__all__ = [
    "SERIES_COLUMNS",
    "SWEEP_COLUMNS",
    "CsvSeriesWriter",
    "SnapshotHeader",
    "dump_slice_csv",
    "read_csv",
    "read_snapshot",
    "write_result_csv",
    "write_series_csv",
    "write_snapshot",
]
