"""CSV emission of time series and experiment tables."""

import csv
import logging
import math
from pathlib import Path
from typing import Any

from ...domain.exceptions import SimulationError
from ...domain.models.reports import ExperimentResult

logger = logging.getLogger(__name__)

SERIES_COLUMNS = ["t", "u_site", "H_site", "E_total", "rate_lhs", "rate_rhs", "residual"]
SWEEP_COLUMNS = ["A", "E_integrated", "max_residual", "status"]


def format_value(value: Any) -> str:
    """Floats with 17 significant digits; everything else via str."""
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return f"{value:.17g}"
    if value is None:
        return ""
    return str(value)


def parse_value(text: str) -> Any:
    """Inverse of format_value for numeric cells; other text is returned as is."""
    if text == "":
        return None
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def _write_rows(path: Path, columns: list[str], rows: list[dict[str, Any]]) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="", encoding="utf-8") as f:
            writer = csv.DictWriter(f, fieldnames=columns, extrasaction="ignore")
            writer.writeheader()
            for row in rows:
                writer.writerow({c: format_value(row.get(c)) for c in columns})
    except OSError as e:
        raise SimulationError(f"Cannot write {path}: {e}") from e
    logger.info(f"Wrote {len(rows)} rows to {path}")
    return path


def write_series_csv(rows: list[dict[str, float]], path: Path) -> Path:
    """Write sampled time-series rows with the fixed series columns."""
    return _write_rows(path, SERIES_COLUMNS, rows)


def write_result_csv(result: ExperimentResult, path: Path) -> Path:
    """Write an experiment table using its own column order."""
    return _write_rows(path, result.columns, result.rows)


def read_csv(path: Path) -> tuple[list[str], list[dict[str, Any]]]:
    """Read a table written by this module.

    Returns:
        Column names and rows with numeric cells parsed
    """
    path = Path(path)
    try:
        with path.open(newline="", encoding="utf-8") as f:
            reader = csv.DictReader(f)
            rows = [{k: parse_value(v) for k, v in row.items()} for row in reader]
            columns = list(reader.fieldnames or [])
    except OSError as e:
        raise SimulationError(f"Cannot read {path}: {e}") from e
    return columns, rows


class CsvSeriesWriter:
    """SeriesWriter writing comma-separated tables."""

    def write_result(self, result: ExperimentResult, path: Path) -> Path:
        return write_result_csv(result, path)
