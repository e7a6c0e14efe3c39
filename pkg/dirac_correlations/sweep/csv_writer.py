import csv
from typing import Any, Optional, Sequence, TextIO

from dirac_correlations._logger import _logger_sweep as _logger
from dirac_correlations.sweep.engine import ResultRow

__all__ = ["format_cell", "emit_csv"]


def format_cell(value: Any) -> str:
    """17 significant digits for floats (exact round trip), empty for None"""
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def emit_csv(rows: Sequence[ResultRow], sink: TextIO, header: Optional[Sequence[str]] = None) -> None:
    """Write rows as CSV with a header line and LF line endings

    Args:
        rows: result rows, all sharing one header
        sink: writable text stream
        header: column names, required when `rows` is empty

    Raises:
        ValueError: if no header is available or a row does not match it
        OSError: propagated from the stream
    """
    if header is None:
        if not rows:
            raise ValueError("emit_csv needs a header when there are no rows")
        header = rows[0].columns
    header = tuple(header)
    if not header:
        raise ValueError("empty CSV header")
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        if row.columns != header:
            raise ValueError(f"row {row.index} has columns {row.columns}, expected {header}")
        writer.writerow([format_cell(v) for v in row.values])
    _logger.debug("emit_csv: %d rows, %d columns", len(rows), len(header))
