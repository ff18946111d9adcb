"""Reading ranked best-seller chart files.

A chart file is a CSV with header ``period,product_id`` or
``period,product_id,sales``; one row per charted item per period, with row
order inside a period encoding the rank. Periods must be consecutive
integers and a (period, product_id) pair may appear only once.
"""

from __future__ import annotations

import csv
from pathlib import Path

CHART_HEADERS = (["period", "product_id"], ["period", "product_id", "sales"])


def load_chart(path: str | Path) -> list[list[int]]:
    """Per-period ranked product-id lists from a chart CSV."""
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty chart file") from None
        if header not in CHART_HEADERS:
            raise ValueError(
                f"{path}: header must be 'period,product_id[,sales]', got {','.join(header)}"
            )
        by_period: dict[int, list[int]] = {}
        seen: set[tuple[int, int]] = set()
        for line_no, row in enumerate(reader, start=2):
            if len(row) != len(header):
                raise ValueError(f"{path}:{line_no}: expected {len(header)} fields, got {len(row)}")
            try:
                period, product_id = int(row[0]), int(row[1])
            except ValueError:
                raise ValueError(f"{path}:{line_no}: period and product_id must be integers") from None
            if (period, product_id) in seen:
                raise ValueError(f"{path}:{line_no}: duplicate entry for period {period}, product {product_id}")
            seen.add((period, product_id))
            by_period.setdefault(period, []).append(product_id)

    if not by_period:
        raise ValueError(f"{path}: chart file has no data rows")
    periods = sorted(by_period)
    if periods != list(range(periods[0], periods[0] + len(periods))):
        raise ValueError(f"{path}: periods must be consecutive integers, got gaps in {periods[0]}..{periods[-1]}")
    return [by_period[p] for p in periods]
