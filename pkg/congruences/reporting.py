"""
Reporting Module

Aggregates verification records into per-identity status counts and
renders reports as an aligned text summary, JSON lines or CSV.
"""

import csv
import io
import json
from collections import Counter, defaultdict
from typing import Dict, Iterable, Optional, TextIO

from .exceptions import DomainError

COLUMNS = ('id', 'p', 'm', 'lhs', 'rhs', 'status', 'reason')
STATUS_ORDER = ('pass', 'fail', 'skip', 'info')


def summarize(records: Iterable) -> Dict[str, Dict[str, int]]:
    """
    Count records per status for every identity id.

    Args:
        records: VerificationRecords

    Returns:
        Dictionary mapping id to {status: count}, ids in sorted order and
        every status present
    """
    counts = defaultdict(Counter)
    for record in records:
        counts[record.id][record.status] += 1

    # Convert to plain dicts with a fixed key order
    return {identifier: {status: counts[identifier][status] for status in STATUS_ORDER}
            for identifier in sorted(counts)}


def status_totals(summary: Dict[str, Dict[str, int]]) -> Dict[str, int]:
    totals = Counter()
    for statuses in summary.values():
        totals.update(statuses)
    return {status: totals[status] for status in STATUS_ORDER}


def render_json(report) -> str:
    """One compact JSON object per record, one per line."""
    return ''.join(json.dumps(record.as_dict(), separators=(',', ':')) + '\n'
                   for record in report.records)


def render_csv(report) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(COLUMNS)
    for record in report.records:
        row = record.as_dict()
        writer.writerow(['' if row[column] is None else row[column] for column in COLUMNS])
    return buffer.getvalue()


def render_text(report) -> str:
    """
    Aligned table of status counts per identity, with a totals row.

    Args:
        report: VerificationReport

    Returns:
        str: The table followed by the elapsed time
    """
    summary = report.summary
    totals = status_totals(summary)
    width = max([len('identity'), len('total')] + [len(identifier) for identifier in summary])
    header = 'identity'.ljust(width) + ''.join(status.rjust(8) for status in STATUS_ORDER)
    lines = [header, '-' * len(header)]
    for identifier, statuses in summary.items():
        lines.append(identifier.ljust(width)
                     + ''.join(str(statuses[status]).rjust(8) for status in STATUS_ORDER))
    lines.append('-' * len(header))
    lines.append('total'.ljust(width) + ''.join(str(totals[status]).rjust(8) for status in STATUS_ORDER))
    lines.append(f"elapsed {report.elapsed:.2f}s")
    return '\n'.join(lines) + '\n'


RENDERERS = {
    'text': render_text,
    'json': render_json,
    'csv': render_csv,
}


def render(report, fmt: str) -> str:
    """
    Raises:
        DomainError: If the format is unknown
    """
    try:
        return RENDERERS[fmt](report)
    except KeyError:
        raise DomainError(f"Unknown format {fmt!r}") from None


def emit(report, fmt: str, path: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    """
    Write a rendered report to a file, or to a stream when no path is given.

    Args:
        report: VerificationReport
        fmt: 'text', 'json' or 'csv'
        path: Destination file; overwritten if it exists
        stream: Destination when path is None

    Raises:
        OSError: If the destination is not writable
    """
    content = render(report, fmt)
    if path is not None:
        with open(path, 'w', encoding='utf-8', newline='') as handle:
            handle.write(content)
    elif stream is not None and content:
        stream.write(content)
