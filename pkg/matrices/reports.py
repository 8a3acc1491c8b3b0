"""
Command reports and their JSON and text renderings.
"""

import hashlib
import time
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path

from rest_framework.renderers import JSONRenderer

from assrkit import __version__

from .combined import render_matrix, row_col_sums, scale_header
from .matrixio import serialize_text
from .serializers import ReportSerializer

SCHEMA_VERSION = "1"
SCHEMA_PATH = Path(__file__).resolve().parent / "schema" / "report.schema.json"


@dataclass
class Report:
    input_name: str
    matrix: object
    classification: object = None
    combined: object = None
    checks: list | None = None
    timing: dict | None = None
    tool_version: str = __version__
    schema_version: str = SCHEMA_VERSION

    @property
    def input_digest(self):
        """sha256 of the canonical text form, so equal matrices share a digest."""
        return hashlib.sha256(serialize_text(self.matrix).encode()).hexdigest()

    @property
    def failed_checks(self):
        return [c for c in self.checks or () if c.failed]


class Timing:
    """Wall-clock seconds per named section; records nothing when disabled."""

    def __init__(self, enabled=False):
        self.enabled = enabled
        self.sections = {}

    @contextmanager
    def section(self, name):
        start = time.perf_counter()
        try:
            yield
        finally:
            if self.enabled:
                self.sections[name] = round(time.perf_counter() - start, 6)

    def as_dict(self):
        return dict(self.sections) if self.enabled else None


def render_json(reports, digits=None, scale_exponent=None):
    many = isinstance(reports, (list, tuple))
    serializer = ReportSerializer(
        reports,
        many=many,
        context={"digits": digits, "scale_exponent": scale_exponent},
    )
    return JSONRenderer().render(
        serializer.data, renderer_context={"indent": 2}
    ).decode() + "\n"


def _yes_no(flag):
    if flag is None:
        return "n/a"
    return "yes" if flag else "no"


def _table(rows, indent="    "):
    widths = [max(len(row[j]) for row in rows) for j in range(len(rows[0]))]
    return [
        indent + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows
    ]


def _witness_line(w):
    if w.order == 0:
        return f"  witness: {w.reason}"
    line = (
        f"  witness: order {w.order} minor rows {w.rows} cols {w.cols}"
        f" = {w.value} ({w.reason})"
    )
    if w.partner is not None:
        p = w.partner
        line += f"; opposite sign to rows {p.rows} cols {p.cols} = {p.value}"
    return line


def _classification_lines(c):
    lines = [
        "classification:",
        f"  SR: {_yes_no(c.is_sr)}  SSR: {_yes_no(c.is_ssr)}  ASSR: {_yes_no(c.is_assr)}",
    ]
    if c.signature is not None:
        lines.append(f"  signature: {c.signature}")
    if c.staircase is not None:
        rule = f" (rule {c.rule.value})" if c.rule else ""
        lines.append(f"  staircase: {c.staircase.value}{rule}")
    lines.append(
        f"  irreducible: {_yes_no(c.irreducible)}  nonsingular: {_yes_no(c.nonsingular)}"
    )
    for witness in (c.sr_witness, c.assr_witness):
        if witness is not None:
            lines.append(_witness_line(witness))
    return lines


def _combined_lines(result, digits, scale_exponent):
    c = result.matrix
    lines = [f"combined matrix (det A = {result.det_a}):", "  exact:"]
    lines.extend(_table([[str(x) for x in row] for row in c.rows]))
    header = scale_header(scale_exponent)
    lines.append(f"  decimal{' ' + header if header else ''}:")
    lines.extend(_table(render_matrix(c, digits, scale_exponent)))
    row_sums, col_sums = row_col_sums(c)
    lines.append("  row sums: " + " ".join(str(s) for s in row_sums))
    lines.append("  column sums: " + " ".join(str(s) for s in col_sums))
    return lines


def render_text(report, digits=None, scale_exponent=None):
    lines = [
        f"input: {report.input_name} (sha256 {report.input_digest[:16]})",
        f"order: {report.matrix.n}",
    ]
    if report.classification is not None:
        lines.extend(_classification_lines(report.classification))
    if report.combined is not None:
        lines.extend(_combined_lines(report.combined, digits, scale_exponent))
    if report.checks is not None:
        lines.append("checks:")
        for check in report.checks:
            verdict = check.verdict
            note = f" ({verdict.note})" if verdict.note else ""
            lines.append(f"  {check.check_id}: {verdict.status.value}{note}")
            if verdict.witness is not None:
                lines.append(f"    witness: {verdict.witness}")
    if report.timing:
        lines.append(
            "timing: " + ", ".join(f"{k} {v:.6f}s" for k, v in report.timing.items())
        )
    return "\n".join(lines) + "\n"
