"""
Matrix files.

Plain text: one row per line, whitespace-separated entries, each an integer, a
decimal (converted exactly) or ``p/q``. Blank lines and ``#`` comments are
ignored.

JSON: ``{"n": 3, "rows": [["1", "-19/4", ...], ...]}`` with entries as strings.
"""

import enum
import json
from pathlib import Path

from rest_framework.renderers import JSONRenderer

from .exact import RMatrix, to_rational
from .exceptions import DimensionMismatchError, MatrixParseError
from .serializers import MatrixFileSerializer


class MatrixFormat(enum.Enum):
    PLAIN_TEXT = "text"
    JSON = "json"


def parse_text(text):
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([to_rational(token) for token in line.split()])
        except MatrixParseError as exc:
            raise MatrixParseError(f"line {lineno}: {exc}") from exc
    if not rows:
        raise MatrixParseError("no matrix rows found")
    try:
        return RMatrix(rows)
    except DimensionMismatchError as exc:
        raise MatrixParseError(str(exc)) from exc


def serialize_text(a, comments=()):
    lines = [f"# {comment}" for comment in comments]
    lines.extend(" ".join(str(x) for x in row) for row in a.rows)
    return "\n".join(lines) + "\n"


def parse_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(f"invalid JSON: {exc}") from exc
    serializer = MatrixFileSerializer(data=data)
    if not serializer.is_valid():
        raise MatrixParseError(f"invalid matrix file: {dict(serializer.errors)}")
    return serializer.save()


def serialize_json(a):
    return JSONRenderer().render(
        MatrixFileSerializer(a).data, renderer_context={"indent": 2}
    ).decode() + "\n"


def detect_format(path, text):
    if Path(path).suffix.lower() == ".json" or text.lstrip().startswith("{"):
        return MatrixFormat.JSON
    return MatrixFormat.PLAIN_TEXT


def parse(text, fmt=MatrixFormat.PLAIN_TEXT):
    return parse_json(text) if fmt is MatrixFormat.JSON else parse_text(text)


def serialize(a, fmt=MatrixFormat.PLAIN_TEXT):
    return serialize_json(a) if fmt is MatrixFormat.JSON else serialize_text(a)


def load_matrix(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise MatrixParseError(f"{path} is not UTF-8 text: {exc}") from exc
    return parse(text, detect_format(path, text))
