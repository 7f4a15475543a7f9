"""Structural metadata extraction from raw data files.

Produces Resource records (size, hash, encoding, format, and a table
schema with per-column types and sample values) from CSV/TSV/JSON/JSONL
payloads. Everything here is deterministic: identical bytes and config
yield identical records.
"""

from __future__ import annotations

import datetime
import enum
import hashlib
import io
import json
import os
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple
import csv as _csv

from . import model as m
from .errors import InferenceError

DELIMITER_CANDIDATES = (",", ";", "\t", "|")

DEFAULT_MISSING_VALUES = ("", "NA", "N/A", "n/a", "null", "NULL", "-")

_MEDIATYPES = {
    "csv": "text/csv",
    "tsv": "text/tab-separated-values",
    "json": "application/json",
    "jsonl": "application/x-ndjson",
    "other": "application/octet-stream",
}

_EXTENSIONS = {".csv": "csv", ".tsv": "tsv", ".json": "json", ".jsonl": "jsonl"}


class CellType(enum.Enum):
    """Type of a single cell; `missing` exists only during inference."""

    MISSING = "missing"
    BOOLEAN = "boolean"
    INTEGER = "integer"
    NUMBER = "number"
    DATE = "date"
    DATETIME = "datetime"
    TIME = "time"
    STRING = "string"


@dataclass(frozen=True)
class Dialect:
    """Parsing parameters of a delimited text file."""

    delimiter: str
    quote_char: str = '"'
    has_header: bool = True

    def __post_init__(self):
        if self.delimiter not in DELIMITER_CANDIDATES:
            raise ValueError(f"unsupported delimiter: {self.delimiter!r}")


@dataclass(frozen=True)
class InferenceConfig:
    max_sample_values: int = 5
    sniff_lines: int = 64
    missing_values: Tuple[str, ...] = DEFAULT_MISSING_VALUES
    max_bytes: int = 100 * 1024 * 1024

    def __post_init__(self):
        if self.max_sample_values < 1:
            raise ValueError("max_sample_values must be >= 1")
        if self.sniff_lines < 2:
            raise ValueError("sniff_lines must be >= 2")


def detect_encoding(data: bytes, warnings: Optional[List[str]] = None) -> str:
    """BOM sniff first, UTF-8 validation second, latin-1 as last resort."""
    if data.startswith(b"\xef\xbb\xbf"):
        return "utf-8"
    if data.startswith(b"\xff\xfe"):
        return "utf-16le"
    if data.startswith(b"\xfe\xff"):
        return "utf-16be"
    try:
        data.decode("utf-8")
    except UnicodeDecodeError:
        if warnings is not None:
            warnings.append("content is not valid UTF-8; falling back to latin-1")
        return "latin-1"
    return "utf-8"


def decode_text(data: bytes, encoding: str) -> str:
    """Decode with the detected encoding, stripping any BOM."""
    if encoding == "utf-8" and data.startswith(b"\xef\xbb\xbf"):
        data = data[3:]
    elif encoding in ("utf-16le", "utf-16be") and data[:2] in (b"\xff\xfe", b"\xfe\xff"):
        data = data[2:]
    try:
        return data.decode(encoding)
    except UnicodeDecodeError as e:
        raise InferenceError(f"undecodable {encoding} content", code="undecodable") from e


def split_delimited(line: str, delimiter: str, quote_char: str = '"') -> List[str]:
    """Split one line on `delimiter`, honoring double-quote quoting.

    Surrounding quotes are removed and doubled quotes collapse to one,
    so cells come back the way a CSV reader would hand them over.
    """
    cells: List[str] = []
    buf: List[str] = []
    in_quotes = False
    i, n = 0, len(line)
    while i < n:
        ch = line[i]
        if in_quotes:
            if ch == quote_char:
                if i + 1 < n and line[i + 1] == quote_char:
                    buf.append(quote_char)
                    i += 2
                    continue
                in_quotes = False
            else:
                buf.append(ch)
        elif ch == quote_char:
            in_quotes = True
        elif ch == delimiter:
            cells.append("".join(buf))
            buf = []
        else:
            buf.append(ch)
        i += 1
    cells.append("".join(buf))
    return cells


_NUMBER_RE = re.compile(r"[+-]?(?:\d+\.\d*|\.\d+)(?:[eE][+-]?\d+)?\Z|[+-]?\d+[eE][+-]?\d+\Z")
_DATE_RE = re.compile(r"(\d{4})-(\d{2})-(\d{2})\Z")
_DATETIME_RE = re.compile(
    r"(\d{4})-(\d{2})-(\d{2})[Tt](\d{2}):(\d{2}):(\d{2})(?:\.\d+)?(?:[Zz]|([+-])(\d{2}):(\d{2}))\Z"
)
_TIME_RE = re.compile(r"(\d{2}):(\d{2})(?::(\d{2}))?\Z")


def _valid_date(y: str, mo: str, d: str) -> bool:
    try:
        datetime.date(int(y), int(mo), int(d))
    except ValueError:
        return False
    return True


def _valid_clock(h: str, mi: str, s: Optional[str]) -> bool:
    return int(h) <= 23 and int(mi) <= 59 and (s is None or int(s) <= 59)


def _classify(value: str, missing: frozenset) -> CellType:
    v = value.strip()
    if v in missing:
        return CellType.MISSING
    c0 = v[0]
    if c0 in "tTfF" and v.lower() in ("true", "false"):
        return CellType.BOOLEAN
    if c0 in "+-.0123456789":
        digits = v[1:] if c0 in "+-" else v
        if digits.isascii() and digits.isdigit():
            # leading zeros mark identifier-like values (postal codes), not numbers
            if digits[0] != "0" or v in ("0", "-0"):
                return CellType.INTEGER
            return CellType.STRING
        if ("." in v or "e" in v or "E" in v) and _NUMBER_RE.fullmatch(v):
            return CellType.NUMBER
        md = _DATE_RE.fullmatch(v)
        if md and _valid_date(*md.groups()):
            return CellType.DATE
        mdt = _DATETIME_RE.fullmatch(v)
        if mdt:
            g = mdt.groups()
            date_ok = _valid_date(g[0], g[1], g[2])
            clock_ok = _valid_clock(g[3], g[4], g[5])
            offset_ok = g[6] is None or (int(g[7]) <= 23 and int(g[8]) <= 59)
            if date_ok and clock_ok and offset_ok:
                return CellType.DATETIME
        mt = _TIME_RE.fullmatch(v)
        if mt and _valid_clock(*mt.groups()):
            return CellType.TIME
    return CellType.STRING


def classify_cell(cell: str, cfg: InferenceConfig) -> CellType:
    """Classify one raw cell after trimming surrounding whitespace."""
    return _classify(cell, frozenset(cfg.missing_values))


def join_types(a: CellType, b: CellType) -> CellType:
    """Least upper bound: missing is identity, integer widens to number,
    anything else mixed collapses to string."""
    if a is b:
        return a
    if a is CellType.MISSING:
        return b
    if b is CellType.MISSING:
        return a
    if {a, b} == {CellType.INTEGER, CellType.NUMBER}:
        return CellType.NUMBER
    return CellType.STRING


def _modal_count(counts: Sequence[int]) -> int:
    # most frequent column count; frequency ties go to the wider table
    freq = Counter(counts)
    best = max(freq.items(), key=lambda kv: (kv[1], kv[0]))
    return best[0]


def sniff_dialect(sample_text: str, cfg: InferenceConfig) -> Dialect:
    """Pick the delimiter whose splits are most consistent across lines.

    Each candidate is scored by the fraction of lines matching the modal
    column count; ties prefer more columns, then earlier candidates.
    Header detection: the first row is a header when all of its cells
    classify as strings and they are pairwise distinct.
    """
    lines = [ln for ln in sample_text.splitlines()[: cfg.sniff_lines] if ln.strip() != ""]
    if not lines:
        raise InferenceError("no data", code="no-data")
    best_delim = DELIMITER_CANDIDATES[0]
    best_key = (-1.0, -1)
    for delim in DELIMITER_CANDIDATES:
        counts = [len(split_delimited(ln, delim)) for ln in lines]
        modal = _modal_count(counts)
        score = sum(1 for c in counts if c == modal) / len(counts)
        if (score, modal) > best_key:
            best_key = (score, modal)
            best_delim = delim
    return Dialect(
        delimiter=best_delim,
        has_header=_looks_like_header(
            split_delimited(lines[0], best_delim), frozenset(cfg.missing_values)
        ),
    )


def _looks_like_header(cells: Sequence[str], missing: frozenset) -> bool:
    return all(_classify(c, missing) is CellType.STRING for c in cells) and len(
        set(cells)
    ) == len(cells)


_CELL_TO_FIELD_TYPE = {t: t.value for t in CellType if t is not CellType.MISSING}


class _ColumnProfile:
    """Streaming fold of one column: type join plus first distinct samples."""

    __slots__ = ("joined", "samples", "_seen", "_limit", "saw_object", "saw_array")

    def __init__(self, limit: int):
        self.joined = CellType.MISSING
        self.samples: List[str] = []
        self._seen: set = set()
        self._limit = limit
        self.saw_object = False
        self.saw_array = False

    def add(self, raw: str, missing: frozenset) -> None:
        # string absorbs every further join, so a saturated column is done
        if self.joined is CellType.STRING and len(self.samples) >= self._limit:
            return
        cell_type = _classify(raw, missing)
        if cell_type is CellType.MISSING:
            return
        self.joined = join_types(self.joined, cell_type)
        if len(self.samples) < self._limit and raw not in self._seen:
            self._seen.add(raw)
            self.samples.append(raw)

    def field_type(self) -> str:
        if self.saw_object:
            return "object"
        if self.saw_array:
            return "array"
        if self.joined is CellType.MISSING:
            return "any"
        return _CELL_TO_FIELD_TYPE[self.joined]


def infer_table_schema(
    rows: Sequence[Sequence[str]],
    dialect: Dialect,
    cfg: InferenceConfig,
    warnings: Optional[List[str]] = None,
) -> m.TableSchema:
    """Infer field names, types and sample values from parsed rows.

    Names come from the header row when the dialect has one, otherwise
    field_1..field_n. A column's type is the join over all of its cell
    classifications; all-missing columns type as "any". Ragged rows are
    padded with missing cells (and reported as warnings).
    """
    rows = list(rows)
    if dialect.has_header and rows:
        header, data = rows[0], rows[1:]
    else:
        header, data = None, rows
    if not data:
        raise InferenceError("no rows", code="no-rows")

    width = max(len(r) for r in data)
    if header is not None:
        width = max(width, len(header))
    names: List[str] = []
    for i in range(width):
        given = header[i].strip() if header is not None and i < len(header) else ""
        names.append(given if given else f"field_{i + 1}")

    missing = frozenset(cfg.missing_values)
    profiles = [_ColumnProfile(cfg.max_sample_values) for _ in range(width)]
    ragged = 0
    for row in data:
        if len(row) != width:
            ragged += 1
        for j in range(min(len(row), width)):
            profiles[j].add(row[j], missing)
        # shorter rows contribute missing cells, which the join ignores
    if ragged and warnings is not None:
        warnings.append(f"{ragged} row(s) padded to {width} column(s)")

    fields = tuple(
        m.Field(name=names[j], type=profiles[j].field_type(), sample_values=tuple(profiles[j].samples))
        for j in range(width)
    )
    return m.TableSchema(fields=fields, missing_values=tuple(cfg.missing_values))


def slug_from_filename(stem: str) -> str:
    """Lowercase the stem and replace anything a slug cannot hold with '-'."""
    lowered = stem.lower()
    slugged = "".join(
        ch if ch.isascii() and (ch.isalnum() or ch in "._-") else "-" for ch in lowered
    )
    slugged = slugged.strip("._-")
    return slugged or "resource"


def _stringify_scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return value
    return str(value)


def _schema_from_objects(
    objects: Sequence[Dict[str, Any]], cfg: InferenceConfig
) -> m.TableSchema:
    """Union of keys in first-appearance order; scalar values are
    stringified and pushed through the same classify/join machinery."""
    keys: List[str] = []
    seen: set = set()
    for obj in objects:
        for k in obj:
            if k not in seen:
                seen.add(k)
                keys.append(k)
    missing = frozenset(cfg.missing_values)
    profiles = {k: _ColumnProfile(cfg.max_sample_values) for k in keys}
    for obj in objects:
        for k in keys:
            if k not in obj:
                continue
            value = obj[k]
            if value is None:
                continue
            if isinstance(value, dict):
                profiles[k].saw_object = True
            elif isinstance(value, list):
                profiles[k].saw_array = True
            else:
                profiles[k].add(_stringify_scalar(value), missing)
    fields = tuple(
        m.Field(name=k, type=profiles[k].field_type(), sample_values=tuple(profiles[k].samples))
        for k in keys
    )
    return m.TableSchema(fields=fields, missing_values=tuple(cfg.missing_values))


def _delimited_schema(
    text: str, forced_delimiter: Optional[str], cfg: InferenceConfig, warnings: Optional[List[str]]
) -> m.TableSchema:
    if "\x00" in text:
        raise InferenceError("binary content in a delimited file", code="undecodable")
    sample_lines = text.splitlines()[: cfg.sniff_lines]
    if forced_delimiter is None:
        dialect = sniff_dialect("\n".join(sample_lines), cfg)
    else:
        # the extension fixes the delimiter; only header presence is sniffed
        lines = [ln for ln in sample_lines if ln.strip() != ""]
        if not lines:
            raise InferenceError("no data", code="no-data")
        dialect = Dialect(
            delimiter=forced_delimiter,
            has_header=_looks_like_header(
                split_delimited(lines[0], forced_delimiter), frozenset(cfg.missing_values)
            ),
        )
    reader = _csv.reader(
        io.StringIO(text, newline=""), delimiter=dialect.delimiter, quotechar=dialect.quote_char
    )
    rows = [row for row in reader if row]
    return infer_table_schema(rows, dialect, cfg, warnings)


def _structured_schema(
    text: str, fmt: str, cfg: InferenceConfig, warnings: Optional[List[str]]
) -> Optional[m.TableSchema]:
    if fmt == "json":
        try:
            value = json.loads(text)
        except json.JSONDecodeError as e:
            raise InferenceError(f"undecodable JSON: {e.msg}", code="undecodable") from e
        if not isinstance(value, list) or not value or not all(
            isinstance(x, dict) for x in value
        ):
            if warnings is not None:
                warnings.append("JSON is not a non-empty array of objects; schema omitted")
            return None
        return _schema_from_objects(value, cfg)
    # jsonl: one object per non-blank line
    objects = []
    for i, line in enumerate(text.splitlines()):
        if not line.strip():
            continue
        try:
            value = json.loads(line)
        except json.JSONDecodeError as e:
            raise InferenceError(
                f"undecodable JSON on line {i + 1}: {e.msg}", code="undecodable"
            ) from e
        objects.append(value)
    if not objects or not all(isinstance(x, dict) for x in objects):
        if warnings is not None:
            warnings.append("JSONL lines are not all objects; schema omitted")
        return None
    return _schema_from_objects(objects, cfg)


def infer_resource(
    file_name: str,
    data: bytes,
    cfg: Optional[InferenceConfig] = None,
    warnings: Optional[List[str]] = None,
) -> m.Resource:
    """Profile one file into a Resource record.

    The format comes from the extension; csv/tsv get a sniffed dialect
    and a table schema, json/jsonl a schema from the union of object
    keys, anything else just size/hash/encoding metadata.
    """
    cfg = cfg or InferenceConfig()
    if len(data) > cfg.max_bytes:
        raise InferenceError(
            f"file exceeds the {cfg.max_bytes} byte limit", code="oversize"
        )
    ext = os.path.splitext(file_name)[1].lower()
    fmt = _EXTENSIONS.get(ext, "other")
    stem = os.path.splitext(os.path.basename(file_name))[0]
    encoding = detect_encoding(data, warnings)

    schema: Optional[m.TableSchema] = None
    if fmt in ("csv", "tsv"):
        text = decode_text(data, encoding)
        schema = _delimited_schema(
            text, "\t" if fmt == "tsv" else None, cfg, warnings
        )
    elif fmt in ("json", "jsonl"):
        text = decode_text(data, encoding)
        if "\x00" in text:
            raise InferenceError("binary content in a structured file", code="undecodable")
        schema = _structured_schema(text, fmt, cfg, warnings)

    return m.Resource(
        name=slug_from_filename(stem),
        path=file_name,
        format=fmt,
        mediatype=_MEDIATYPES[fmt],
        encoding=encoding,
        bytes=len(data),
        hash="sha256:" + hashlib.sha256(data).hexdigest(),
        schema=schema,
    )
