"""Corpus ingestion: the comment data model plus CSV/JSONL loaders.

Input formats:
  CSV   - UTF-8, header row ``id,text,source_group,timestamp``, RFC-4180
          quoting. Extra columns are ignored; empty optional cells mean
          "absent".
  JSONL - one JSON object per line with the same field names. Unknown keys
          are ignored so that files with extra annotations (for example the
          cleaned-corpus output of the preprocess subcommand) stay loadable.

Loading is strict by default: the first malformed record aborts with an
error naming its line. ``load_corpus_lenient`` instead skips bad records and
returns them as a skip report (JSONL of ``{line, reason}`` when written).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Mapping

from .errors import WindsentError

REQUIRED_FIELDS = ("id", "text")
OPTIONAL_FIELDS = ("source_group", "timestamp")


class FileNotReadableError(WindsentError):
    code = "corpus/file-not-readable"


class MalformedRecordError(WindsentError):
    code = "corpus/malformed-record"

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class DuplicateIdError(WindsentError):
    code = "corpus/duplicate-id"

    def __init__(self, comment_id: str, line: int):
        super().__init__(f"line {line}: duplicate id {comment_id!r}")
        self.comment_id = comment_id
        self.line = line


class MissingFieldError(WindsentError):
    code = "corpus/missing-field"

    def __init__(self, name: str):
        super().__init__(f"missing field: {name}")
        self.name = name


class EmptyTextError(WindsentError):
    code = "corpus/empty-text"

    def __init__(self):
        super().__init__("text is empty")


class InvalidFieldError(WindsentError):
    code = "corpus/invalid-field"

    def __init__(self, name: str, reason: str):
        super().__init__(f"field {name}: {reason}")
        self.name = name
        self.reason = reason


@dataclass(frozen=True)
class Comment:
    """One social-media post. ``text`` is kept verbatim; ``id`` is trimmed."""

    id: str
    text: str
    source_group: str | None = None
    timestamp: str | None = None


@dataclass(frozen=True)
class CommentCollection:
    comments: tuple[Comment, ...]
    source_path: str

    @property
    def record_count(self) -> int:
        return len(self.comments)

    def __iter__(self) -> Iterator[Comment]:
        return iter(self.comments)

    def __len__(self) -> int:
        return len(self.comments)


@dataclass(frozen=True)
class SkippedRecord:
    line: int
    reason: str


def validate_record(raw: Mapping[str, object]) -> Comment:
    """Build a Comment from a parsed record.

    The id is whitespace-trimmed; text is preserved byte for byte. Empty
    optional fields become absent (None), never empty strings.
    """
    raw_id = raw.get("id")
    if raw_id is None:
        raise MissingFieldError("id")
    if not isinstance(raw_id, str):
        raise InvalidFieldError("id", "must be a string")
    comment_id = raw_id.strip()
    if not comment_id:
        raise MissingFieldError("id")

    text = raw.get("text")
    if text is None:
        raise MissingFieldError("text")
    if not isinstance(text, str):
        raise InvalidFieldError("text", "must be a string")
    if text == "":
        raise EmptyTextError()

    optionals: dict[str, str | None] = {}
    for name in OPTIONAL_FIELDS:
        value = raw.get(name)
        if value is None or value == "":
            optionals[name] = None
            continue
        if not isinstance(value, str):
            raise InvalidFieldError(name, "must be a string")
        optionals[name] = value
    return Comment(id=comment_id, text=text, **optionals)


def _read_text(path: Path) -> str:
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise FileNotReadableError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return data.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise FileNotReadableError(f"{path}: not valid UTF-8 ({exc})") from exc


def _iter_csv(text: str) -> Iterator[tuple[int, Mapping[str, object]]]:
    reader = csv.reader(io.StringIO(text, newline=""))
    try:
        header = next(reader)
    except StopIteration:
        return
    columns = [name.strip() for name in header]
    for required in REQUIRED_FIELDS:
        if required not in columns:
            raise MalformedRecordError(1, f"header lacks required column {required!r}")
    known = set(REQUIRED_FIELDS) | set(OPTIONAL_FIELDS)
    for row in reader:
        if not row:
            continue
        # short rows leave later columns absent; extra cells are ignored
        raw: dict[str, object] = {}
        for name, value in zip(columns, row):
            if name in known:
                raw[name] = value
        yield reader.line_num, raw


def _iter_jsonl(text: str) -> Iterator[tuple[int, Mapping[str, object]]]:
    # split on "\n" only (tolerating CRLF): JSON strings may legally contain
    # raw U+2028/U+2029, which str.splitlines would misread as record breaks
    for lineno, line in enumerate(text.split("\n"), start=1):
        if line.endswith("\r"):
            line = line[:-1]
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedRecordError(lineno, f"invalid JSON: {exc.msg}") from exc
        if not isinstance(obj, dict):
            raise MalformedRecordError(lineno, "record is not a JSON object")
        yield lineno, obj


def _load(path: str | Path, fmt: str, lenient: bool) -> tuple[CommentCollection, tuple[SkippedRecord, ...]]:
    path = Path(path)
    if fmt not in ("csv", "jsonl"):
        raise ValueError(f"unknown corpus format: {fmt!r}")
    text = _read_text(path)
    records = _iter_csv(text) if fmt == "csv" else _iter_jsonl(text)

    comments: list[Comment] = []
    skipped: list[SkippedRecord] = []
    seen: set[str] = set()
    for lineno, raw in records:
        try:
            comment = validate_record(raw)
        except (MissingFieldError, EmptyTextError, InvalidFieldError) as exc:
            if lenient:
                skipped.append(SkippedRecord(lineno, str(exc)))
                continue
            raise MalformedRecordError(lineno, str(exc)) from exc
        if comment.id in seen:
            if lenient:
                skipped.append(SkippedRecord(lineno, f"duplicate id {comment.id!r}"))
                continue
            raise DuplicateIdError(comment.id, lineno)
        seen.add(comment.id)
        comments.append(comment)
    return CommentCollection(tuple(comments), str(path)), tuple(skipped)


def load_corpus(path: str | Path, fmt: str) -> CommentCollection:
    """Strict load: any malformed record or duplicate id aborts."""
    collection, _ = _load(path, fmt, lenient=False)
    return collection


def load_corpus_lenient(path: str | Path, fmt: str) -> tuple[CommentCollection, tuple[SkippedRecord, ...]]:
    """Lenient load: malformed records and duplicate ids are skipped and
    reported; accepted + skipped always account for every input record."""
    return _load(path, fmt, lenient=True)


def comment_to_record(comment: Comment) -> dict[str, str]:
    record = {"id": comment.id, "text": comment.text}
    if comment.source_group is not None:
        record["source_group"] = comment.source_group
    if comment.timestamp is not None:
        record["timestamp"] = comment.timestamp
    return record


def write_jsonl(collection: CommentCollection, path: str | Path) -> None:
    lines = [
        json.dumps(comment_to_record(c), ensure_ascii=False, sort_keys=True)
        for c in collection
    ]
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def write_skip_report(skipped: tuple[SkippedRecord, ...], path: str | Path) -> None:
    lines = [
        json.dumps({"line": s.line, "reason": s.reason}, ensure_ascii=False, sort_keys=True)
        for s in skipped
    ]
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")
