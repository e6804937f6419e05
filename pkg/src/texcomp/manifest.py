"""Batch manifests: one JSON object per line, or CSV with a header.

JSONL entries look like {"path": "...", "subcorpus": "...", "id": "..."} with
``id`` optional (defaults to the path). The CSV alternative carries a header
``path,subcorpus,id`` (the id column may be omitted or left blank) for class
lists that start life in a spreadsheet.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ManifestError


@dataclass(frozen=True)
class ManifestEntry:
    path: str
    subcorpus: str
    id: str


def _validate(entries: list[ManifestEntry]) -> list[ManifestEntry]:
    seen: set[str] = set()
    for entry in entries:
        if not entry.path:
            raise ManifestError(f"manifest entry {entry.id!r} has an empty path")
        if not entry.subcorpus:
            raise ManifestError(f"manifest entry {entry.id!r} has an empty subcorpus label")
        if entry.id in seen:
            raise ManifestError(f"duplicate manifest id {entry.id!r}")
        seen.add(entry.id)
    return entries


def _parse_jsonl(text: str) -> list[ManifestEntry]:
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as err:
            raise ManifestError(f"manifest line {lineno}: invalid JSON ({err})") from err
        if not isinstance(record, dict) or "path" not in record or "subcorpus" not in record:
            raise ManifestError(
                f"manifest line {lineno}: expected an object with 'path' and 'subcorpus'"
            )
        path = str(record["path"])
        entries.append(
            ManifestEntry(
                path=path,
                subcorpus=str(record["subcorpus"]),
                id=str(record.get("id") or path),
            )
        )
    return entries


def _parse_csv(text: str) -> list[ManifestEntry]:
    reader = csv.DictReader(io.StringIO(text))
    fields = reader.fieldnames or []
    if "path" not in fields or "subcorpus" not in fields:
        raise ManifestError("manifest CSV needs a header with 'path' and 'subcorpus' columns")
    entries = []
    for record in reader:
        path = (record.get("path") or "").strip()
        entries.append(
            ManifestEntry(
                path=path,
                subcorpus=(record.get("subcorpus") or "").strip(),
                id=(record.get("id") or "").strip() or path,
            )
        )
    return entries


def parse_manifest(text: str) -> list[ManifestEntry]:
    """Parse manifest text, sniffing JSONL (first char '{') versus CSV."""
    stripped = text.lstrip()
    if not stripped:
        return []
    if stripped.startswith("{"):
        return _validate(_parse_jsonl(text))
    return _validate(_parse_csv(text))


def load_manifest(path: str | Path) -> list[ManifestEntry]:
    """Read and parse a manifest file (UTF-8)."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as err:
        raise ManifestError(f"cannot read manifest {path}: {err}") from err
    return parse_manifest(text)
