"""Append-only JSON-lines store of solved instances with certificates.

One record per line; the latest record for a (a, b, pattern, variant) key
wins on load.  Certificates are stored as BGF text and re-verified against
the embedder on demand, so a cache survives tool changes or reveals
corruption instead of propagating it.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .embedding import is_family_free
from .graphs import BgfParseError, is_connected, parse_bgf, serialize_bgf
from .patterns import parse_target
from .solver import SolveResult


@dataclass(frozen=True)
class CacheRecord:
    a: int
    b: int
    pattern: str
    variant: str
    value: int
    status: str
    certificate_bgf: str
    stats: dict
    timestamp: str
    tool_version: str

    @property
    def key(self) -> tuple[int, int, str, str]:
        return (self.a, self.b, self.pattern, self.variant)

    def to_json(self) -> str:
        return json.dumps(
            {
                "a": self.a,
                "b": self.b,
                "pattern": self.pattern,
                "variant": self.variant,
                "value": self.value,
                "status": self.status,
                "certificate_bgf": self.certificate_bgf,
                "stats": self.stats,
                "timestamp": self.timestamp,
                "tool_version": self.tool_version,
            },
            sort_keys=True,
        )


_REQUIRED = {
    "a": int,
    "b": int,
    "pattern": str,
    "variant": str,
    "value": int,
    "status": str,
    "certificate_bgf": str,
    "stats": dict,
    "timestamp": str,
    "tool_version": str,
}


def record_from_result(res: SolveResult) -> CacheRecord:
    return CacheRecord(
        a=res.a,
        b=res.b,
        pattern=res.target_name,
        variant=res.variant,
        value=res.value,
        status=res.status,
        certificate_bgf=serialize_bgf(res.certificate),
        stats={
            "nodes": res.stats.nodes,
            "memo_hits": res.stats.memo_hits,
            "wall_time_s": round(res.stats.wall_time, 6),
        },
        timestamp=time.strftime("%Y-%m-%dT%H:%M:%S", time.gmtime()),
        tool_version=__version__,
    )


def append_record(path: str | Path, record: CacheRecord) -> None:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    with p.open("a", encoding="utf-8") as fh:
        fh.write(record.to_json() + "\n")


def _parse_line(line: str, line_no: int) -> CacheRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ValueError(f"line {line_no}: not valid JSON ({exc.msg})") from exc
    if not isinstance(obj, dict):
        raise ValueError(f"line {line_no}: record is not an object")
    for field_name, typ in _REQUIRED.items():
        if field_name not in obj:
            raise ValueError(f"line {line_no}: missing field {field_name!r}")
        if not isinstance(obj[field_name], typ):
            raise ValueError(f"line {line_no}: field {field_name!r} has wrong type")
    return CacheRecord(**{k: obj[k] for k in _REQUIRED})


def load_records(path: str | Path) -> tuple[dict[tuple, CacheRecord], list[str]]:
    """(records latest-per-key, parse errors); missing file is an error."""
    p = Path(path)
    text = p.read_text(encoding="utf-8")
    records: dict[tuple, CacheRecord] = {}
    errors: list[str] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rec = _parse_line(line, line_no)
        except ValueError as exc:
            errors.append(str(exc))
            continue
        records[rec.key] = rec
    return records, errors


def verify_records(path: str | Path) -> tuple[int, list[str]]:
    """Re-check every stored certificate; returns (ok_count, failures)."""
    p = Path(path)
    text = p.read_text(encoding="utf-8")
    ok = 0
    failures: list[str] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rec = _parse_line(line, line_no)
        except ValueError as exc:
            failures.append(str(exc))
            continue
        try:
            g = parse_bgf(rec.certificate_bgf)
        except BgfParseError as exc:
            failures.append(f"line {line_no}: bad certificate ({exc})")
            continue
        if (g.a, g.b) != (rec.a, rec.b):
            failures.append(f"line {line_no}: certificate parts mismatch")
            continue
        if g.edge_count != rec.value:
            failures.append(
                f"line {line_no}: certificate has {g.edge_count} edges, "
                f"record says {rec.value}"
            )
            continue
        try:
            target = parse_target(rec.pattern)
        except ValueError as exc:
            failures.append(f"line {line_no}: bad pattern literal ({exc})")
            continue
        if not is_family_free(g, target):
            failures.append(f"line {line_no}: certificate contains {rec.pattern}")
            continue
        if rec.variant == "bc" and not is_connected(g):
            failures.append(f"line {line_no}: certificate is not spanning-connected")
            continue
        ok += 1
    return ok, failures


def prune_records(path: str | Path) -> tuple[int, int]:
    """Drop records from other tool versions; returns (kept, removed)."""
    records, errors = load_records(path)
    keep = [r for r in records.values() if r.tool_version == __version__]
    removed = len(records) - len(keep) + len(errors)
    p = Path(path)
    with p.open("w", encoding="utf-8") as fh:
        for rec in sorted(keep, key=lambda r: r.key):
            fh.write(rec.to_json() + "\n")
    return len(keep), removed
