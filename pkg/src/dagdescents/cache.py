"""Plain-text snapshots of the engine's memo tables.

File layout (one record per line; a header with zero records is legal):

    DESCENTS-CACHE v1
    d 0 0 1
    d 1 0 1
    t 1 0 1
    ...

Each record is "<family> <n> <k> <decimal-value>" with the family drawn
from the engine's six tags.  Keys must not repeat.  Loading validates the
syntax strictly and then re-checks every record that overlaps the golden
fixture, so a cache file cannot silently smuggle wrong d values for
n <= 8; everything else is trusted (it skips recomputation, which is the
point of the file).
"""
from __future__ import annotations

import os

from .engine import FAMILIES, DescentCounter
from .golden import golden_value

HEADER = "DESCENTS-CACHE v1"

#: Environment variable that may supply a default cache path for the CLI.
ENV_VAR = "DESCENTS_CACHE"


class CacheError(Exception):
    """A cache file is corrupt or contradicts known-good values."""


def save_cache(path: str | os.PathLike, counter: DescentCounter) -> int:
    """Write all memoized entries of ``counter``; returns the record count."""
    lines = [HEADER]
    count = 0
    for family, n, k, value in counter.entries():
        lines.append(f"{family} {n} {k} {value}")
        count += 1
    with open(path, "w", encoding="ascii", newline="") as handle:
        handle.write("\n".join(lines) + "\n")
    return count


def load_records(path: str | os.PathLike) -> list[tuple[str, int, int, int]]:
    """Parse and validate a cache file; raises CacheError on any defect."""
    try:
        with open(path, "r", encoding="ascii", newline="") as handle:
            lines = handle.read().splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise CacheError(f"cannot read cache file {path}: {exc}") from exc
    if not lines or lines[0] != HEADER:
        found = lines[0] if lines else "<empty file>"
        raise CacheError(f"bad cache header: expected {HEADER!r}, "
                         f"found {found!r}")
    records: list[tuple[str, int, int, int]] = []
    seen: set[tuple[str, int, int]] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split(" ")
        if len(fields) != 4:
            raise CacheError(f"line {lineno}: expected 4 fields, "
                             f"got {len(fields)}")
        family, n_text, k_text, value_text = fields
        if family not in FAMILIES:
            raise CacheError(f"line {lineno}: unknown family {family!r}")
        if not (n_text.isdigit() and k_text.isdigit()
                and value_text.isdigit()):
            raise CacheError(f"line {lineno}: fields must be decimal "
                             f"integers: {line!r}")
        key = (family, int(n_text), int(k_text))
        if key in seen:
            raise CacheError(f"line {lineno}: duplicate key "
                             f"{family} {key[1]} {key[2]}")
        seen.add(key)
        records.append((family, key[1], key[2], int(value_text)))
    return records


def apply_records(counter: DescentCounter,
                  records: list[tuple[str, int, int, int]]) -> None:
    """Preload validated records into ``counter``.

    Every d record inside the golden fixture's range is compared against
    the fixture first, so no preloading happens at all if any record
    disagrees with known-good values.
    """
    for family, n, k, value in records:
        if family != "d":
            continue
        expected = golden_value(n, k)
        if expected is not None and value != expected:
            raise CacheError(f"cache conflicts with known values: "
                             f"d {n} {k} expected {expected}, "
                             f"cache has {value}")
    for family, n, k, value in records:
        try:
            counter.preload(family, n, k, value)
        except ValueError as exc:
            raise CacheError(f"rejected cache entry "
                             f"{family} {n} {k} {value}: {exc}") from exc


def clear_cache(path: str | os.PathLike) -> None:
    """Truncate the cache file (creating it empty if missing)."""
    with open(path, "w", encoding="ascii"):
        pass
