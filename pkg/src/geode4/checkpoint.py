"""Checkpoint files for long diagonal runs.

Plain text, ASCII, LF line endings, every number a canonical decimal:

    GEODE-CKPT 1
    n <n>
    s <s>
    C <count>
    <m4> <m5> <value>     one line per cell, m4-major, m5 ascending
    ...
    G <count>
    ...
    END

``count`` is always (n + 1)^2.  The C section holds the count slice at s,
the G section the Geode slice at s; both are positive everywhere.  Writes
go to a temp file in the same directory followed by an atomic rename, so
an interrupted save never leaves a truncated file at the final name.
Loads validate structure, cell order, counts and positivity, and report
the offending line number on failure.
"""

from __future__ import annotations

import os
import re
import warnings

from .errors import CheckpointFormatError, CheckpointMismatchError
from .geode import GeodeSlice
from .hypercat import CatalanSlice

MAGIC = "GEODE-CKPT"
VERSION = 1

_NAME_RE = re.compile(r"^geode-n(\d+)-s(\d+)\.ckpt$")


def checkpoint_path(directory: str, n: int, s: int) -> str:
    """Conventional file name for the slice-s checkpoint of a size-n run."""
    return os.path.join(directory, f"geode-n{n}-s{s:06d}.ckpt")


def save_checkpoint(path: str, n: int, s: int, c_slice: CatalanSlice, g_slice: GeodeSlice) -> None:
    """Write both slices atomically to ``path``."""
    if c_slice.n != n or g_slice.n != n or c_slice.s != s or g_slice.s != s:
        raise ValueError(
            f"slices are (n={c_slice.n}, s={c_slice.s})/(n={g_slice.n}, s={g_slice.s}), "
            f"expected (n={n}, s={s})"
        )
    count = (n + 1) * (n + 1)
    if len(c_slice.grid) != count or len(g_slice.grid) != count:
        raise ValueError(f"grids must hold {count} cells")
    tmp = path + ".tmp"
    try:
        with open(tmp, "w", encoding="ascii", newline="") as fh:
            fh.write(f"{MAGIC} {VERSION}\n")
            fh.write(f"n {n}\n")
            fh.write(f"s {s}\n")
            for tag, grid in (("C", c_slice.grid), ("G", g_slice.grid)):
                fh.write(f"{tag} {count}\n")
                idx = 0
                for m4 in range(n + 1):
                    for m5 in range(n + 1):
                        fh.write(f"{m4} {m5} {grid[idx]}\n")
                        idx += 1
            fh.write("END\n")
            fh.flush()
            os.fsync(fh.fileno())
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
    os.replace(tmp, path)


def _parse_nat(text: str, path: str, lineno: int, what: str) -> int:
    # canonical decimal: digits only, no leading zero unless the value is 0
    if not text.isdigit() or (len(text) > 1 and text[0] == "0"):
        raise CheckpointFormatError(f"{path}:{lineno}: {what} is not a canonical decimal: {text!r}")
    return int(text)


def load_checkpoint(path: str):
    """Parse a checkpoint; returns (n, s, CatalanSlice, GeodeSlice)."""
    with open(path, "r", encoding="ascii", newline="") as fh:
        lines = iter(enumerate(fh, start=1))

        def next_line(what):
            try:
                lineno, raw = next(lines)
            except StopIteration:
                raise CheckpointFormatError(
                    f"{path}: unexpected end of file while reading {what}"
                ) from None
            if not raw.endswith("\n"):
                raise CheckpointFormatError(f"{path}:{lineno}: missing trailing newline")
            return lineno, raw[:-1]

        lineno, header = next_line("header")
        if header != f"{MAGIC} {VERSION}":
            parts = header.split(" ")
            if len(parts) == 2 and parts[0] == MAGIC:
                raise CheckpointFormatError(
                    f"{path}:{lineno}: unsupported checkpoint version {parts[1]!r}; "
                    f"this reader handles version {VERSION}"
                )
            raise CheckpointFormatError(f"{path}:{lineno}: bad header {header!r}")

        n = _read_field(next_line, "n", path)
        s = _read_field(next_line, "s", path)
        if s > n:
            raise CheckpointFormatError(f"{path}: slice index s={s} exceeds n={n}")

        count = (n + 1) * (n + 1)
        c_grid = _read_section(next_line, "C", n, count, path)
        g_grid = _read_section(next_line, "G", n, count, path)

        lineno, sentinel = next_line("END sentinel")
        if sentinel != "END":
            raise CheckpointFormatError(f"{path}:{lineno}: expected END, got {sentinel!r}")
        try:
            lineno, _extra = next(lines)
        except StopIteration:
            pass
        else:
            raise CheckpointFormatError(f"{path}:{lineno}: data after END")

    return n, s, CatalanSlice(n, s, c_grid), GeodeSlice(n, s, g_grid)


def _read_field(next_line, name: str, path: str) -> int:
    lineno, line = next_line(f"field {name}")
    parts = line.split(" ")
    if len(parts) != 2 or parts[0] != name:
        raise CheckpointFormatError(f"{path}:{lineno}: expected '{name} <value>', got {line!r}")
    return _parse_nat(parts[1], path, lineno, name)


def _read_section(next_line, tag: str, n: int, count: int, path: str) -> list:
    lineno, line = next_line(f"{tag} section header")
    parts = line.split(" ")
    if len(parts) != 2 or parts[0] != tag:
        raise CheckpointFormatError(f"{path}:{lineno}: expected '{tag} <count>', got {line!r}")
    declared = _parse_nat(parts[1], path, lineno, f"{tag} cell count")
    if declared != count:
        raise CheckpointFormatError(
            f"{path}:{lineno}: {tag} section declares {declared} cells, expected {count}"
        )
    grid = [None] * count
    idx = 0
    for m4 in range(n + 1):
        for m5 in range(n + 1):
            lineno, line = next_line(f"{tag} cell ({m4},{m5})")
            parts = line.split(" ")
            if len(parts) != 3:
                raise CheckpointFormatError(
                    f"{path}:{lineno}: expected '<m4> <m5> <value>', got {line!r}"
                )
            if parts[0] != str(m4) or parts[1] != str(m5):
                raise CheckpointFormatError(
                    f"{path}:{lineno}: expected cell ({m4},{m5}), got ({parts[0]},{parts[1]})"
                )
            value = _parse_nat(parts[2], path, lineno, "cell value")
            if value <= 0:
                raise CheckpointFormatError(f"{path}:{lineno}: cell value must be positive")
            grid[idx] = value
            idx += 1
    return grid


def scan_checkpoints(directory: str) -> list:
    """All (n, s, path) triples named like checkpoints in ``directory``."""
    found = []
    for name in os.listdir(directory):
        match = _NAME_RE.match(name)
        if match:
            found.append((int(match.group(1)), int(match.group(2)), os.path.join(directory, name)))
    return sorted(found)


def find_latest(directory: str, n: int):
    """Resume point (s, CatalanSlice, GeodeSlice) from ``directory``, or None.

    Candidates are taken by file name, highest slice first.  A file that
    fails to parse is skipped with a warning (an interrupted write, for
    instance, if the platform lost the temp-rename guarantee); a file whose
    contents disagree with its name, or any checkpoint for a different n in
    the directory, aborts the resume instead, because silently starting
    from scratch next to a foreign run is worse than stopping.
    """
    entries = scan_checkpoints(directory)
    foreign = [path for (fn, _, path) in entries if fn != n]
    if foreign:
        raise CheckpointMismatchError(
            f"checkpoint directory {directory} holds checkpoints for a different run "
            f"(e.g. {foreign[0]}); refusing to resume n={n} here"
        )
    for file_n, file_s, path in sorted(entries, reverse=True):
        try:
            loaded_n, loaded_s, c_slice, g_slice = load_checkpoint(path)
        except CheckpointFormatError as exc:
            warnings.warn(f"skipping unreadable checkpoint {path}: {exc}")
            continue
        if loaded_n != n:
            raise CheckpointMismatchError(
                f"{path} is for n={loaded_n}, not n={n}; refusing to resume"
            )
        if loaded_s != file_s:
            raise CheckpointMismatchError(
                f"{path} contains slice {loaded_s}, but its name says {file_s}"
            )
        return loaded_s, c_slice, g_slice
    return None
