"""Run orchestration: configured diagonal runs, result files, benchmarks."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

from . import _backend
from .checkpoint import checkpoint_path, find_latest, save_checkpoint
from .geode import geode_diagonal
from .hypercat import factorial_cached, hyper_catalan


@dataclass
class RunConfig:
    """Everything a diagonal run needs besides the hooks.

    ``cadence`` saves every k-th slice (slice index divisible by k);
    ``checkpoint_dir`` of None disables checkpointing entirely.
    """

    n: int
    checkpoint_dir: str | None = None
    cadence: int = 1
    workers: int = 1
    out_path: str | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.cadence < 1:
            raise ValueError("cadence must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


def run_diagonal(config: RunConfig, progress=None, kernels=None) -> int:
    """H(config.n) with optional checkpointing, resume and result file.

    When a checkpoint directory is set, the run resumes from the newest
    valid checkpoint in it (refusing the directory if it belongs to a
    different n) and saves a checkpoint after every ``cadence``-th slice.
    Older checkpoint files are kept; only the newest is ever read back.
    """
    resume = None
    save = None
    if config.checkpoint_dir is not None:
        os.makedirs(config.checkpoint_dir, exist_ok=True)
        resume = find_latest(config.checkpoint_dir, config.n)

        def save(s, c_slice, g_slice):
            if s % config.cadence == 0:
                path = checkpoint_path(config.checkpoint_dir, config.n, s)
                save_checkpoint(path, config.n, s, c_slice, g_slice)

    value = geode_diagonal(
        config.n,
        progress=progress,
        checkpoint=save,
        workers=config.workers,
        kernels=kernels,
        resume=resume,
    )
    if config.out_path is not None:
        write_result(config.out_path, config.n, value)
    return value


def summary_lines(n: int, value: int) -> list[str]:
    """Deterministic result block shared by stdout and result files."""
    text = str(value)
    return [
        f"n {n}",
        f"digits {len(text)}",
        f"first30 {text[:30]}",
        f"last12 {text[-12:]}",
        f"value {text}",
    ]


def write_result(path: str, n: int, value: int) -> None:
    """Write the summary block to ``path`` atomically, LF endings."""
    tmp = path + ".tmp"
    try:
        with open(tmp, "w", encoding="ascii", newline="") as fh:
            fh.write("\n".join(summary_lines(n, value)))
            fh.write("\n")
            fh.flush()
            os.fsync(fh.fileno())
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
    os.replace(tmp, path)


BENCH_COLUMNS = ("kind", "n", "backend", "slice", "seconds", "digits", "cells")


def bench(ns, backend: str = "both", progress=None):
    """Timing rows for diagonal runs, one run per (n, backend) pair.

    ``backend`` is 'py', 'cext', 'auto' (whatever this process imported),
    or 'both' for every available backend.  Rows match BENCH_COLUMNS:

    * kind 'seed': cold time to evaluate the slice-0 seed in closed form
      (the factorial cache is cleared first, so this is an upper bound);
    * kind 'slice': one row per slice with its wall time and the digit
      count of the corner cell;
    * kind 'total': whole-run wall time, the maximum digit count seen
      across slices, and the cell count per array for the whole run,
      (n + 1)^3.

    Returns the rows as a list of tuples.
    """
    if backend == "both":
        names = _backend.available_backends()
    elif backend == "auto":
        names = [_backend.BACKEND_NAME]
    else:
        names = [backend]
    rows = []
    for n in ns:
        for name in names:
            ker = _backend.get_kernels(name)
            factorial_cached.cache_clear()
            t0 = time.perf_counter()
            hyper_catalan((1 + 4 * n, 0, 0, 0))
            seed_seconds = time.perf_counter() - t0
            rows.append(("seed", n, name, 0, seed_seconds, "", ""))

            max_digits = 0

            def per_slice(s, seconds, digits, n=n, name=name):
                nonlocal max_digits
                max_digits = max(max_digits, digits)
                rows.append(("slice", n, name, s, seconds, digits, ""))

            t0 = time.perf_counter()
            geode_diagonal(n, progress=per_slice, kernels=ker)
            wall = time.perf_counter() - t0
            rows.append(("total", n, name, "", wall, max_digits, (n + 1) ** 3))
            if progress is not None:
                progress(n, name, wall)
    return rows
