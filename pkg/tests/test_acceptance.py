"""Acceptance gate: the ten criteria the package must meet.

Each test prints exactly one line

    criterion N PASS: ...
    criterion N FAIL: ...
    criterion N SKIP: ...

to the real stderr, stepping around pytest's capture so the verdicts show
up in a plain ``pytest tests/test_acceptance.py -v`` run.  Command-line
criteria run the installed CLI in subprocesses and include their measured
wall time in the verdict line.
"""

from __future__ import annotations

import math
import os
import subprocess
import sys
import textwrap
import time
from itertools import product

import pytest

from geode4 import (
    GeodeMemo,
    divide_by_s1,
    enumerate_count,
    geode_element,
    hyper_catalan,
    make_c_slice,
    make_c_slice0,
    make_g_slice,
    series_solve,
    verify_geometric_zero,
)
from geode4.errors import InexactDivisionError
from geode4.series import coefficient

PUBLISHED_DIAGONAL = {
    1: 12344,
    2: 2408941884,
    3: 894971463204720,
    4: 446324644841317281200,
    5: 263656050352833337510832640,
    6: 173882340006327290808417397911384,
}


@pytest.fixture
def verdict(capfd):
    """Print one criterion line to the real stderr, then assert it."""

    def report(num: int, ok: bool, detail: str) -> None:
        status = "PASS" if ok else "FAIL"
        with capfd.disabled():
            print(f"criterion {num} {status}: {detail}", file=sys.__stderr__, flush=True)
        assert ok, f"criterion {num} {status}: {detail}"

    return report


def run_cli(*argv: str, timeout=None, cwd=None):
    started = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "geode4", *argv],
        capture_output=True,
        text=True,
        timeout=timeout,
        cwd=cwd,
    )
    return proc, time.perf_counter() - started


def stdout_fields(proc) -> dict:
    """The 'key value' lines of a diag result block as a dict."""
    if proc.returncode != 0:
        return {}
    return dict(line.split(maxsplit=1) for line in proc.stdout.splitlines())


def closed_form(m2: int, m3: int, m4: int, m5: int) -> int:
    """Independent factorial-quotient oracle, asserted integral."""
    e = 1 + 2 * m2 + 3 * m3 + 4 * m4 + 5 * m5
    v = 2 + m2 + 2 * m3 + 3 * m4 + 4 * m5
    den = (
        math.factorial(v - 1)
        * math.factorial(m2)
        * math.factorial(m3)
        * math.factorial(m4)
        * math.factorial(m5)
    )
    q, r = divmod(math.factorial(e - 1), den)
    assert r == 0
    return q


def vectors_up_to_degree(cap: int):
    for m2 in range(cap + 1):
        for m3 in range(cap + 1 - m2):
            for m4 in range(cap + 1 - m2 - m3):
                for m5 in range(cap + 1 - m2 - m3 - m4):
                    yield (m2, m3, m4, m5)


def test_criterion_1_single_count(verdict):
    proc, wall = run_cli("hc", "3", "2", "1", "0", timeout=30)
    ok = proc.returncode == 0 and proc.stdout == "43680\n" and wall < 1.0
    verdict(1, ok, f"hc 3 2 1 0 -> {proc.stdout.strip() or proc.stderr.strip()!r} "
                  f"in {wall:.3f}s (want 43680 in < 1s)")


def test_criterion_2_published_diagonal_values(verdict):
    total = 0.0
    got = {}
    for n in range(1, 7):
        proc, wall = run_cli("diag", str(n), timeout=60)
        total += wall
        value = stdout_fields(proc).get("value")
        got[n] = int(value) if value is not None else None
    ok = got == PUBLISHED_DIAGONAL and total < 10.0
    summary = "all six match" if got == PUBLISHED_DIAGONAL else f"mismatch: {got}"
    verdict(2, ok, f"diag 1..6 {summary} in {total:.2f}s total (< 10s)")


def test_criterion_3_face_layers_and_monomials(verdict):
    want = {1: 4, 2: 56, 3: 1104, 4: 25376, 5: 636480}
    got = {}
    for faces in range(1, 6):
        proc, _ = run_cli("layer", str(faces), timeout=60)
        got[faces] = int(proc.stdout) if proc.returncode == 0 else None
    proc, _ = run_cli("layer", "--monomials", "4001", timeout=60)
    monomials = int(proc.stdout) if proc.returncode == 0 else None
    ok = got == want and monomials == 10690684004
    verdict(3, ok, f"layer 1..5 -> {list(got.values())} (want {list(want.values())}); "
                  f"4001-face monomials -> {monomials} (want 10690684004)")


def test_criterion_4_two_hundred_digit_run(verdict):
    proc, wall = run_cli("diag", "200", timeout=1800)
    digits = stdout_fields(proc).get("digits")
    ok = proc.returncode == 0 and digits == "1201" and wall <= 1800
    verdict(4, ok, f"diag 200 -> {digits} digits in {wall:.1f}s (want 1201 within 1800s)")


def test_criterion_5_flagged_long_run(verdict, capfd):
    if os.environ.get("GEODE4_ACCEPT_LONG") != "1":
        with capfd.disabled():
            print(
                "criterion 5 SKIP: multi-hour diag 1000 reproduction is off by "
                "default; set GEODE4_ACCEPT_LONG=1 to run it",
                file=sys.__stderr__,
                flush=True,
            )
        pytest.skip("long run not flagged on")
    proc, wall = run_cli("diag", "1000", timeout=None)
    fields = stdout_fields(proc)
    value = fields.get("value", "")
    ok = (
        proc.returncode == 0
        and fields.get("digits") == "6303"
        and value.startswith("140604899259853103845676834712574810")
        and value.endswith("629184000")
    )
    verdict(5, ok, f"diag 1000 -> {fields.get('digits')} digits in {wall / 3600.0:.2f}h "
                  f"(want 6303, starting 140604... and ending ...629184000)")


def test_criterion_6_three_way_agreement(verdict):
    series = series_solve(6)
    quotient = divide_by_s1(series)
    memo = GeodeMemo()
    bad = []
    for m in vectors_up_to_degree(5):
        if coefficient(quotient, m) != geode_element(m, memo):
            bad.append(("series-vs-recursion", m))
    slice_cells = 0
    for n in (0, 1):
        c_slice = g_slice = None
        for s in range(n + 1):
            c_slice = make_c_slice0(n) if s == 0 else make_c_slice(s, n, c_slice)
            g_slice = make_g_slice(s, n, c_slice, g_slice if s else None)
            for m4 in range(n + 1):
                for m5 in range(n + 1):
                    slice_cells += 1
                    m = tuple(g_slice.type_at(m4, m5))
                    if g_slice.cell(m4, m5) != geode_element(m, memo):
                        bad.append(("slice-vs-recursion", m))
    for m in vectors_up_to_degree(6):
        if coefficient(series, m) != hyper_catalan(m):
            bad.append(("series-vs-closed-form", m))
    verdict(6, not bad,
           f"series quotient = recursion on all |m| <= 5, slice engine agrees on "
           f"{slice_cells} on-grid cells, series = closed form on all |m| <= 6"
           if not bad else f"disagreements: {bad[:5]}")


def test_criterion_7_identities(verdict):
    bad = []
    memo = GeodeMemo()
    for m in product(range(7), repeat=4):
        if m == (0, 0, 0, 0):
            continue
        total = 0
        for j in range(4):
            if m[j]:
                lowered = list(m)
                lowered[j] -= 1
                total += geode_element(tuple(lowered), memo)
        if total != hyper_catalan(m):
            bad.append(("sum-rule", m))
    for k in range(16):
        catalan = math.comb(2 * (k + 1), k + 1) // (k + 2)
        if geode_element((k, 0, 0, 0), memo) != catalan:
            bad.append(("triangles-only", k))
    for cap in range(9):
        if not verify_geometric_zero(series_solve(cap)):
            bad.append(("defining-identity", cap))
    for cap in range(1, 9):
        try:
            divide_by_s1(series_solve(cap))
        except InexactDivisionError:
            bad.append(("inexact-quotient", cap))
    verdict(7, not bad,
           "sum rule on all nonzero m with components <= 6; triangles-only column is "
           "the shifted Catalan sequence for k <= 15; defining identity and exact "
           "quotient hold for degree caps <= 8"
           if not bad else f"failures: {bad[:5]}")


def test_criterion_8_slice_cells_match_closed_form(verdict):
    bad = []
    checked = 0
    for n in range(7):
        c_slice = None
        for s in range(n + 1):
            c_slice = make_c_slice0(n) if s == 0 else make_c_slice(s, n, c_slice)
            for m4 in range(n + 1):
                for m5 in range(n + 1):
                    checked += 1
                    m = tuple(c_slice.type_at(m4, m5))
                    if c_slice.cell(m4, m5) != closed_form(*m):
                        bad.append((n, s, m4, m5))
    verdict(8, not bad,
           f"{checked} propagated cells equal the closed form for n <= 6; no "
           f"remainder assertion tripped in any intermediate division"
           if not bad else f"cells off: {bad[:5]}")


def test_criterion_9_enumeration_matches_closed_form(verdict):
    bad = []
    checked = skipped = 0
    for m in product(range(4), repeat=4):
        if hyper_catalan(m) > 10**7:
            skipped += 1
            continue
        checked += 1
        if enumerate_count(m) != hyper_catalan(m):
            bad.append(m)
    verdict(9, not bad,
           f"direct tree count = closed form on {checked} censuses with components "
           f"<= 3 ({skipped} skipped as larger than 10^7)"
           if not bad else f"counts off: {bad[:5]}")


KILL_AFTER_SLICE = textwrap.dedent(
    """
    import os, sys
    from geode4.checkpoint import checkpoint_path, find_latest, save_checkpoint
    from geode4.geode import geode_diagonal

    directory, kill_after = sys.argv[1], int(sys.argv[2])
    os.makedirs(directory, exist_ok=True)

    def hook(s, c_slice, g_slice):
        save_checkpoint(checkpoint_path(directory, 6, s), 6, s, c_slice, g_slice)
        if s == kill_after:
            os._exit(9)

    geode_diagonal(6, checkpoint=hook, resume=find_latest(directory, 6))
    """
)


def checkpoint_bytes(directory) -> dict:
    out = {}
    for name in sorted(os.listdir(directory)):
        with open(os.path.join(directory, name), "rb") as fh:
            out[name] = fh.read()
    return out


def test_criterion_10_determinism_and_resume(verdict, tmp_path):
    problems = []

    plain_ck = str(tmp_path / "plain-ck")
    plain_out = str(tmp_path / "plain-out.txt")
    plain, _ = run_cli("diag", "6", "--checkpoint", plain_ck, "--out", plain_out,
                       timeout=300)
    if plain.returncode != 0:
        problems.append(f"uninterrupted run failed: {plain.stderr.strip()}")

    resumed_ck = str(tmp_path / "resumed-ck")
    for kill_after in range(6):
        proc = subprocess.run(
            [sys.executable, "-c", KILL_AFTER_SLICE, resumed_ck, str(kill_after)],
            capture_output=True,
            text=True,
            timeout=300,
        )
        if proc.returncode != 9:
            problems.append(f"kill stage {kill_after} exited {proc.returncode}")
    resumed_out = str(tmp_path / "resumed-out.txt")
    resumed, _ = run_cli("diag", "6", "--checkpoint", resumed_ck, "--out", resumed_out,
                         timeout=300)
    if resumed.returncode != 0:
        problems.append(f"resumed run failed: {resumed.stderr.strip()}")
    elif resumed.stdout != plain.stdout:
        problems.append("resumed stdout differs from the uninterrupted run")
    if not problems:
        with open(plain_out, "rb") as fh:
            plain_bytes = fh.read()
        with open(resumed_out, "rb") as fh:
            resumed_bytes = fh.read()
        if resumed_bytes != plain_bytes:
            problems.append("resumed result file differs byte-for-byte")
        if checkpoint_bytes(resumed_ck) != checkpoint_bytes(plain_ck):
            problems.append("resumed checkpoint files differ byte-for-byte")

    worker_runs = {}
    for workers in (1, 2, 4):
        directory = tmp_path / f"workers-{workers}"
        out_path = str(directory / "out.txt")
        proc, _ = run_cli("diag", "6", "--workers", str(workers),
                          "--checkpoint", str(directory / "ck"), "--out", out_path,
                          timeout=300)
        if proc.returncode != 0:
            problems.append(f"workers={workers} run failed: {proc.stderr.strip()}")
            continue
        with open(out_path, "rb") as fh:
            worker_runs[workers] = (proc.stdout, fh.read(),
                                    checkpoint_bytes(directory / "ck"))
    if len(worker_runs) == 3:
        if not (worker_runs[1] == worker_runs[2] == worker_runs[4]):
            problems.append("worker counts 1, 2, 4 disagree")

    verdict(10, not problems,
           "six kill/resume stages reproduce the uninterrupted H(6) byte-for-byte "
           "(stdout, result file and all seven checkpoints); worker counts 1, 2, 4 "
           "produce identical outputs"
           if not problems else "; ".join(problems))
