"""Exact subdivision counts, the Geode array, and its diagonal.

The package computes three interlocking families of integers:

* hyper-Catalan numbers C[m2, m3, m4, m5]: how many ways a roofed polygon
  can be subdivided into m2 triangles, m3 quadrilaterals, m4 pentagons and
  m5 hexagons (:mod:`geode4.hypercat`);
* the Geode array G, the series quotient (S - 1) / (t2 + t3 + t4 + t5)
  of the generating series S of those counts (:mod:`geode4.geode`);
* the Geode diagonal H(n) = G[n, n, n, n], computed at scale by slice
  propagation with checkpoint and resume support (:mod:`geode4.runner`).

Hot loops run on a compiled kernel when available and on a pure-Python
twin otherwise; see :mod:`geode4._backend`.  Everything is exact integer
arithmetic, and every internal division asserts a zero remainder.
"""

from ._backend import BACKEND_NAME as KERNEL_BACKEND
from ._backend import available_backends
from .checkpoint import (
    checkpoint_path,
    find_latest,
    load_checkpoint,
    save_checkpoint,
    scan_checkpoints,
)
from .errors import (
    BudgetExceededError,
    CheckpointFormatError,
    CheckpointMismatchError,
    InexactDivisionError,
    NonPositiveCellError,
)
from .geode import (
    GeodeMemo,
    GeodeSlice,
    geode_diagonal,
    geode_element,
    make_g_slice,
)
from .hypercat import (
    CatalanSlice,
    factorial_cached,
    hyper_catalan,
    make_c_slice,
    make_c_slice0,
    neighbor_ratio,
)
from .runner import RunConfig, bench, run_diagonal, summary_lines, write_result
from .series import (
    TruncatedSeries,
    coefficient,
    divide_by_s1,
    face_layer_count,
    monomial_count,
    series_solve,
    verify_geometric_zero,
)
from .trees import enumerate_count, enumerate_trees, render_tree, tree_type
from .typevec import TypeVector, edges, faces, format_type, parse_type, vertices

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CatalanSlice",
    "CheckpointFormatError",
    "CheckpointMismatchError",
    "GeodeMemo",
    "GeodeSlice",
    "InexactDivisionError",
    "KERNEL_BACKEND",
    "NonPositiveCellError",
    "RunConfig",
    "TruncatedSeries",
    "TypeVector",
    "available_backends",
    "bench",
    "checkpoint_path",
    "coefficient",
    "divide_by_s1",
    "edges",
    "enumerate_count",
    "enumerate_trees",
    "face_layer_count",
    "faces",
    "factorial_cached",
    "find_latest",
    "format_type",
    "geode_diagonal",
    "geode_element",
    "hyper_catalan",
    "load_checkpoint",
    "make_c_slice",
    "make_c_slice0",
    "make_g_slice",
    "monomial_count",
    "neighbor_ratio",
    "parse_type",
    "render_tree",
    "run_diagonal",
    "save_checkpoint",
    "scan_checkpoints",
    "series_solve",
    "summary_lines",
    "tree_type",
    "verify_geometric_zero",
    "vertices",
    "write_result",
]
