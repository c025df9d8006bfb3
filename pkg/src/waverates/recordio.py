"""CSV record streams for trees, grids, and experiment tables.

Every emitted table starts with comment rows (prefixed '#') carrying the
structural header or the manifest hash, followed by a named column header.
Floats are written with repr for lossless round trips.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .dyadic import CoefficientTree
from .wavelet import GridSignal

__all__ = [
    "write_tree",
    "read_tree",
    "write_grid",
    "read_grid",
    "write_table",
    "read_table",
]


def write_tree(tree: CoefficientTree, path) -> None:
    """Record stream (j, k..., value), one row per nonzero coefficient."""
    path = Path(path)
    with path.open("w", newline="") as fh:
        fh.write(f"# coefficient-tree,d={tree.d},j_max={tree.j_max},scaling={tree.scaling!r}\n")
        writer = csv.writer(fh)
        writer.writerow(["j", "k", "value"] if tree.d == 1 else ["j", "k1", "k2", "value"])
        for idx, value in tree.items():
            writer.writerow([idx.j, *idx.k, repr(value)])


def read_tree(path) -> CoefficientTree:
    path = Path(path)
    with path.open() as fh:
        header = fh.readline().strip()
        if not header.startswith("# coefficient-tree,"):
            raise ValueError(f"{path}: not a coefficient-tree stream")
        meta = dict(item.split("=", 1) for item in header[2:].split(",")[1:])
        d, j_max = int(meta["d"]), int(meta["j_max"])
        scaling = float(meta["scaling"])
        reader = csv.reader(fh)
        next(reader)  # column header
        items = []
        for row in reader:
            j, *k, value = row
            items.append(((int(j), tuple(int(c) for c in k)), float(value)))
    return CoefficientTree.from_items(d, j_max, scaling, items)


def write_grid(signal: GridSignal, path) -> None:
    path = Path(path)
    with path.open("w", newline="") as fh:
        fh.write(f"# grid-signal,resolution_log2={signal.resolution_log2}\n")
        fh.write("sample\n")
        for v in signal.samples:
            fh.write(f"{float(v)!r}\n")


def read_grid(path) -> GridSignal:
    path = Path(path)
    with path.open() as fh:
        header = fh.readline().strip()
        if not header.startswith("# grid-signal,"):
            raise ValueError(f"{path}: not a grid-signal stream")
        res = int(header.split("=", 1)[1])
        next(fh)  # column header
        samples = np.array([float(line) for line in fh if line.strip()])
    return GridSignal(res, samples)


def write_table(path, columns: list[str], rows, manifest_hash: str = "") -> None:
    """Generic experiment table: hash comment row, column header, data rows."""
    path = Path(path)
    with path.open("w", newline="") as fh:
        if manifest_hash:
            fh.write(f"# manifest_hash={manifest_hash}\n")
        writer = csv.writer(fh)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([repr(float(v)) if isinstance(v, float) else v for v in row])


def read_table(path) -> tuple[list[str], list[list[str]]]:
    """Read back a table written by write_table (comment rows skipped)."""
    path = Path(path)
    with path.open() as fh:
        rows = [row for row in csv.reader(fh) if row and not row[0].startswith("#")]
    return rows[0], rows[1:]
