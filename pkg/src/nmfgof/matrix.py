"""Dense non-negative matrices and the structural operations built on them.

Orientation is fixed as words x documents: a count matrix has one row per
vocabulary word (V rows) and one column per document (M columns).  Entries
are stored as float64 in row-major order even for integer counts, because
the violation experiments feed real-valued Gamma/Normal data through the
same pipeline.  Instances are immutable after construction and safe to
share across concurrent bootstrap replicates.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .errors import BoundsError, DomainError, ShapeError


def _frozen_values(values, what: str) -> np.ndarray:
    arr = np.array(values, dtype=np.float64, order="C")
    if arr.ndim != 2:
        raise ShapeError(f"{what} must be 2-dimensional, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ShapeError(f"{what} must have positive dimensions, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{what} entries must be finite")
    if np.any(arr < 0):
        raise DomainError(f"{what} entries must be non-negative")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class CountMatrix:
    """Observed document-term matrix X (V words x M documents), counts >= 0."""

    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_values(self.values, "count matrix"))

    @property
    def rows(self) -> int:
        return self.values.shape[0]

    @property
    def cols(self) -> int:
        return self.values.shape[1]

    @property
    def total(self) -> float:
        return float(self.values.sum())


@dataclass(frozen=True, eq=False)
class RateMatrix:
    """Poisson rate matrix (same words x documents layout as CountMatrix)."""

    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_values(self.values, "rate matrix"))

    @property
    def rows(self) -> int:
        return self.values.shape[0]

    @property
    def cols(self) -> int:
        return self.values.shape[1]


def stack(groups: list[CountMatrix]) -> CountMatrix:
    """Concatenate group matrices along the document axis, in list order.

    All groups must share the vocabulary dimension V; the result is
    V x (sum of group widths) and every source column appears exactly once,
    unmodified.
    """
    if not groups:
        raise ShapeError("stack requires at least one group")
    v = groups[0].rows
    for g, m in enumerate(groups):
        if m.rows != v:
            raise ShapeError(
                f"group {g} has {m.rows} vocabulary rows, expected {v}"
            )
    return CountMatrix(np.concatenate([m.values for m in groups], axis=1))


def stack_offsets(groups: list[CountMatrix]) -> tuple[int, ...]:
    """Starting column of each group inside ``stack(groups)``."""
    starts = np.concatenate([[0], np.cumsum([m.cols for m in groups])[:-1]])
    return tuple(int(s) for s in starts)


def slice_columns(x: CountMatrix, start: int, stop: int) -> CountMatrix:
    """Copy of columns ``[start, stop)``; inverse of stack at recorded offsets."""
    if not (0 <= start < stop <= x.cols):
        raise BoundsError(
            f"column interval [{start}, {stop}) outside [0, {x.cols})"
        )
    return CountMatrix(x.values[:, start:stop].copy())


def _is_float(cell: str) -> bool:
    try:
        float(cell)
        return True
    except ValueError:
        return False


def read_matrix_csv(path) -> tuple[CountMatrix, list[str] | None, list[str] | None]:
    """Read a matrix CSV: one row per word, one column per document.

    A first header row of document labels and a first column of word labels
    are both optional and auto-detected: any row/column whose cells do not
    all parse as numbers is treated as labels.  Returns
    ``(matrix, word_labels, doc_labels)`` with ``None`` where absent.
    """
    with open(path, newline="") as fh:
        raw = [row for row in csv.reader(fh) if row]
    if not raw:
        raise DomainError(f"{path}: empty matrix file")
    has_header = not all(_is_float(c) for c in raw[0][1:] or raw[0])
    body = raw[1:] if has_header else raw
    if not body:
        raise DomainError(f"{path}: no data rows")
    has_labels = not all(_is_float(r[0]) for r in body)
    doc_labels = None
    if has_header:
        doc_labels = raw[0][1:] if has_labels else raw[0]
    word_labels = [r[0] for r in body] if has_labels else None
    data = [[float(c) for c in (r[1:] if has_labels else r)] for r in body]
    widths = {len(r) for r in data}
    if len(widths) != 1:
        raise ShapeError(f"{path}: ragged rows with widths {sorted(widths)}")
    return CountMatrix(np.array(data)), word_labels, doc_labels


def write_matrix_csv(path, values, word_labels=None, doc_labels=None) -> None:
    """Write a matrix (array or matrix object) in the layout read_matrix_csv expects."""
    arr = np.asarray(getattr(values, "values", values), dtype=np.float64)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        if doc_labels is not None:
            head = ([""] if word_labels is not None else []) + list(doc_labels)
            writer.writerow(head)
        for i in range(arr.shape[0]):
            row = [repr(v) for v in arr[i].tolist()]
            if word_labels is not None:
                row = [word_labels[i]] + row
            writer.writerow(row)
