"""Readers for the solver's output artifacts.

Field dumps: one ASCII header line

    MHDCU-DUMP 1 problem=<name> variant=<name> nx=<n> ny=<n>
        xmin=<r> xmax=<r> ymin=<r> ymax=<r> time=<r> gamma=<r>

followed by nx*ny little-endian float64 records of
(rho, u, v, w, p, b1, b2, b3, E, A, B), x-index slowest.

CSV artifacts: slice tables (first column: coordinate along the slice)
and diagnostics time series with a header row.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

MAGIC = "MHDCU-DUMP"
FIELD_NAMES = ("rho", "u", "v", "w", "p", "b1", "b2", "b3", "E", "A", "B")
DERIVED = ("speed", "magp")


class ParseError(ValueError):
    """Malformed artifact; carries the byte offset where parsing failed."""

    def __init__(self, msg, offset):
        self.offset = offset
        super().__init__(f"{msg} (byte offset {offset})")


@dataclass
class Dump:
    problem: str
    variant: str
    time: float
    gamma: float
    nx: int
    ny: int
    xmin: float
    xmax: float
    ymin: float
    ymax: float
    data: np.ndarray  # (nx, ny, 11)

    def variable(self, name):
        """A stored or derived field on the grid."""
        if name in FIELD_NAMES:
            return self.data[..., FIELD_NAMES.index(name)]
        if name == "speed":
            u, v, w = (self.variable(c) for c in ("u", "v", "w"))
            return np.sqrt(u * u + v * v + w * w)
        if name == "magp":
            b1, b2, b3 = (self.variable(c) for c in ("b1", "b2", "b3"))
            return 0.5 * (b1 * b1 + b2 * b2 + b3 * b3)
        raise KeyError(
            f"unknown variable {name!r}; stored: {', '.join(FIELD_NAMES)}; "
            f"derived: {', '.join(DERIVED)}")

    def cell_centers(self):
        dx = (self.xmax - self.xmin) / self.nx
        dy = (self.ymax - self.ymin) / self.ny
        x = self.xmin + (np.arange(self.nx) + 0.5) * dx
        y = self.ymin + (np.arange(self.ny) + 0.5) * dy
        return x, y

    def edges(self):
        x = np.linspace(self.xmin, self.xmax, self.nx + 1)
        y = np.linspace(self.ymin, self.ymax, self.ny + 1)
        return x, y


def read_dump(path) -> Dump:
    with open(path, "rb") as fh:
        header = fh.readline()
        body = fh.read()
    try:
        text = header.decode("ascii")
    except UnicodeDecodeError as e:
        raise ParseError("non-ASCII header", e.start) from None
    parts = text.split()
    if not parts or parts[0] != MAGIC:
        raise ParseError(f"missing {MAGIC} magic", 0)
    if len(parts) < 2 or parts[1] != "1":
        raise ParseError("unsupported dump version", len(MAGIC) + 1)
    fields = {}
    for item in parts[2:]:
        key, _, val = item.partition("=")
        if not _:
            raise ParseError(f"malformed header entry {item!r}", text.find(item))
        fields[key] = val
    try:
        nx, ny = int(fields["nx"]), int(fields["ny"])
        meta = {k: float(fields[k])
                for k in ("xmin", "xmax", "ymin", "ymax", "time", "gamma")}
    except (KeyError, ValueError) as e:
        raise ParseError(f"incomplete header: {e}", len(header)) from None
    expected = nx * ny * len(FIELD_NAMES) * 8
    if len(body) != expected:
        raise ParseError(f"expected {expected} payload bytes, found {len(body)}",
                         len(header) + min(len(body), expected))
    data = np.frombuffer(body, dtype="<f8").reshape(nx, ny, len(FIELD_NAMES))
    return Dump(fields.get("problem", "?"), fields.get("variant", "?"),
                meta["time"], meta["gamma"], nx, ny,
                meta["xmin"], meta["xmax"], meta["ymin"], meta["ymax"],
                data.copy())


def read_csv_table(path):
    """(header, columns) of a numeric CSV artifact."""
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or len(rows) < 2:
        raise ParseError(f"{path}: empty table", 0)
    header = rows[0]
    try:
        body = np.array([[float(v) for v in row] for row in rows[1:]])
    except ValueError as e:
        raise ParseError(f"{path}: non-numeric cell ({e})", 0) from None
    if body.shape[1] != len(header):
        raise ParseError(f"{path}: ragged rows", 0)
    return header, {name: body[:, i] for i, name in enumerate(header)}
