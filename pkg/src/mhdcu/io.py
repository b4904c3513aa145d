"""Self-describing binary field dumps, CSV slices, and diagnostics output.

FieldDump format, version 1: one ASCII header line terminated by a newline,

    MHDCU-DUMP 1 problem=<name> variant=<name> nx=<n> ny=<n>
        xmin=<r> xmax=<r> ymin=<r> ymax=<r> time=<r> gamma=<r>

(single line, fields space-separated, floats in shortest round-trip repr),
followed by nx*ny records of 11 little-endian float64 values
(rho, u, v, w, p, b1, b2, b3, E, A, B), x-index varying slowest
(C order of an (nx, ny, 11) array).
"""
from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from . import state as st
from .solver import Grid2D
from .state import GasModel

MAGIC = "MHDCU-DUMP"
VERSION = 1
FIELD_NAMES = ("rho", "u", "v", "w", "p", "b1", "b2", "b3", "E", "A", "B")
DIAG_COLUMNS = ("t", "dt", "div_l1", "div_linf", "mass", "min_rho", "min_p")


class DumpFormatError(ValueError):
    """Raised on malformed dump files; carries the byte offset of the problem."""

    def __init__(self, msg, offset):
        self.offset = offset
        super().__init__(f"{msg} (byte offset {offset})")


@dataclass
class FieldDump:
    """Decoded dump: header metadata plus the (nx, ny, 11) record array."""

    problem: str
    variant: str
    time: float
    gamma: float
    grid: Grid2D
    data: np.ndarray

    @property
    def nx(self):
        return self.grid.nx

    @property
    def ny(self):
        return self.grid.ny

    def var(self, name):
        return self.data[..., FIELD_NAMES.index(name)]


def records_from_field(w, g: GasModel):
    """(nx, ny, 11) primitive records from the augmented conservative field."""
    V = st.cons_to_prim(w[..., :8], g)
    rec = np.empty(w.shape[:2] + (11,))
    rec[..., :8] = V
    rec[..., 8] = w[..., st.EN]
    rec[..., 9:] = w[..., 8:]
    return rec


def field_from_records(rec, g: GasModel):
    """Inverse of records_from_field (E is recomputed through the EOS)."""
    w = np.empty(rec.shape[:2] + (st.NAUG,))
    w[..., :8] = st.prim_to_cons(rec[..., :8], g)
    w[..., 8:] = rec[..., 9:]
    return w


def write_dump(path, w, grid: Grid2D, g: GasModel, time, problem="custom",
               variant="lcd-pccu"):
    """Write the field as a FieldDump; returns the records that were stored."""
    rec = records_from_field(np.asarray(w, dtype=np.float64), g)
    header = (
        f"{MAGIC} {VERSION} problem={problem} variant={variant} "
        f"nx={int(grid.nx)} ny={int(grid.ny)} "
        f"xmin={float(grid.xmin)!r} xmax={float(grid.xmax)!r} "
        f"ymin={float(grid.ymin)!r} ymax={float(grid.ymax)!r} "
        f"time={float(time)!r} gamma={float(g.gamma)!r}\n"
    )
    with open(path, "wb") as fh:
        fh.write(header.encode("ascii"))
        fh.write(np.ascontiguousarray(rec, dtype="<f8").tobytes())
    return rec


def read_dump(path) -> FieldDump:
    with open(path, "rb") as fh:
        header = fh.readline()
        body = fh.read()
    try:
        text = header.decode("ascii").strip()
    except UnicodeDecodeError as e:
        raise DumpFormatError("header is not ASCII", e.start) from None
    parts = text.split()
    if len(parts) < 2 or parts[0] != MAGIC:
        raise DumpFormatError(f"bad magic, expected {MAGIC}", 0)
    if parts[1] != str(VERSION):
        raise DumpFormatError(f"unsupported version {parts[1]}", len(MAGIC) + 1)
    kv = {}
    for item in parts[2:]:
        if "=" not in item:
            raise DumpFormatError(f"malformed header field {item!r}", text.find(item))
        key, val = item.split("=", 1)
        kv[key] = val
    try:
        nx, ny = int(kv["nx"]), int(kv["ny"])
        grid = Grid2D(nx, ny, float(kv["xmin"]), float(kv["xmax"]),
                      float(kv["ymin"]), float(kv["ymax"]))
        time = float(kv["time"])
        gamma = float(kv["gamma"])
    except (KeyError, ValueError) as e:
        raise DumpFormatError(f"incomplete header ({e})", len(header)) from None
    expected = nx * ny * len(FIELD_NAMES) * 8
    if len(body) != expected:
        raise DumpFormatError(
            f"payload has {len(body)} bytes, expected {expected}",
            len(header) + min(len(body), expected),
        )
    data = np.frombuffer(body, dtype="<f8").reshape(nx, ny, len(FIELD_NAMES)).copy()
    return FieldDump(kv.get("problem", "?"), kv.get("variant", "?"), time, gamma,
                     grid, data)


def slice_indices(grid: Grid2D, axis: str, at: float):
    """Snap a slice coordinate to the containing row/column of cell centers."""
    if axis == "x":  # slice runs along x at fixed y
        lo, span, n = grid.ymin, grid.dy, grid.ny
    elif axis == "y":
        lo, span, n = grid.xmin, grid.dx, grid.nx
    else:
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")
    if not (lo <= at <= lo + span * n):
        raise ValueError(f"slice coordinate {at} outside the domain")
    # coordinates on a cell boundary snap to the upper cell; the relative
    # epsilon absorbs division roundoff at exact boundaries
    q = (at - lo) / span
    return int(np.clip(np.floor(q + 1e-9 * max(1.0, abs(q))), 0, n - 1))


def write_slice_csv(dump: FieldDump, axis: str, at: float, variables, path):
    """One CSV row per cell along a grid line through the dump."""
    for v in variables:
        if v not in FIELD_NAMES:
            raise ValueError(f"unknown variable {v!r}; choose from {FIELD_NAMES}")
    idx = slice_indices(dump.grid, axis, at)
    if axis == "x":
        coords = dump.grid.xc
        block = dump.data[:, idx, :]
    else:
        coords = dump.grid.yc
        block = dump.data[idx, :, :]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([axis] + list(variables))
        for i, c in enumerate(coords):
            writer.writerow([repr(float(c))]
                            + [repr(float(block[i, FIELD_NAMES.index(v)]))
                               for v in variables])
    return idx


def write_diagnostics_csv(diag, path):
    """Diagnostics time series as CSV with one row per step."""
    arrays = diag.as_arrays()
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(DIAG_COLUMNS)
        for i in range(arrays["t"].size):
            writer.writerow([repr(float(arrays[c][i])) for c in DIAG_COLUMNS])
