"""Figures from MHD solver output: field maps, slice overlays, divergence norms."""
from .dumps import Dump, ParseError, read_csv_table, read_dump
from .render import PlotJob, render

__all__ = ["Dump", "ParseError", "PlotJob", "read_csv_table", "read_dump", "render"]
