"""Figure renderer for cp-spectra sweep CSVs; a strict consumer that
never recomputes physics."""

from .csvdata import SCHEMAS, SchemaError, SweepData, read_csv
from .figspec import FigSpecError, FigureSpec, load_figspec, parse_figspec
from .render import render, render_figure

__version__ = "0.1.0"
