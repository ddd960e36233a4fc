"""Exact computations with the higher Catalan numbers and genus 0/1 map counts."""

from .catalan import (
    catalan_by_recursion,
    eta,
    higher_catalan,
    log_coefficient,
    psg_coefficient,
)
from .errors import SizeGuardError
from .gluing import GenusCountTable, GluingDiagram, count_maps_oracle, genus, is_connected
from .maps import e0_series, e1_series, kappa0, kappa0_assembled, kappa1
from .series import TruncatedSeries, binom, series_log, series_pow, solve_z

__version__ = "0.1.0"

__all__ = [
    "GenusCountTable",
    "GluingDiagram",
    "SizeGuardError",
    "TruncatedSeries",
    "binom",
    "catalan_by_recursion",
    "count_maps_oracle",
    "e0_series",
    "e1_series",
    "eta",
    "genus",
    "higher_catalan",
    "is_connected",
    "kappa0",
    "kappa0_assembled",
    "kappa1",
    "log_coefficient",
    "psg_coefficient",
    "series_log",
    "series_pow",
    "solve_z",
]
