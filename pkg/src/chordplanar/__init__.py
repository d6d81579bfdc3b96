"""Exact and asymptotic enumeration of chordal planar graphs and chordal planar maps."""
from .graphs import count_table, egf_sequence
from .maps import map_count_table, map_sequence
from .series import BivariateSeries, TruncatedSeries

__all__ = ["BivariateSeries", "TruncatedSeries", "count_table", "egf_sequence",
           "map_count_table", "map_sequence"]
__version__ = "0.1.0"
