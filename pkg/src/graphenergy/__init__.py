"""Energies of degree-weighted Erdos-Renyi random graphs.

Sample ``G(n, p)``, weight each edge by a degree-based chemical index
``f(d_i, d_j)``, and compare the energy of the weighted adjacency matrix
with ``f(np, np) (8 / 3 pi) sqrt(p(1-p)) n^{3/2}``.
"""

from .experiments import ExperimentConfig, ExperimentRecord, run_sweep, run_trial
from .graph import Graph, Seed, degrees, make_named, read_edgelist, sample_gnp, write_edgelist
from .predict import CLOSED_FORM, GENERAL, Prediction, argmax_p, predict_energy
from .semicircle import SemicircleLaw, catalan, ks_distance
from .spectral import (
    Spectrum,
    eigenvalues_symmetric,
    energy,
    esd,
    esd_distance,
    ky_fan_check,
    trace_moment,
    walk_moment,
)
from .weights import (
    CATALOG_IDS,
    WeightDomainError,
    WeightSpec,
    build_weighted_adjacency,
    catalog,
    center_scale,
    center_value,
    eval_weight,
    get_spec,
    uncenter,
)

__version__ = "0.1.0"

__all__ = [
    "CATALOG_IDS", "CLOSED_FORM", "GENERAL", "ExperimentConfig", "ExperimentRecord",
    "Graph", "Prediction", "Seed", "SemicircleLaw", "Spectrum", "WeightDomainError",
    "WeightSpec", "argmax_p", "build_weighted_adjacency", "catalan", "catalog",
    "center_scale", "center_value", "degrees", "eigenvalues_symmetric", "energy", "esd",
    "esd_distance", "eval_weight", "get_spec", "ks_distance", "ky_fan_check", "make_named",
    "predict_energy", "read_edgelist", "run_sweep", "run_trial", "sample_gnp",
    "trace_moment", "uncenter", "walk_moment", "write_edgelist",
]
